#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cyclat/edge_vector.hpp"
#include "cyclat/multigraph.hpp"

namespace cyclat {

/// Dense row-major matrix of arbitrary-precision integers. Lattice generators
/// are stored as columns throughout.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<std::vector<long long>>& rows);
  /// Columns are the given vectors; all must have length `rows`.
  static IntegerMatrix from_columns(std::size_t rows, std::span<const EdgeVector> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Integer> column(std::size_t c) const;
  bool operator==(const IntegerMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Columns are the indicator vectors of the given edge sets, rows follow the
/// dense edge order of g.
IntegerMatrix indicator_matrix(const Multigraph& g,
                               std::span<const std::vector<EdgeId>> cycles);

/// All simple cycles (loops and parallel 2-cycles included), each as a sorted
/// edge-id list; the list is sorted. Throws CapacityError past `limit`.
std::vector<std::vector<EdgeId>> enumerate_cycles(const Multigraph& g,
                                                  std::size_t limit = 100000);

/// Fraction-free Gaussian elimination (Bareiss) with row pivoting.
Integer exact_determinant(const IntegerMatrix& m);

/// Column-style Hermite normal form: the non-zero columns of the result form a
/// basis of the column lattice, each column's first non-zero entry (its
/// pivot) is positive, pivot rows strictly increase from left to right, and
/// every entry in a pivot row to the left of the pivot lies in [0, pivot).
IntegerMatrix hermite_normal_form(const IntegerMatrix& m);

/// True iff the column lattices of a and b coincide.
bool hnf_lattices_equal(const IntegerMatrix& a, const IntegerMatrix& b);

/// Membership of v in the lattice spanned by the columns of a matrix already
/// in Hermite normal form.
bool hnf_contains(const IntegerMatrix& hnf, std::span<const Integer> v);

/// Rank over GF(p). Throws ArgumentError unless p is prime.
std::size_t rank_mod_p(const IntegerMatrix& m, std::uint64_t p);
/// Rank over the rationals.
std::size_t rank_rational(const IntegerMatrix& m);

bool is_prime(std::uint64_t p);

/// A finite Abelian group given by the orders of its cyclic factors.
struct FiniteAbelianGroup {
  std::vector<std::uint64_t> factor_orders;

  std::uint64_t order() const;
};

/// Size of the subgroup of A^E generated by {a * v : a in A, v in vectors},
/// found by breadth-first closure. Throws CapacityError when |A|^|E| exceeds
/// `cap`.
std::uint64_t group_span_size(std::size_t num_edges, std::span<const EdgeVector> vectors,
                              const FiniteAbelianGroup& group,
                              std::uint64_t cap = 10'000'000);

}  // namespace cyclat
