#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <cyclat/cyclat.hpp>

// Slow reference implementations used only to cross-check the library. None
// of them share code with the routines they check.
namespace cyclat::testing {

using Rational = boost::multiprecision::cpp_rational;

/// Cofactor expansion along the first row; n <= 9.
Integer cofactor_determinant(const std::vector<std::vector<Integer>>& m);
std::vector<std::vector<Integer>> to_rows(const IntegerMatrix& m);

/// Gaussian elimination over the rationals.
Integer rational_determinant(const IntegerMatrix& m);

/// Solution of A x = b for A with full column rank, or nullopt when the
/// system is inconsistent.
std::optional<std::vector<Rational>> rational_solve(const IntegerMatrix& a,
                                                    const std::vector<Integer>& b);

/// v is an integer combination of the (independent) columns of `basis`.
bool in_lattice_of(const IntegerMatrix& basis, const std::vector<Integer>& v);

/// Columns of both matrices generate the same lattice; both must have
/// independent columns.
bool same_lattice(const IntegerMatrix& a, const IntegerMatrix& b);

/// Every edge subset that forms a cycle (degree two everywhere, connected).
std::vector<std::vector<EdgeId>> brute_force_cycles(const Multigraph& g);

/// Connected after deleting any set of at most two edges.
bool brute_force_three_edge_connected(const Multigraph& g);

/// |{sum a_i v_i : a_i in Z/q_1 x ... x Z/q_r}| by direct enumeration.
std::size_t brute_force_span_size(const std::vector<std::vector<int>>& vectors,
                                  const std::vector<int>& factor_orders);

/// Rank mod p from the size of the span, found by enumeration.
std::size_t brute_force_rank_mod_p(const std::vector<std::vector<int>>& vectors, int p);

/// Longest shortest path inside the tree, by BFS from every vertex.
int brute_force_tree_diameter(const Multigraph& g, const SpanningForest& tree);

std::vector<std::vector<int>> small_vectors(const Multigraph& g,
                                            const std::vector<std::vector<EdgeId>>& cycles);

}  // namespace cyclat::testing
