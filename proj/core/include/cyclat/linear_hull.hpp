#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cyclat/lattice_basis.hpp"
#include "cyclat/oracle.hpp"

namespace cyclat {

/// Characteristic of a field: 0 (the rationals) or a prime.
struct FieldSpec {
  std::uint64_t characteristic = 0;
};

/// Finite Abelian group as a list of cyclic factors C_{p^k}.
struct PrimePowerFactor {
  std::uint64_t prime = 2;
  int exponent = 1;

  std::uint64_t order() const;
  bool operator==(const PrimePowerFactor&) const = default;
  auto operator<=>(const PrimePowerFactor&) const = default;
};

struct AbelianGroupSpec {
  std::vector<PrimePowerFactor> factors;

  Integer order() const;
  FiniteAbelianGroup as_finite_group() const;
  /// "C2^1 + C4^2" style summary, factors grouped and sorted.
  std::string describe() const;
};

/// Parses "p^k,q^l,..." or plain prime powers such as "4,3".
AbelianGroupSpec parse_group_spec(std::string_view text);
FieldSpec parse_field_spec(std::string_view text);

/// m for characteristic other than 2 (including 0), m - n + 1 for 2.
std::size_t hull_dimension(const Multigraph& g, FieldSpec field);

/// (2A)^(n-1) + A^(m-n+1) decomposed into cyclic prime-power factors.
AbelianGroupSpec hull_group_structure(const Multigraph& g, const AbelianGroupSpec& group);

struct HullReport {
  std::size_t dimension = 0;
  AbelianGroupSpec structure;
  /// True when the graph was not 3-edge-connected and the value comes from
  /// the components of its cosimplification.
  bool derived = false;
  std::size_t bridges = 0;
  std::size_t series_classes = 0;
};

/// Same formulas for any graph: bridges are dropped and series classes
/// collapsed, then the components of the cosimplification are summed.
HullReport hull_dimension_report(const Multigraph& g, FieldSpec field);
HullReport hull_group_report(const Multigraph& g, const AbelianGroupSpec& group);

/// Reductions mod p of a lattice basis (all cycles for p != 2; for p = 2 the
/// fundamental cycles, or an independent subset when none are tagged).
/// Entries lie in [0, p). Throws InternalError if the rank falls short.
IntegerMatrix hull_basis_mod_p(const Multigraph& g, FieldSpec field, const CycleBasis& basis);
IntegerMatrix hull_basis_mod_p(const Multigraph& g, FieldSpec field, const SimpleBasis& basis);

}  // namespace cyclat
