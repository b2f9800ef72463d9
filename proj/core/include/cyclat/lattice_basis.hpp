#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyclat/cycle_structure.hpp"
#include "cyclat/edge_vector.hpp"
#include "cyclat/multigraph.hpp"

namespace cyclat {

/// Throws PreconditionError naming the offending bridge, series class or
/// disconnection unless g is 3-edge-connected.
void require_three_edge_connected(const Multigraph& g);

/// C_T together with X_T = {2 chi_t : t in T}.
struct SimpleBasis {
  SpanningForest tree;
  /// (non-tree edge e, ci(e, T) in id order), ordered by e.
  std::vector<std::pair<EdgeId, std::vector<EdgeId>>> cycle_part;
  std::vector<EdgeId> doubled_part;

  /// Cycle vectors followed by the doubled tree edges.
  std::vector<EdgeVector> vectors(const Multigraph& g) const;
};

SimpleBasis simple_basis(const Multigraph& g, const SpanningForest& tree);

/// 2^(n-1) for a 3-edge-connected graph.
Integer lattice_determinant(const Multigraph& g);

struct MembershipCertificate {
  bool member = false;
  /// Why membership fails; empty for members.
  std::string reason;
  /// Disjoint cycles covering the edges with odd coordinate.
  std::vector<std::vector<EdgeId>> odd_cycles;
  /// p minus the odd cycles; every coordinate even.
  EdgeVector even_part;
};

/// Zero on bridges, constant on every series class, and even at every vertex
/// (a loop counts twice).
MembershipCertificate is_lattice_member(const Multigraph& g, const EdgeVector& p);

struct SimpleCoordinates {
  /// Coefficient of ci(e, T), aligned with SimpleBasis::cycle_part.
  std::vector<Integer> cycle;
  /// Coefficient alpha_t of 2 chi_t, aligned with SimpleBasis::doubled_part.
  std::vector<Integer> doubled;
};

/// Coordinates of a lattice member in simple_basis(g, tree). The cycle
/// coefficient of e is p_e and alpha_t = (p_t - S_t) / 2 where S_t sums p over
/// bo(t, T) minus t. Throws MembershipError for non-members.
SimpleCoordinates express_in_simple_basis(const Multigraph& g, const SpanningForest& tree,
                                          const EdgeVector& p);

EdgeVector reassemble(const Multigraph& g, const SimpleBasis& basis,
                      const SimpleCoordinates& coords);

struct SignedCycle {
  int coefficient = 0;
  std::vector<EdgeId> edges;
};

/// Cycles whose signed sum is 2 chi_e: P+e and Q+e for two edge-disjoint
/// paths in G - e, minus a cycle decomposition of P and Q together.
std::vector<SignedCycle> double_edge_combination(const Multigraph& g, EdgeId e);

enum class CycleOrigin { fundamental, semi_fundamental, extension };

struct Provenance {
  CycleOrigin origin = CycleOrigin::fundamental;
  EdgeId edge = kNoId;       // defining non-tree edge / new extension edge
  EdgeId partner = kNoId;    // second non-tree edge of a semi-fundamental pair
  EdgeId tree_edge = kNoId;  // t_k of a semi-fundamental pair
  int step = -1;             // 1-based extension step
  char extension_case = 0;   // 'A', 'B' or 'C'
  bool lifted = false;

  std::string tag() const;
  bool operator==(const Provenance&) const = default;
};

struct CycleBasis {
  std::vector<std::vector<EdgeId>> cycles;  // each sorted by id
  std::vector<Provenance> provenance;
  std::optional<SpanningForest> tree;

  std::size_t size() const noexcept { return cycles.size(); }
  std::vector<EdgeVector> vectors(const Multigraph& g) const;
};

/// Fundamental cycles of T, one per non-tree edge in id order.
CycleBasis fundamental_cycles(const Multigraph& g, const SpanningForest& tree);

struct SemiFundamentalStep {
  EdgeId tree_edge = kNoId;  // t_k
  EdgeId e = kNoId;          // e_k < f_k
  EdgeId f = kNoId;
  /// Reconnecting edge of the exchange that produced this pair, or kNoId when
  /// the pair is a seed.
  EdgeId reconnecting = kNoId;
};

struct SemiFundamentalResult {
  CycleBasis basis;
  /// One step per tree edge, in contraction order.
  std::vector<SemiFundamentalStep> steps;
  std::size_t exchanges = 0;
  bool lifted = false;
};

/// Lattice cycle basis semi-fundamental with respect to `tree`. Graphs that
/// are connected but not 3-edge-connected go through the cosimplification
/// that contracts only tree edges, and the result is lifted back.
SemiFundamentalResult semi_fundamental_basis(const Multigraph& g, const SpanningForest& tree);

/// Replaces every representative edge by its series class. One basis per
/// connected component of cos.hat_graph, in connected_components order.
CycleBasis lift_basis(const Multigraph& g, const Cosimplification& cos,
                      std::span<const CycleBasis> component_bases);

/// Symmetric difference of two fundamental cycles, in id order.
std::vector<EdgeId> semi_fundamental_cycle(const FundamentalCycleMatrix& x, EdgeId e, EdgeId f);

/// Absolute determinant of the square indicator matrix of `cycles`.
Integer basis_determinant(const Multigraph& g, std::span<const std::vector<EdgeId>> cycles);

}  // namespace cyclat
