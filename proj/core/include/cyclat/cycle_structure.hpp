#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cyclat/multigraph.hpp"

namespace cyclat {

/// The T x (E \ T) incidence matrix X with X[t][e] = 1 iff t lies on the
/// fundamental cycle of e. Columns are the fundamental cycles (minus their
/// non-tree edge); rows are the fundamental cuts (minus their tree edge).
class FundamentalCycleMatrix {
 public:
  FundamentalCycleMatrix() = default;
  FundamentalCycleMatrix(const Multigraph& g, const SpanningForest& tree);

  std::span<const EdgeId> tree_edges() const noexcept { return tree_edges_; }
  std::span<const EdgeId> non_tree_edges() const noexcept { return non_tree_edges_; }

  /// Tree edges of ci(e, T) in id order; empty for a loop.
  std::span<const EdgeId> column(EdgeId e) const;
  /// Tree edges of ci(e, T) ordered along the path from e.u to e.v.
  std::span<const EdgeId> path(EdgeId e) const;
  /// Non-tree edges whose fundamental cycle passes through t, in id order.
  std::span<const EdgeId> row(EdgeId t) const;

  /// ci(e, T) including e, in id order.
  std::vector<EdgeId> cycle(EdgeId e) const;
  /// bo(t, T) including t, in id order.
  std::vector<EdgeId> cut(EdgeId t) const;
  bool entry(EdgeId t, EdgeId e) const;

 private:
  std::vector<EdgeId> tree_edges_;
  std::vector<EdgeId> non_tree_edges_;
  std::vector<int> slot_;  // edge id -> row or column index
  std::vector<std::vector<EdgeId>> columns_;
  std::vector<std::vector<EdgeId>> paths_;
  std::vector<std::vector<EdgeId>> rows_;
};

FundamentalCycleMatrix fundamental_cycle_matrix(const Multigraph& g,
                                                const SpanningForest& tree);

struct SeriesPartition {
  std::vector<EdgeId> bridges;
  /// Series classes of the non-bridge edges; each sorted, ordered by least id.
  std::vector<std::vector<EdgeId>> classes;

  /// Index into `classes`, or -1 for a bridge.
  int class_of(EdgeId e) const;
  bool is_bridge(EdgeId e) const;
  std::vector<int> class_index;  // indexed by EdgeId
};

/// Bridges are the all-zero rows of X; series classes are the common
/// refinement of {C, E \ C} over all fundamental cycles C.
SeriesPartition bridges_and_series_classes(const Multigraph& g);
SeriesPartition bridges_and_series_classes(const Multigraph& g,
                                           const SpanningForest& tree);

struct Cosimplification {
  Multigraph hat_graph;
  /// Indexed by EdgeId of G: the representative edge in hat_graph, or kNoId
  /// (the formal symbol epsilon) for bridges.
  std::vector<EdgeId> projection;
  /// Representatives in hat_graph order, with the full series class each stands for.
  std::vector<std::pair<EdgeId, std::vector<EdgeId>>> section;
  std::vector<EdgeId> contracted;
  std::vector<EdgeId> bridges;

  EdgeId project(EdgeId e) const { return projection.at(e); }
  std::span<const EdgeId> series_class(EdgeId representative) const;
};

/// Deletes bridges and contracts all but one edge of each non-trivial series
/// class. With a spanning forest, only forest edges are contracted and a class
/// keeps its non-tree edge when it has one; otherwise the least id survives.
Cosimplification cosimplify(const Multigraph& g,
                            const SpanningForest* tree = nullptr);

/// Connected, bridge-free, and every series class trivial. A single vertex
/// (with or without loops) qualifies.
bool is_three_edge_connected(const Multigraph& g);

/// Human-readable reason G is not 3-edge-connected, or nullopt if it is.
std::optional<std::string> three_edge_connectivity_violation(const Multigraph& g);

/// True iff `edges` is a simple cycle: non-empty, connected, every touched
/// vertex of degree two (a loop contributes two), no repeated edge.
bool is_cycle(const Multigraph& g, std::span<const EdgeId> edges);

/// Splits an edge set in which every vertex has even degree into
/// edge-disjoint simple cycles (greedy walk, cut at the first repeated
/// vertex). Throws ArgumentError if some degree is odd.
std::vector<std::vector<EdgeId>> decompose_into_cycles(const Multigraph& g,
                                                       std::span<const EdgeId> edges);

}  // namespace cyclat
