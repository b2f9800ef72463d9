#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyclat/types.hpp"

namespace cyclat {

struct Edge {
  EdgeId id = kNoId;
  VertexId u = kNoId;
  VertexId v = kNoId;

  bool is_loop() const noexcept { return u == v; }
  bool operator==(const Edge&) const = default;
};

/// Undirected multigraph with loops and parallel edges.
///
/// Vertices and edges are kept sorted by identifier; identifiers may be
/// sparse (minors and extensions keep the ids of surviving elements). The
/// incidence list of a vertex is sorted by edge id and lists a loop once.
/// Instances are immutable after construction.
class Multigraph {
 public:
  Multigraph() = default;

  /// Throws ArgumentError on duplicate ids, negative ids or dangling endpoints.
  /// `labels`, when non-empty, is parallel to `vertices`.
  Multigraph(std::vector<VertexId> vertices, std::vector<Edge> edges,
             std::vector<std::string> labels = {});

  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const VertexId> vertices() const noexcept { return vertices_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::vector<EdgeId> edge_ids() const;

  bool has_vertex(VertexId v) const noexcept;
  bool has_edge(EdgeId e) const noexcept;

  const Edge& edge(EdgeId e) const;
  /// Dense position of a vertex / edge in the sorted order.
  std::size_t vertex_index(VertexId v) const;
  std::size_t edge_index(EdgeId e) const;

  std::span<const EdgeId> incident(VertexId v) const;
  /// Non-loop incidences plus twice the loops.
  int degree(VertexId v) const;
  VertexId opposite(EdgeId e, VertexId v) const;

  /// Token the vertex was parsed from, or its decimal id.
  std::string label(VertexId v) const;
  std::span<const std::string> labels() const noexcept { return labels_; }

  /// One past the largest id in use (0 for an empty graph).
  VertexId vertex_id_bound() const noexcept {
    return static_cast<VertexId>(vertex_pos_.size());
  }
  EdgeId edge_id_bound() const noexcept {
    return static_cast<EdgeId>(edge_pos_.size());
  }

  bool operator==(const Multigraph& other) const;

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::vector<int> vertex_pos_;
  std::vector<int> edge_pos_;
  std::vector<std::size_t> adj_offsets_;
  std::vector<EdgeId> adj_;
  std::vector<int> degree_;
};

/// Parses the edge-list document format:
///   first non-comment line "n m", then m lines "u v" or "u v id";
///   '#' starts a comment. Vertex tokens are ordered numerically when all are
///   non-negative integers, otherwise by first appearance.
Multigraph parse_edge_list(std::string_view text);
Multigraph read_edge_list_file(const std::string& path);

/// Inverse of parse_edge_list; always writes explicit edge ids.
std::string format_edge_list(const Multigraph& g);

/// Same vertex ids and, for every edge id, the same unordered endpoint pair.
/// Labels are ignored.
bool same_edges(const Multigraph& a, const Multigraph& b);

/// Renumbers vertices to 0..n-1 and edges to 0..m-1 preserving order.
Multigraph compact(const Multigraph& g);

/// Vertex sets of the connected components, ordered by least vertex.
std::vector<std::vector<VertexId>> connected_components(const Multigraph& g);
bool is_connected(const Multigraph& g);

/// Subgraph induced by `vertices`; ids are preserved.
Multigraph induced_subgraph(const Multigraph& g, std::span<const VertexId> vertices);

/// Breadth-first spanning forest. Vertex arrays are indexed by VertexId.
class SpanningForest {
 public:
  SpanningForest() = default;

  /// Validates that `tree_edges` is a loop-free acyclic spanning forest of `g`
  /// and roots each component at `root` (if it lies there) or its least vertex.
  static SpanningForest from_edges(const Multigraph& g,
                                   std::span<const EdgeId> tree_edges,
                                   std::optional<VertexId> root = std::nullopt);

  std::span<const EdgeId> tree_edges() const noexcept { return tree_edges_; }
  std::span<const VertexId> component_roots() const noexcept { return roots_; }
  /// Vertices in breadth-first order, component by component.
  std::span<const VertexId> order() const noexcept { return order_; }

  bool contains(EdgeId e) const noexcept;
  std::size_t size() const noexcept { return tree_edges_.size(); }

  VertexId parent(VertexId v) const { return parent_.at(v); }
  EdgeId parent_edge(VertexId v) const { return parent_edge_.at(v); }
  int depth(VertexId v) const { return depth_.at(v); }
  int component(VertexId v) const { return component_.at(v); }

  /// Tree edges on the unique path between u and v (same component).
  std::vector<EdgeId> path(VertexId u, VertexId v) const;

 private:
  friend SpanningForest spanning_forest(const Multigraph&, std::optional<VertexId>);
  static SpanningForest build(const Multigraph& g, const std::vector<char>& in_tree,
                              std::optional<VertexId> root);

  std::vector<EdgeId> tree_edges_;
  std::vector<VertexId> roots_;
  std::vector<VertexId> order_;
  std::vector<char> in_tree_;
  std::vector<VertexId> parent_;
  std::vector<EdgeId> parent_edge_;
  std::vector<int> depth_;
  std::vector<int> component_;
};

/// Deterministic BFS forest: components are started from `root` first (if
/// given), then from the least unvisited vertex; incident edges are scanned
/// in edge-id order. Loops are never selected.
SpanningForest spanning_forest(const Multigraph& g,
                               std::optional<VertexId> root = std::nullopt);

/// Longest path (in edges) inside each tree component, aligned with
/// `component_roots()`.
std::vector<int> tree_diameter(const Multigraph& g, const SpanningForest& forest);

struct MinorMap {
  Multigraph result;
  std::vector<EdgeId> deleted;
  std::vector<EdgeId> contracted;
  /// Indexed by VertexId of the parent graph; merged classes map to their
  /// least vertex.
  std::vector<VertexId> vertex_image;

  VertexId image(VertexId v) const { return vertex_image.at(v); }
};

/// G \ delete / contract. Order-independent; contracting a loop deletes it.
MinorMap minor(const Multigraph& g, std::span<const EdgeId> deleted,
               std::span<const EdgeId> contracted);

struct PathSystem {
  std::vector<std::vector<EdgeId>> paths;  // each oriented from u to v
  bool complete = false;                   // paths.size() == requested k
  int maximum() const noexcept { return static_cast<int>(paths.size()); }
};

/// Up to k pairwise edge-disjoint u-v paths by unit-capacity augmentation.
/// When fewer exist, `paths` holds a maximum family and `complete` is false.
PathSystem edge_disjoint_paths(const Multigraph& g, VertexId u, VertexId v, int k);

/// Simple path between u and v avoiding `excluded` edges, found by BFS that
/// scans incident edges in id order. Empty optional if none exists.
std::optional<std::vector<EdgeId>> bfs_path(const Multigraph& g, VertexId u,
                                            VertexId v,
                                            std::span<const EdgeId> excluded = {});

}  // namespace cyclat
