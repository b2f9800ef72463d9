#include "cyclat/cycle_structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cyclat {

FundamentalCycleMatrix::FundamentalCycleMatrix(const Multigraph& g,
                                               const SpanningForest& tree) {
  slot_.assign(static_cast<std::size_t>(g.edge_id_bound()), -1);
  for (const Edge& e : g.edges()) {
    if (tree.contains(e.id)) {
      slot_[e.id] = static_cast<int>(tree_edges_.size());
      tree_edges_.push_back(e.id);
    } else {
      slot_[e.id] = static_cast<int>(non_tree_edges_.size());
      non_tree_edges_.push_back(e.id);
    }
  }
  rows_.resize(tree_edges_.size());
  columns_.reserve(non_tree_edges_.size());
  paths_.reserve(non_tree_edges_.size());
  for (EdgeId e : non_tree_edges_) {
    const Edge& ed = g.edge(e);
    if (tree.component(ed.u) != tree.component(ed.v)) {
      throw InternalError("non-tree edge " + std::to_string(e) +
                          " joins different forest components");
    }
    // Root paths of both endpoints, cut at their first divergence.
    std::vector<EdgeId> path = ed.is_loop() ? std::vector<EdgeId>{} : tree.path(ed.u, ed.v);
    std::vector<EdgeId> column = path;
    std::sort(column.begin(), column.end());
    for (EdgeId t : column) rows_[slot_[t]].push_back(e);
    columns_.push_back(std::move(column));
    paths_.push_back(std::move(path));
  }
}

std::span<const EdgeId> FundamentalCycleMatrix::column(EdgeId e) const {
  if (e < 0 || static_cast<std::size_t>(e) >= slot_.size() || slot_[e] < 0 ||
      std::binary_search(tree_edges_.begin(), tree_edges_.end(), e)) {
    throw ArgumentError("edge " + std::to_string(e) + " is not a non-tree edge");
  }
  return columns_[slot_[e]];
}

std::span<const EdgeId> FundamentalCycleMatrix::path(EdgeId e) const {
  column(e);
  return paths_[slot_[e]];
}

std::span<const EdgeId> FundamentalCycleMatrix::row(EdgeId t) const {
  if (t < 0 || static_cast<std::size_t>(t) >= slot_.size() || slot_[t] < 0 ||
      !std::binary_search(tree_edges_.begin(), tree_edges_.end(), t)) {
    throw ArgumentError("edge " + std::to_string(t) + " is not a tree edge");
  }
  return rows_[slot_[t]];
}

std::vector<EdgeId> FundamentalCycleMatrix::cycle(EdgeId e) const {
  auto col = column(e);
  std::vector<EdgeId> result(col.begin(), col.end());
  result.insert(std::upper_bound(result.begin(), result.end(), e), e);
  return result;
}

std::vector<EdgeId> FundamentalCycleMatrix::cut(EdgeId t) const {
  auto r = row(t);
  std::vector<EdgeId> result(r.begin(), r.end());
  result.insert(std::upper_bound(result.begin(), result.end(), t), t);
  return result;
}

bool FundamentalCycleMatrix::entry(EdgeId t, EdgeId e) const {
  auto col = column(e);
  return std::binary_search(col.begin(), col.end(), t);
}

FundamentalCycleMatrix fundamental_cycle_matrix(const Multigraph& g,
                                                const SpanningForest& tree) {
  return FundamentalCycleMatrix(g, tree);
}

// ---------------------------------------------------------------------------

int SeriesPartition::class_of(EdgeId e) const { return class_index.at(e); }

bool SeriesPartition::is_bridge(EdgeId e) const { return class_index.at(e) < 0; }

SeriesPartition bridges_and_series_classes(const Multigraph& g) {
  return bridges_and_series_classes(g, spanning_forest(g));
}

SeriesPartition bridges_and_series_classes(const Multigraph& g,
                                           const SpanningForest& tree) {
  const FundamentalCycleMatrix x(g, tree);
  SeriesPartition part;
  part.class_index.assign(static_cast<std::size_t>(g.edge_id_bound()), -1);

  // Two edges are in series iff they lie on exactly the same fundamental cycles.
  std::map<std::vector<EdgeId>, int> by_signature;
  for (const Edge& e : g.edges()) {
    std::vector<EdgeId> signature;
    if (tree.contains(e.id)) {
      auto r = x.row(e.id);
      if (r.empty()) {
        part.bridges.push_back(e.id);
        continue;
      }
      signature.assign(r.begin(), r.end());
    } else {
      signature = {e.id};
    }
    auto [it, inserted] =
        by_signature.emplace(std::move(signature), static_cast<int>(part.classes.size()));
    if (inserted) part.classes.emplace_back();
    part.classes[it->second].push_back(e.id);
    part.class_index[e.id] = it->second;
  }
  return part;
}

std::span<const EdgeId> Cosimplification::series_class(EdgeId representative) const {
  for (const auto& [rep, members] : section) {
    if (rep == representative) return members;
  }
  throw ArgumentError("edge " + std::to_string(representative) +
                      " is not an edge of the cosimplification");
}

Cosimplification cosimplify(const Multigraph& g, const SpanningForest* tree) {
  const SpanningForest own = tree ? SpanningForest{} : spanning_forest(g);
  const SpanningForest& t = tree ? *tree : own;
  const SeriesPartition part = bridges_and_series_classes(g, t);

  Cosimplification cos;
  cos.bridges = part.bridges;
  cos.projection.assign(static_cast<std::size_t>(g.edge_id_bound()), kNoId);
  std::vector<EdgeId> representative(part.classes.size(), kNoId);
  for (std::size_t c = 0; c < part.classes.size(); ++c) {
    const auto& members = part.classes[c];
    EdgeId rep = members.front();
    if (tree) {
      auto outside = std::find_if(members.begin(), members.end(),
                                  [&](EdgeId e) { return !tree->contains(e); });
      if (outside != members.end()) rep = *outside;
    }
    representative[c] = rep;
    for (EdgeId e : members) {
      cos.projection[e] = rep;
      if (e != rep) cos.contracted.push_back(e);
    }
  }
  std::sort(cos.contracted.begin(), cos.contracted.end());
  MinorMap m = minor(g, cos.bridges, cos.contracted);
  cos.hat_graph = std::move(m.result);
  for (const Edge& e : cos.hat_graph.edges()) {
    cos.section.emplace_back(e.id, part.classes[part.class_of(e.id)]);
  }
  return cos;
}

std::optional<std::string> three_edge_connectivity_violation(const Multigraph& g) {
  if (g.num_vertices() == 0) return "graph has no vertices";
  const auto comps = connected_components(g);
  if (comps.size() != 1) {
    return "graph is disconnected (" + std::to_string(comps.size()) + " components)";
  }
  const SeriesPartition part = bridges_and_series_classes(g);
  if (!part.bridges.empty()) {
    return "edge " + std::to_string(part.bridges.front()) + " is a bridge";
  }
  for (const auto& cls : part.classes) {
    if (cls.size() > 1) {
      std::string msg = "edges {";
      for (std::size_t i = 0; i < cls.size(); ++i) {
        msg += (i ? "," : "") + std::to_string(cls[i]);
      }
      return msg + "} form a non-trivial series class";
    }
  }
  return std::nullopt;
}

bool is_three_edge_connected(const Multigraph& g) {
  return !three_edge_connectivity_violation(g).has_value();
}

// ---------------------------------------------------------------------------

bool is_cycle(const Multigraph& g, std::span<const EdgeId> edges) {
  if (edges.empty()) return false;
  std::vector<EdgeId> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  std::vector<int> degree(static_cast<std::size_t>(g.vertex_id_bound()), 0);
  std::vector<VertexId> touched;
  for (EdgeId e : sorted) {
    if (!g.has_edge(e)) return false;
    const Edge& ed = g.edge(e);
    for (VertexId x : {ed.u, ed.v}) {
      if (degree[x]++ == 0) touched.push_back(x);
    }
  }
  for (VertexId x : touched) {
    if (degree[x] != 2) return false;
  }
  // Every degree is 2, so the edge set is a disjoint union of cycles; it is a
  // single cycle iff it is connected.
  std::vector<VertexId> parent(static_cast<std::size_t>(g.vertex_id_bound()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = touched.size();
  for (EdgeId e : sorted) {
    const Edge& ed = g.edge(e);
    const VertexId a = find(ed.u), b = find(ed.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

std::vector<std::vector<EdgeId>> decompose_into_cycles(const Multigraph& g,
                                                       std::span<const EdgeId> edges) {
  const auto vbound = static_cast<std::size_t>(g.vertex_id_bound());
  std::vector<char> member(static_cast<std::size_t>(g.edge_id_bound()), 0);
  std::vector<int> degree(vbound, 0);
  for (EdgeId e : edges) {
    const Edge& ed = g.edge(e);
    if (member[e]) throw ArgumentError("edge " + std::to_string(e) + " listed twice");
    member[e] = 1;
    degree[ed.u] += 1;
    degree[ed.v] += 1;
  }
  for (std::size_t v = 0; v < vbound; ++v) {
    if (degree[v] % 2 != 0) {
      throw ArgumentError("vertex " + std::to_string(v) + " has odd degree in the edge set");
    }
  }

  std::vector<std::size_t> cursor(vbound, 0);
  auto next_edge = [&](VertexId x) -> EdgeId {
    auto inc = g.incident(x);
    while (cursor[x] < inc.size()) {
      const EdgeId e = inc[cursor[x]];
      if (member[e]) return e;
      ++cursor[x];
    }
    return kNoId;
  };

  std::vector<std::vector<EdgeId>> cycles;
  std::vector<int> position(vbound, -1);
  std::vector<EdgeId> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  for (EdgeId seed : sorted) {
    if (!member[seed]) continue;
    const VertexId start = g.edge(seed).u;
    std::vector<VertexId> walk{start};
    std::vector<EdgeId> trail;
    position[start] = 0;
    while (true) {
      const VertexId x = walk.back();
      const EdgeId e = next_edge(x);
      if (e == kNoId) break;
      member[e] = 0;
      const VertexId y = g.opposite(e, x);
      if (position[y] >= 0) {
        const auto p = static_cast<std::size_t>(position[y]);
        std::vector<EdgeId> cycle(trail.begin() + static_cast<std::ptrdiff_t>(p), trail.end());
        cycle.push_back(e);
        std::sort(cycle.begin(), cycle.end());
        cycles.push_back(std::move(cycle));
        for (std::size_t j = p + 1; j < walk.size(); ++j) position[walk[j]] = -1;
        walk.resize(p + 1);
        trail.resize(p);
      } else {
        position[y] = static_cast<int>(walk.size());
        walk.push_back(y);
        trail.push_back(e);
      }
    }
    if (walk.size() != 1) throw InternalError("cycle decomposition left an open trail");
    position[start] = -1;
  }
  return cycles;
}

}  // namespace cyclat
