#include "cyclat/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <queue>

namespace cyclat {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Keeps the smaller root so classes are represented by their least member.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

Multigraph::Multigraph(std::vector<VertexId> vertices, std::vector<Edge> edges,
                       std::vector<std::string> labels)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (!labels.empty() && labels.size() != vertices_.size()) {
    throw ArgumentError("label count does not match vertex count");
  }
  // Sort vertices together with their labels.
  std::vector<std::size_t> perm(vertices_.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return vertices_[a] < vertices_[b]; });
  std::vector<VertexId> sorted_vertices;
  sorted_vertices.reserve(perm.size());
  labels_.reserve(perm.size());
  for (std::size_t i : perm) {
    sorted_vertices.push_back(vertices_[i]);
    labels_.push_back(labels.empty() ? std::string() : std::move(labels[i]));
  }
  vertices_ = std::move(sorted_vertices);

  VertexId vmax = -1;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] < 0) throw ArgumentError("negative vertex id");
    if (i > 0 && vertices_[i] == vertices_[i - 1]) {
      throw ArgumentError("duplicate vertex id " + std::to_string(vertices_[i]));
    }
    vmax = std::max(vmax, vertices_[i]);
  }
  vertex_pos_.assign(static_cast<std::size_t>(vmax + 1), -1);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    vertex_pos_[vertices_[i]] = static_cast<int>(i);
  }

  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  EdgeId emax = -1;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.id < 0) throw ArgumentError("negative edge id");
    if (i > 0 && e.id == edges_[i - 1].id) {
      throw ArgumentError("duplicate edge id " + std::to_string(e.id));
    }
    if (!has_vertex(e.u) || !has_vertex(e.v)) {
      throw ArgumentError("edge " + std::to_string(e.id) + " has an unknown endpoint");
    }
    emax = std::max(emax, e.id);
  }
  edge_pos_.assign(static_cast<std::size_t>(emax + 1), -1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    edge_pos_[edges_[i].id] = static_cast<int>(i);
  }

  // CSR incidence lists in edge-id order.
  std::vector<std::size_t> count(vertices_.size(), 0);
  degree_.assign(vertices_.size(), 0);
  for (const Edge& e : edges_) {
    const auto pu = static_cast<std::size_t>(vertex_pos_[e.u]);
    const auto pv = static_cast<std::size_t>(vertex_pos_[e.v]);
    ++count[pu];
    degree_[pu] += 1;
    degree_[pv] += 1;
    if (!e.is_loop()) ++count[pv];
  }
  adj_offsets_.assign(vertices_.size() + 1, 0);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    adj_offsets_[i + 1] = adj_offsets_[i] + count[i];
  }
  adj_.resize(adj_offsets_.back());
  std::vector<std::size_t> fill(adj_offsets_.begin(), adj_offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adj_[fill[vertex_pos_[e.u]]++] = e.id;
    if (!e.is_loop()) adj_[fill[vertex_pos_[e.v]]++] = e.id;
  }
}

std::vector<EdgeId> Multigraph::edge_ids() const {
  std::vector<EdgeId> ids;
  ids.reserve(edges_.size());
  for (const Edge& e : edges_) ids.push_back(e.id);
  return ids;
}

bool Multigraph::has_vertex(VertexId v) const noexcept {
  return v >= 0 && static_cast<std::size_t>(v) < vertex_pos_.size() && vertex_pos_[v] >= 0;
}

bool Multigraph::has_edge(EdgeId e) const noexcept {
  return e >= 0 && static_cast<std::size_t>(e) < edge_pos_.size() && edge_pos_[e] >= 0;
}

const Edge& Multigraph::edge(EdgeId e) const { return edges_[edge_index(e)]; }

std::size_t Multigraph::vertex_index(VertexId v) const {
  if (!has_vertex(v)) throw ArgumentError("unknown vertex id " + std::to_string(v));
  return static_cast<std::size_t>(vertex_pos_[v]);
}

std::size_t Multigraph::edge_index(EdgeId e) const {
  if (!has_edge(e)) throw ArgumentError("unknown edge id " + std::to_string(e));
  return static_cast<std::size_t>(edge_pos_[e]);
}

std::span<const EdgeId> Multigraph::incident(VertexId v) const {
  const std::size_t p = vertex_index(v);
  return std::span<const EdgeId>(adj_).subspan(adj_offsets_[p],
                                               adj_offsets_[p + 1] - adj_offsets_[p]);
}

int Multigraph::degree(VertexId v) const { return degree_[vertex_index(v)]; }

VertexId Multigraph::opposite(EdgeId e, VertexId v) const {
  const Edge& ed = edge(e);
  if (ed.u == v) return ed.v;
  if (ed.v == v) return ed.u;
  throw ArgumentError("vertex " + std::to_string(v) + " is not an endpoint of edge " +
                      std::to_string(e));
}

std::string Multigraph::label(VertexId v) const {
  const std::string& l = labels_[vertex_index(v)];
  return l.empty() ? std::to_string(v) : l;
}

bool Multigraph::operator==(const Multigraph& other) const {
  return vertices_ == other.vertices_ && edges_ == other.edges_;
}

bool same_edges(const Multigraph& a, const Multigraph& b) {
  if (!std::ranges::equal(a.vertices(), b.vertices()) || a.num_edges() != b.num_edges()) {
    return false;
  }
  for (std::size_t i = 0; i < a.num_edges(); ++i) {
    const Edge& x = a.edges()[i];
    const Edge& y = b.edges()[i];
    if (x.id != y.id || std::minmax(x.u, x.v) != std::minmax(y.u, y.v)) return false;
  }
  return true;
}

Multigraph compact(const Multigraph& g) {
  std::vector<VertexId> vmap(static_cast<std::size_t>(g.vertex_id_bound()), kNoId);
  std::vector<VertexId> vertices;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    vmap[g.vertices()[i]] = static_cast<VertexId>(i);
    vertices.push_back(static_cast<VertexId>(i));
    labels.push_back(g.labels()[i]);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    edges.push_back({static_cast<EdgeId>(i), vmap[e.u], vmap[e.v]});
  }
  return Multigraph(std::move(vertices), std::move(edges), std::move(labels));
}

std::vector<std::vector<VertexId>> connected_components(const Multigraph& g) {
  std::vector<std::vector<VertexId>> components;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_id_bound()), 0);
  for (VertexId start : g.vertices()) {
    if (seen[start]) continue;
    std::vector<VertexId> comp{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      const VertexId x = comp[head];
      for (EdgeId e : g.incident(x)) {
        const VertexId y = g.opposite(e, x);
        if (!seen[y]) {
          seen[y] = 1;
          comp.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

bool is_connected(const Multigraph& g) { return connected_components(g).size() == 1; }

Multigraph induced_subgraph(const Multigraph& g, std::span<const VertexId> vertices) {
  std::vector<char> keep(static_cast<std::size_t>(g.vertex_id_bound()), 0);
  std::vector<VertexId> vs;
  std::vector<std::string> labels;
  for (VertexId v : vertices) {
    const std::size_t p = g.vertex_index(v);
    if (keep[v]) continue;
    keep[v] = 1;
    vs.push_back(v);
    labels.push_back(g.labels()[p]);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (keep[e.u] && keep[e.v]) edges.push_back(e);
  }
  return Multigraph(std::move(vs), std::move(edges), std::move(labels));
}

// ---------------------------------------------------------------------------
// Spanning forests

bool SpanningForest::contains(EdgeId e) const noexcept {
  return e >= 0 && static_cast<std::size_t>(e) < in_tree_.size() && in_tree_[e];
}

SpanningForest SpanningForest::build(const Multigraph& g, const std::vector<char>& in_tree,
                                     std::optional<VertexId> root) {
  SpanningForest f;
  const auto vbound = static_cast<std::size_t>(g.vertex_id_bound());
  f.in_tree_ = in_tree;
  f.in_tree_.resize(static_cast<std::size_t>(g.edge_id_bound()), 0);
  f.parent_.assign(vbound, kNoId);
  f.parent_edge_.assign(vbound, kNoId);
  f.depth_.assign(vbound, -1);
  f.component_.assign(vbound, -1);

  std::vector<VertexId> starts;
  if (root) starts.push_back(*root);
  starts.insert(starts.end(), g.vertices().begin(), g.vertices().end());

  for (VertexId s : starts) {
    if (f.depth_[s] >= 0) continue;
    const int comp = static_cast<int>(f.roots_.size());
    f.roots_.push_back(s);
    f.depth_[s] = 0;
    f.component_[s] = comp;
    const std::size_t head0 = f.order_.size();
    f.order_.push_back(s);
    for (std::size_t head = head0; head < f.order_.size(); ++head) {
      const VertexId x = f.order_[head];
      for (EdgeId e : g.incident(x)) {
        if (!f.in_tree_[e]) continue;
        const VertexId y = g.opposite(e, x);
        if (f.depth_[y] >= 0) continue;
        f.depth_[y] = f.depth_[x] + 1;
        f.parent_[y] = x;
        f.parent_edge_[y] = e;
        f.component_[y] = comp;
        f.order_.push_back(y);
      }
    }
  }
  for (const Edge& e : g.edges()) {
    if (f.in_tree_[e.id]) f.tree_edges_.push_back(e.id);
  }
  return f;
}

SpanningForest SpanningForest::from_edges(const Multigraph& g,
                                          std::span<const EdgeId> tree_edges,
                                          std::optional<VertexId> root) {
  if (root && !g.has_vertex(*root)) throw ArgumentError("unknown root vertex");
  std::vector<char> in_tree(static_cast<std::size_t>(g.edge_id_bound()), 0);
  DisjointSets sets(static_cast<std::size_t>(g.vertex_id_bound()));
  for (EdgeId e : tree_edges) {
    const Edge& ed = g.edge(e);
    if (in_tree[e]) throw ArgumentError("tree edge listed twice: " + std::to_string(e));
    if (ed.is_loop()) throw ArgumentError("a loop cannot be a forest edge");
    if (!sets.unite(ed.u, ed.v)) {
      throw ArgumentError("tree edges contain a cycle through edge " + std::to_string(e));
    }
    in_tree[e] = 1;
  }
  for (const Edge& e : g.edges()) {
    if (sets.find(e.u) != sets.find(e.v)) {
      throw ArgumentError("tree edges do not span the component of edge " +
                          std::to_string(e.id));
    }
  }
  return build(g, in_tree, root);
}

SpanningForest spanning_forest(const Multigraph& g, std::optional<VertexId> root) {
  if (root && !g.has_vertex(*root)) throw ArgumentError("unknown root vertex");
  std::vector<char> in_tree(static_cast<std::size_t>(g.edge_id_bound()), 0);
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_id_bound()), 0);
  std::vector<VertexId> starts;
  if (root) starts.push_back(*root);
  starts.insert(starts.end(), g.vertices().begin(), g.vertices().end());
  std::deque<VertexId> queue;
  for (VertexId s : starts) {
    if (seen[s]) continue;
    seen[s] = 1;
    queue.push_back(s);
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      for (EdgeId e : g.incident(x)) {
        const VertexId y = g.opposite(e, x);
        if (seen[y]) continue;
        seen[y] = 1;
        in_tree[e] = 1;
        queue.push_back(y);
      }
    }
  }
  return SpanningForest::build(g, in_tree, root);
}

std::vector<EdgeId> SpanningForest::path(VertexId u, VertexId v) const {
  if (component(u) != component(v)) {
    throw ArgumentError("vertices lie in different tree components");
  }
  std::vector<EdgeId> from_u;
  std::vector<EdgeId> from_v;
  while (depth(u) > depth(v)) {
    from_u.push_back(parent_edge(u));
    u = parent(u);
  }
  while (depth(v) > depth(u)) {
    from_v.push_back(parent_edge(v));
    v = parent(v);
  }
  while (u != v) {
    from_u.push_back(parent_edge(u));
    u = parent(u);
    from_v.push_back(parent_edge(v));
    v = parent(v);
  }
  from_u.insert(from_u.end(), from_v.rbegin(), from_v.rend());
  return from_u;
}

std::vector<int> tree_diameter(const Multigraph& g, const SpanningForest& forest) {
  const auto vbound = static_cast<std::size_t>(g.vertex_id_bound());
  std::vector<int> dist(vbound, -1);
  // BFS inside the tree from `s`; returns the farthest vertex and its distance.
  auto farthest = [&](VertexId s) {
    std::vector<VertexId> visited{s};
    dist[s] = 0;
    VertexId best = s;
    for (std::size_t head = 0; head < visited.size(); ++head) {
      const VertexId x = visited[head];
      if (dist[x] > dist[best]) best = x;
      for (EdgeId e : g.incident(x)) {
        if (!forest.contains(e)) continue;
        const VertexId y = g.opposite(e, x);
        if (dist[y] >= 0) continue;
        dist[y] = dist[x] + 1;
        visited.push_back(y);
      }
    }
    const int d = dist[best];
    for (VertexId x : visited) dist[x] = -1;
    return std::pair{best, d};
  };
  std::vector<int> result;
  for (VertexId root : forest.component_roots()) {
    const auto [far, ignored] = farthest(root);
    (void)ignored;
    result.push_back(farthest(far).second);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Minors

MinorMap minor(const Multigraph& g, std::span<const EdgeId> deleted,
               std::span<const EdgeId> contracted) {
  std::vector<char> status(static_cast<std::size_t>(g.edge_id_bound()), 0);
  for (EdgeId e : deleted) {
    if (!g.has_edge(e)) throw ArgumentError("unknown edge id " + std::to_string(e));
    status[e] = 1;
  }
  for (EdgeId e : contracted) {
    if (!g.has_edge(e)) throw ArgumentError("unknown edge id " + std::to_string(e));
    if (status[e] == 1) {
      throw ArgumentError("edge " + std::to_string(e) + " is both deleted and contracted");
    }
    status[e] = 2;
  }

  DisjointSets sets(static_cast<std::size_t>(g.vertex_id_bound()));
  for (EdgeId e : contracted) {
    const Edge& ed = g.edge(e);
    sets.unite(ed.u, ed.v);
  }

  MinorMap map;
  map.vertex_image.assign(static_cast<std::size_t>(g.vertex_id_bound()), kNoId);
  std::vector<VertexId> vertices;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    const VertexId v = g.vertices()[i];
    const VertexId rep = sets.find(v);
    map.vertex_image[v] = rep;
    if (rep == v) {
      vertices.push_back(v);
      labels.push_back(g.labels()[i]);
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (status[e.id] == 1) {
      map.deleted.push_back(e.id);
    } else if (status[e.id] == 2) {
      map.contracted.push_back(e.id);
    } else {
      edges.push_back({e.id, map.vertex_image[e.u], map.vertex_image[e.v]});
    }
  }
  map.result = Multigraph(std::move(vertices), std::move(edges), std::move(labels));
  return map;
}

// ---------------------------------------------------------------------------
// Paths

PathSystem edge_disjoint_paths(const Multigraph& g, VertexId s, VertexId t, int k) {
  if (!g.has_vertex(s) || !g.has_vertex(t)) throw ArgumentError("unknown vertex");
  if (s == t) throw ArgumentError("edge-disjoint paths need distinct endpoints");
  if (k < 0) throw ArgumentError("negative path count");

  // flow[e] = +1 when one unit moves from edge.u to edge.v, -1 for the reverse.
  std::vector<int> flow(static_cast<std::size_t>(g.edge_id_bound()), 0);
  const auto vbound = static_cast<std::size_t>(g.vertex_id_bound());
  auto can_leave = [&](EdgeId e, VertexId x) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) return false;
    return ed.u == x ? flow[e] < 1 : flow[e] > -1;
  };

  int found = 0;
  std::vector<EdgeId> via(vbound);
  std::vector<char> seen(vbound);
  while (found < k) {
    std::fill(seen.begin(), seen.end(), 0);
    std::fill(via.begin(), via.end(), kNoId);
    std::deque<VertexId> queue{s};
    seen[s] = 1;
    while (!queue.empty() && !seen[t]) {
      const VertexId x = queue.front();
      queue.pop_front();
      for (EdgeId e : g.incident(x)) {
        if (!can_leave(e, x)) continue;
        const VertexId y = g.opposite(e, x);
        if (seen[y]) continue;
        seen[y] = 1;
        via[y] = e;
        queue.push_back(y);
      }
    }
    if (!seen[t]) break;
    for (VertexId y = t; y != s;) {
      const EdgeId e = via[y];
      const Edge& ed = g.edge(e);
      const VertexId x = g.opposite(e, y);
      flow[e] += (ed.u == x) ? 1 : -1;
      y = x;
    }
    ++found;
  }

  // Decompose the flow into paths; circulations met on the way are dropped.
  PathSystem result;
  std::vector<char> used(flow.size(), 0);
  auto outgoing = [&](VertexId x) -> EdgeId {
    for (EdgeId e : g.incident(x)) {
      if (used[e] || flow[e] == 0) continue;
      const Edge& ed = g.edge(e);
      if ((flow[e] == 1 && ed.u == x) || (flow[e] == -1 && ed.v == x)) return e;
    }
    return kNoId;
  };
  std::vector<int> position(vbound, -1);
  for (int i = 0; i < found; ++i) {
    std::vector<EdgeId> path;
    std::vector<VertexId> walk{s};
    position[s] = 0;
    VertexId x = s;
    while (x != t) {
      const EdgeId e = outgoing(x);
      if (e == kNoId) throw InternalError("flow decomposition failed");
      used[e] = 1;
      const VertexId y = g.opposite(e, x);
      if (position[y] >= 0) {
        // Cut the closed sub-walk back to the first visit of y.
        const auto keep = static_cast<std::size_t>(position[y]);
        for (std::size_t j = keep + 1; j < walk.size(); ++j) position[walk[j]] = -1;
        walk.resize(keep + 1);
        path.resize(keep);
      } else {
        position[y] = static_cast<int>(walk.size());
        walk.push_back(y);
        path.push_back(e);
      }
      x = y;
    }
    for (VertexId w : walk) position[w] = -1;
    result.paths.push_back(std::move(path));
  }
  result.complete = found == k;
  return result;
}

std::optional<std::vector<EdgeId>> bfs_path(const Multigraph& g, VertexId u, VertexId v,
                                            std::span<const EdgeId> excluded) {
  if (!g.has_vertex(u) || !g.has_vertex(v)) throw ArgumentError("unknown vertex");
  if (u == v) return std::vector<EdgeId>{};
  std::vector<char> blocked(static_cast<std::size_t>(g.edge_id_bound()), 0);
  for (EdgeId e : excluded) {
    if (g.has_edge(e)) blocked[e] = 1;
  }
  const auto vbound = static_cast<std::size_t>(g.vertex_id_bound());
  std::vector<EdgeId> via(vbound, kNoId);
  std::vector<char> seen(vbound, 0);
  std::deque<VertexId> queue{u};
  seen[u] = 1;
  while (!queue.empty() && !seen[v]) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (EdgeId e : g.incident(x)) {
      if (blocked[e]) continue;
      const VertexId y = g.opposite(e, x);
      if (seen[y]) continue;
      seen[y] = 1;
      via[y] = e;
      queue.push_back(y);
    }
  }
  if (!seen[v]) return std::nullopt;
  std::vector<EdgeId> path;
  for (VertexId y = v; y != u; y = g.opposite(via[y], y)) path.push_back(via[y]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace cyclat
