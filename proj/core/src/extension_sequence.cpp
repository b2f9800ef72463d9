#include <algorithm>
#include <deque>

#include "cyclat/topo_extension.hpp"

namespace cyclat {

namespace {

// Top(H) for the growing subgraph H of G: branch vertices plus chains, each
// chain being a path of G between branch vertices whose interior vertices
// have degree 2 in H. A chain made of one G-edge carries that edge's id.
class TopologicalBuilder {
 public:
  explicit TopologicalBuilder(const Multigraph& g)
      : g_(g),
        in_h_(vbound(), 0),
        branch_(vbound(), 0),
        chain_of_(vbound(), -1),
        position_(vbound(), 0),
        covered_(static_cast<std::size_t>(g.edge_id_bound()), 0),
        uncovered_(vbound(), 0),
        seen_(vbound(), 0),
        remaining_(g.num_edges()),
        next_id_(g.edge_id_bound()) {
    for (const Edge& e : g.edges()) {
      uncovered_[e.u] += 1;
      if (!e.is_loop()) uncovered_[e.v] += 1;
    }
  }

  ExtensionSequence build() {
    const VertexId root = g_.vertices().front();
    ExtensionSequence seq;
    seq.base = Multigraph({root}, {}, {g_.labels().front()});
    in_h_[root] = 1;
    branch_[root] = 1;
    sweep({root}, seq.steps);
    while (remaining_ > 0) grow(seq.steps);
    const std::size_t expected = g_.num_edges() - g_.num_vertices() + 1;
    if (seq.steps.size() != expected) {
      throw InternalError("extension sequence has " + std::to_string(seq.steps.size()) +
                          " steps, expected " + std::to_string(expected));
    }
    return seq;
  }

 private:
  struct Chain {
    EdgeId id;
    std::vector<VertexId> vertices;  // oriented like the Top edge (u ... v)
    std::vector<EdgeId> edges;
  };

  struct Path {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
  };

  std::size_t vbound() const { return static_cast<std::size_t>(g_.vertex_id_bound()); }

  void cover(EdgeId e) {
    covered_[e] = 1;
    const Edge& ed = g_.edge(e);
    uncovered_[ed.u] -= 1;
    if (!ed.is_loop()) uncovered_[ed.v] -= 1;
    --remaining_;
  }

  EdgeId chain_id(const std::vector<EdgeId>& edges) {
    return edges.size() == 1 ? edges.front() : next_id_++;
  }

  void register_chain(Chain chain) {
    const int index = static_cast<int>(chains_.size());
    for (std::size_t i = 1; i + 1 < chain.vertices.size(); ++i) {
      chain_of_[chain.vertices[i]] = index;
      position_[chain.vertices[i]] = i;
    }
    chains_.push_back(std::move(chain));
  }

  // Depth-first search over uncovered edges through vertices outside H,
  // stopping at the first H vertex accepted by `accept`.
  template <class Accept>
  std::optional<Path> search(const std::vector<VertexId>& sources, Accept accept) {
    ++stamp_;
    for (VertexId s : sources) {
      struct Frame {
        VertexId x;
        std::size_t next;
      };
      std::vector<Frame> stack{{s, 0}};
      std::vector<EdgeId> edges;
      while (!stack.empty()) {
        Frame& top = stack.back();
        const auto inc = g_.incident(top.x);
        if (top.next == inc.size()) {
          stack.pop_back();
          if (!edges.empty()) edges.pop_back();
          continue;
        }
        const EdgeId e = inc[top.next++];
        if (covered_[e] || (!edges.empty() && e == edges.back())) continue;
        const VertexId y = g_.opposite(e, top.x);
        if (in_h_[y]) {
          if (!accept(y)) continue;
          Path path;
          for (const Frame& f : stack) path.vertices.push_back(f.x);
          path.vertices.push_back(y);
          path.edges = edges;
          path.edges.push_back(e);
          return path;
        }
        if (seen_[y] == stamp_) continue;
        seen_[y] = stamp_;
        edges.push_back(e);
        stack.push_back({y, 0});
      }
    }
    return std::nullopt;
  }

  // Splits the chain through interior vertex z; returns the split record.
  EdgeSplit split_at(VertexId z) {
    const int index = chain_of_[z];
    Chain whole = std::move(chains_[index]);
    const std::size_t j = position_[z];
    Chain first{kNoId, {whole.vertices.begin(), whole.vertices.begin() + j + 1},
                {whole.edges.begin(), whole.edges.begin() + j}};
    Chain second{kNoId, {whole.vertices.begin() + j, whole.vertices.end()},
                 {whole.edges.begin() + j, whole.edges.end()}};
    first.id = chain_id(first.edges);
    second.id = chain_id(second.edges);
    EdgeSplit split{whole.id, first.id, second.id, z};
    chain_of_[z] = -1;
    branch_[z] = 1;
    chains_[index] = std::move(first);
    for (std::size_t i = 1; i + 1 < chains_[index].vertices.size(); ++i) {
      position_[chains_[index].vertices[i]] = i;
    }
    register_chain(std::move(second));
    return split;
  }

  void grow(std::vector<ExtensionStep>& steps) {
    std::optional<Path> path;
    // Prefer the least branch vertex with an uncovered edge, else the least
    // such vertex of H (then interior to some chain).
    VertexId start = kNoId;
    for (VertexId v : g_.vertices()) {
      if (!in_h_[v] || uncovered_[v] == 0) continue;
      if (branch_[v]) {
        start = v;
        break;
      }
      if (start == kNoId) start = v;
    }
    if (start == kNoId) throw InternalError("no vertex of H touches an uncovered edge");
    if (branch_[start]) {
      path = search({start}, [](VertexId) { return true; });
    } else {
      // Start anywhere inside the chain Q through `start` and end outside
      // Q's interior, so the step never subdivides one Top edge twice.
      const int q = chain_of_[start];
      std::vector<VertexId> sources(chains_[q].vertices.begin() + 1, chains_[q].vertices.end() - 1);
      std::sort(sources.begin(), sources.end());
      path = search(sources, [&](VertexId w) { return branch_[w] || chain_of_[w] != q; });
    }
    if (!path) throw InternalError("path search failed; the graph is not 3-edge-connected");

    const VertexId s = path->vertices.front();
    const VertexId w = path->vertices.back();
    ExtensionStep step;
    std::vector<VertexId> new_branches;
    if (branch_[s] && branch_[w]) {
      step.kind = ExtensionKind::A;
      step.a = s;
      step.b = w;
    } else if (!branch_[s] && !branch_[w]) {
      step.kind = ExtensionKind::C;
      step.a = s;
      step.b = w;
      step.split_f = split_at(s);
      step.split_g = split_at(w);
      new_branches = {s, w};
    } else {
      step.kind = ExtensionKind::B;
      const bool split_start = !branch_[s];
      step.a = split_start ? s : w;
      step.b = split_start ? w : s;
      step.split_f = split_at(step.a);
      new_branches = {step.a};
      if (!split_start) {
        std::reverse(path->vertices.begin(), path->vertices.end());
        std::reverse(path->edges.begin(), path->edges.end());
      }
    }
    step.new_edge = chain_id(path->edges);
    for (std::size_t i = 0; i < path->vertices.size(); ++i) in_h_[path->vertices[i]] = 1;
    for (EdgeId e : path->edges) cover(e);
    register_chain({step.new_edge, std::move(path->vertices), std::move(path->edges)});
    steps.push_back(std::move(step));
    sweep(new_branches, steps);
  }

  // Uncovered edges between branch vertices become single-edge kind A steps.
  void sweep(const std::vector<VertexId>& fresh, std::vector<ExtensionStep>& steps) {
    std::vector<EdgeId> candidates;
    for (VertexId v : fresh) {
      for (EdgeId e : g_.incident(v)) {
        const Edge& ed = g_.edge(e);
        if (!covered_[e] && branch_[ed.u] && branch_[ed.v]) candidates.push_back(e);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (EdgeId e : candidates) {
      const Edge& ed = g_.edge(e);
      ExtensionStep step;
      step.kind = ExtensionKind::A;
      step.new_edge = e;
      step.a = ed.u;
      step.b = ed.v;
      cover(e);
      steps.push_back(step);
    }
  }

  const Multigraph& g_;
  std::vector<char> in_h_;
  std::vector<char> branch_;
  std::vector<int> chain_of_;
  std::vector<std::size_t> position_;
  std::vector<char> covered_;
  std::vector<int> uncovered_;
  std::vector<int> seen_;
  int stamp_ = 0;
  std::size_t remaining_;
  EdgeId next_id_;
  std::vector<Chain> chains_;
};

}  // namespace

ExtensionSequence extension_sequence(const Multigraph& g) {
  require_three_edge_connected(g);
  return TopologicalBuilder(g).build();
}

// ---------------------------------------------------------------------------

namespace {

// Mutable graph plus spanning tree for the chain construction. Incidence
// lists stay sorted by edge id so breadth-first paths match bfs_path.
class GrowingGraph {
 public:
  GrowingGraph(VertexId root, VertexId vertex_bound, EdgeId edge_bound)
      : root_(root),
        present_(static_cast<std::size_t>(vertex_bound), 0),
        incident_(static_cast<std::size_t>(vertex_bound)),
        parent_(static_cast<std::size_t>(vertex_bound), kNoId),
        parent_edge_(static_cast<std::size_t>(vertex_bound), kNoId),
        mark_(static_cast<std::size_t>(vertex_bound), 0),
        via_(static_cast<std::size_t>(vertex_bound), kNoId),
        ends_(static_cast<std::size_t>(edge_bound), {kNoId, kNoId}),
        alive_(static_cast<std::size_t>(edge_bound), 0),
        in_tree_(static_cast<std::size_t>(edge_bound), 0) {
    present_[root] = 1;
  }

  const std::pair<VertexId, VertexId>& ends(EdgeId e) const { return ends_[e]; }

  void add_edge(EdgeId e, VertexId u, VertexId v) {
    ends_[e] = {u, v};
    alive_[e] = 1;
    insert(u, e);
    if (u != v) insert(v, e);
  }

  void remove_edge(EdgeId e) {
    const auto [u, v] = ends_[e];
    erase(u, e);
    if (u != v) erase(v, e);
    alive_[e] = 0;
  }

  void subdivide(const EdgeSplit& s) {
    const auto [x, y] = ends_[s.edge];
    const bool tree_edge = in_tree_[s.edge] != 0;
    remove_edge(s.edge);
    present_[s.vertex] = 1;
    add_edge(s.first, x, s.vertex);
    add_edge(s.second, s.vertex, y);
    if (tree_edge) {
      in_tree_[s.first] = in_tree_[s.second] = 1;
      if (parent_edge_[y] == s.edge && parent_[y] == x) {
        set_parent(y, s.vertex, s.second);
        set_parent(s.vertex, x, s.first);
      } else {
        set_parent(x, s.vertex, s.first);
        set_parent(s.vertex, y, s.second);
      }
    } else {
      in_tree_[s.first] = 1;
      set_parent(s.vertex, x, s.first);
    }
  }

  std::vector<EdgeId> tree_path(VertexId a, VertexId b) {
    ++stamp_;
    for (VertexId x = a;; x = parent_[x]) {
      mark_[x] = stamp_;
      if (x == root_) break;
    }
    std::vector<EdgeId> from_b;
    VertexId meet = b;
    while (mark_[meet] != stamp_) {
      from_b.push_back(parent_edge_[meet]);
      meet = parent_[meet];
    }
    std::vector<EdgeId> path;
    for (VertexId x = a; x != meet; x = parent_[x]) path.push_back(parent_edge_[x]);
    path.insert(path.end(), from_b.rbegin(), from_b.rend());
    return path;
  }

  std::vector<EdgeId> bfs(VertexId u, VertexId v, EdgeId skip1, EdgeId skip2) {
    if (u == v) return {};
    ++stamp_;
    std::deque<VertexId> queue{u};
    mark_[u] = stamp_;
    while (!queue.empty() && mark_[v] != stamp_) {
      const VertexId x = queue.front();
      queue.pop_front();
      for (EdgeId e : incident_[x]) {
        if (e == skip1 || e == skip2) continue;
        const VertexId y = ends_[e].first == x ? ends_[e].second : ends_[e].first;
        if (mark_[y] == stamp_) continue;
        mark_[y] = stamp_;
        via_[y] = e;
        queue.push_back(y);
      }
    }
    if (mark_[v] != stamp_) {
      throw InternalError("no path avoiding the subdivided edges; H is not 3-edge-connected");
    }
    std::vector<EdgeId> path;
    for (VertexId y = v; y != u;) {
      const EdgeId e = via_[y];
      path.push_back(e);
      y = ends_[e].first == y ? ends_[e].second : ends_[e].first;
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  Multigraph snapshot(const Multigraph& base) const {
    std::vector<VertexId> vertices;
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < present_.size(); ++v) {
      if (!present_[v]) continue;
      vertices.push_back(static_cast<VertexId>(v));
      labels.push_back(base.has_vertex(static_cast<VertexId>(v))
                           ? base.labels()[base.vertex_index(static_cast<VertexId>(v))]
                           : std::string());
    }
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < alive_.size(); ++e) {
      if (alive_[e]) edges.push_back({static_cast<EdgeId>(e), ends_[e].first, ends_[e].second});
    }
    return Multigraph(std::move(vertices), std::move(edges), std::move(labels));
  }

  std::vector<EdgeId> tree_edges() const {
    std::vector<EdgeId> out;
    for (std::size_t e = 0; e < in_tree_.size(); ++e) {
      if (in_tree_[e] && alive_[e]) out.push_back(static_cast<EdgeId>(e));
    }
    return out;
  }

 private:
  void insert(VertexId v, EdgeId e) {
    auto& list = incident_[v];
    list.insert(std::upper_bound(list.begin(), list.end(), e), e);
  }
  void erase(VertexId v, EdgeId e) {
    auto& list = incident_[v];
    list.erase(std::lower_bound(list.begin(), list.end(), e));
  }
  void set_parent(VertexId child, VertexId parent, EdgeId via) {
    parent_[child] = parent;
    parent_edge_[child] = via;
  }

  VertexId root_;
  std::vector<char> present_;
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<VertexId> parent_;
  std::vector<EdgeId> parent_edge_;
  std::vector<int> mark_;
  std::vector<EdgeId> via_;
  int stamp_ = 0;
  std::vector<std::pair<VertexId, VertexId>> ends_;
  std::vector<char> alive_;
  std::vector<char> in_tree_;
};

// Cycles are stored with the edge ids current when they were created; a
// subdivided edge expands into its two halves on demand.
class SplitHistory {
 public:
  explicit SplitHistory(EdgeId edge_bound)
      : halves_(static_cast<std::size_t>(edge_bound), {kNoId, kNoId}) {}

  void record(const EdgeSplit& s) { halves_[s.edge] = {s.first, s.second}; }

  std::vector<EdgeId> expand(const std::vector<EdgeId>& cycle) const {
    std::vector<EdgeId> out;
    std::vector<EdgeId> stack(cycle.rbegin(), cycle.rend());
    while (!stack.empty()) {
      const EdgeId e = stack.back();
      stack.pop_back();
      if (halves_[e].first == kNoId) {
        out.push_back(e);
      } else {
        stack.push_back(halves_[e].second);
        stack.push_back(halves_[e].first);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<std::pair<EdgeId, EdgeId>> halves_;
};

}  // namespace

CompatibleChain compatible_chain(const Multigraph& g, bool record_prefixes) {
  return compatible_chain(extension_sequence(g), record_prefixes);
}

CycleBasis topological_basis(const Multigraph& g) {
  if (!is_connected(g)) {
    throw PreconditionError("graph is disconnected (" +
                            std::to_string(connected_components(g).size()) + " components)");
  }
  if (is_three_edge_connected(g)) return compatible_chain(g).basis;
  const Cosimplification cos = cosimplify(g);
  std::vector<CycleBasis> parts;
  for (const auto& component : connected_components(cos.hat_graph)) {
    parts.push_back(compatible_chain(induced_subgraph(cos.hat_graph, component)).basis);
  }
  return lift_basis(g, cos, parts);
}

CompatibleChain compatible_chain(const ExtensionSequence& sequence, bool record_prefixes) {
  if (sequence.base.num_vertices() != 1 || sequence.base.num_edges() != 0) {
    throw ArgumentError("an extension sequence starts from a single vertex");
  }
  VertexId vertex_bound = sequence.base.vertex_id_bound();
  EdgeId edge_bound = 0;
  for (const ExtensionStep& s : sequence.steps) {
    vertex_bound = std::max({vertex_bound, s.a + 1, s.b + 1});
    edge_bound = std::max(edge_bound, s.new_edge + 1);
    for (const auto* split : {&s.split_f, &s.split_g}) {
      if (!*split) continue;
      edge_bound = std::max({edge_bound, (*split)->edge + 1, (*split)->first + 1,
                             (*split)->second + 1});
    }
  }

  const VertexId root = sequence.base.vertices().front();
  GrowingGraph h(root, vertex_bound, edge_bound);
  SplitHistory history(edge_bound);
  CompatibleChain chain;
  chain.sequence = sequence;
  std::vector<std::vector<EdgeId>> cycles;
  std::vector<Provenance> provenance;

  auto add_cycle = [&](std::vector<EdgeId> edges, int step, ExtensionKind kind, EdgeId e) {
    std::sort(edges.begin(), edges.end());
    cycles.push_back(std::move(edges));
    Provenance p;
    p.origin = CycleOrigin::extension;
    p.edge = e;
    p.step = step;
    p.extension_case = kind_letter(kind);
    provenance.push_back(p);
  };
  auto expanded = [&]() {
    CycleBasis b;
    for (const auto& c : cycles) b.cycles.push_back(history.expand(c));
    b.provenance = provenance;
    return b;
  };

  if (record_prefixes) chain.prefixes.push_back(CycleBasis{});
  int number = 0;
  for (const ExtensionStep& step : sequence.steps) {
    ++number;
    const EdgeId e = step.new_edge;
    switch (step.kind) {
      case ExtensionKind::A: {
        std::vector<EdgeId> edges =
            step.a == step.b ? std::vector<EdgeId>{} : h.tree_path(step.a, step.b);
        edges.push_back(e);
        add_cycle(std::move(edges), number, step.kind, e);
        h.add_edge(e, step.a, step.b);
        break;
      }
      case ExtensionKind::B: {
        const EdgeSplit& f = *step.split_f;
        const auto [x, y] = h.ends(f.edge);
        auto p1 = h.bfs(x, step.b, f.edge, kNoId);
        auto p2 = h.bfs(y, step.b, f.edge, kNoId);
        p1.insert(p1.end(), {f.first, e});
        p2.insert(p2.end(), {f.second, e});
        add_cycle(std::move(p1), number, step.kind, e);
        add_cycle(std::move(p2), number, step.kind, e);
        h.subdivide(f);
        history.record(f);
        h.add_edge(e, step.a, step.b);
        break;
      }
      case ExtensionKind::C: {
        const EdgeSplit& f = *step.split_f;
        const EdgeSplit& gs = *step.split_g;
        const auto [xf, yf] = h.ends(f.edge);
        const auto [xg, yg] = h.ends(gs.edge);
        auto p1 = h.bfs(xf, xg, f.edge, gs.edge);
        auto p2 = h.bfs(yf, yg, f.edge, gs.edge);
        auto p = h.bfs(xf, yg, f.edge, gs.edge);
        p1.insert(p1.end(), {f.first, gs.first, e});
        p2.insert(p2.end(), {f.second, gs.second, e});
        p.insert(p.end(), {f.first, gs.second, e});
        add_cycle(std::move(p1), number, step.kind, e);
        add_cycle(std::move(p2), number, step.kind, e);
        add_cycle(std::move(p), number, step.kind, e);
        h.subdivide(f);
        h.subdivide(gs);
        history.record(f);
        history.record(gs);
        h.add_edge(e, step.a, step.b);
        break;
      }
    }
    chain.sizes.push_back(cycles.size());
    if (record_prefixes) chain.prefixes.push_back(expanded());
  }

  chain.basis = record_prefixes ? chain.prefixes.back() : expanded();
  const Multigraph last = h.snapshot(sequence.base);
  chain.basis.tree = SpanningForest::from_edges(last, h.tree_edges(), root);
  return chain;
}

}  // namespace cyclat
