#include <algorithm>

#include "cyclat/lattice_basis.hpp"

namespace cyclat {

namespace {

// Pre/post numbering of the forest so that "w lies below tree edge t" is a
// constant-time test.
class SubtreeIndex {
 public:
  SubtreeIndex(const Multigraph& g, const SpanningForest& tree)
      : tree_(tree),
        enter_(static_cast<std::size_t>(g.vertex_id_bound()), 0),
        leave_(static_cast<std::size_t>(g.vertex_id_bound()), 0) {
    std::vector<std::vector<VertexId>> children(static_cast<std::size_t>(g.vertex_id_bound()));
    for (VertexId v : tree.order()) {
      if (tree.parent(v) != kNoId) children[tree.parent(v)].push_back(v);
    }
    int clock = 0;
    std::vector<std::pair<VertexId, std::size_t>> stack;
    for (VertexId root : tree.component_roots()) {
      stack.emplace_back(root, 0);
      enter_[root] = clock++;
      while (!stack.empty()) {
        auto& [v, next] = stack.back();
        if (next < children[v].size()) {
          const VertexId c = children[v][next++];
          enter_[c] = clock++;
          stack.emplace_back(c, 0);
        } else {
          leave_[v] = clock;
          stack.pop_back();
        }
      }
    }
  }

  VertexId lower_end(const Multigraph& g, EdgeId t) const {
    const Edge& e = g.edge(t);
    return tree_.parent_edge(e.u) == t ? e.u : e.v;
  }

  bool below(VertexId top, VertexId w) const {
    return enter_[top] <= enter_[w] && enter_[w] < leave_[top];
  }

 private:
  const SpanningForest& tree_;
  std::vector<int> enter_;
  std::vector<int> leave_;
};

struct Pair {
  EdgeId c1;
  EdgeId c2;
  std::vector<EdgeId> shared;  // sorted; may still hold contracted edges
  EdgeId reconnecting;
};

SemiFundamentalResult run_three_edge_connected(const Multigraph& g, const SpanningForest& tree) {
  const FundamentalCycleMatrix x(g, tree);
  const SubtreeIndex subtree(g, tree);
  std::vector<char> contracted(static_cast<std::size_t>(g.edge_id_bound()), 0);

  auto shared_edges = [&](EdgeId a, EdgeId b) {
    const auto ca = x.column(a), cb = x.column(b);
    std::vector<EdgeId> out;
    std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(out));
    std::erase_if(out, [&](EdgeId t) { return contracted[t] != 0; });
    return out;
  };

  SemiFundamentalResult result;
  const auto tree_edges = x.tree_edges();
  std::vector<Pair> stack;
  std::size_t seed = 0;

  while (result.steps.size() < tree_edges.size()) {
    if (stack.empty()) {
      while (contracted[tree_edges[seed]]) ++seed;
      const EdgeId t = tree_edges[seed];
      const auto cut = x.row(t);
      if (cut.size() < 2) {
        throw InternalError("tree edge " + std::to_string(t) +
                            " lies on fewer than two fundamental cycles");
      }
      stack.push_back({cut[0], cut[1], shared_edges(cut[0], cut[1]), kNoId});
    }
    Pair& top = stack.back();
    std::erase_if(top.shared, [&](EdgeId t) { return contracted[t] != 0; });
    if (top.shared.empty()) throw InternalError("fundamental cycle pair lost its common edge");

    if (top.shared.size() == 1) {
      const EdgeId t = top.shared.front();
      result.steps.push_back(
          {t, std::min(top.c1, top.c2), std::max(top.c1, top.c2), top.reconnecting});
      contracted[t] = 1;
      stack.pop_back();
      continue;
    }

    // Exchange: cut the common path P at its two end edges and reconnect the
    // middle piece to one of the outer pieces.
    std::vector<EdgeId> path;
    for (EdgeId t : x.path(top.c1)) {
      if (std::binary_search(top.shared.begin(), top.shared.end(), t)) path.push_back(t);
    }
    const EdgeId first = path.front(), last = path.back();
    const VertexId below_first = subtree.lower_end(g, first);
    const VertexId below_last = subtree.lower_end(g, last);
    auto piece = [&](VertexId w) {
      return (subtree.below(below_first, w) ? 1 : 0) + (subtree.below(below_last, w) ? 2 : 0);
    };
    const Edge& ef = g.edge(first);
    const Edge& el = g.edge(last);
    const int f1 = piece(ef.u), f2 = piece(ef.v), l1 = piece(el.u), l2 = piece(el.v);
    const int middle = (f1 == l1 || f1 == l2) ? f1 : f2;
    const int outer_first = f1 == middle ? f2 : f1;
    const int outer_last = l1 == middle ? l2 : l1;

    EdgeId reconnecting = kNoId;
    for (EdgeId e : x.non_tree_edges()) {
      const Edge& ed = g.edge(e);
      const int a = piece(ed.u), b = piece(ed.v);
      if ((a == middle && (b == outer_first || b == outer_last)) ||
          (b == middle && (a == outer_first || a == outer_last))) {
        reconnecting = e;
        break;
      }
    }
    if (reconnecting == kNoId) {
      throw InternalError("no edge reconnects the middle of the path between tree edges " +
                          std::to_string(first) + " and " + std::to_string(last) +
                          "; the graph is not 3-edge-connected");
    }

    const std::size_t k = top.shared.size();
    auto candidate = [&](EdgeId keep) -> std::optional<std::vector<EdgeId>> {
      auto s = shared_edges(keep, reconnecting);
      if (s.empty() || s.size() >= k ||
          !std::includes(top.shared.begin(), top.shared.end(), s.begin(), s.end())) {
        return std::nullopt;
      }
      return s;
    };
    auto keep1 = candidate(top.c1);
    auto keep2 = candidate(top.c2);
    Pair next{kNoId, reconnecting, {}, reconnecting};
    if (keep1 && keep2) {
      // Both cycles leave P where the new one does; drop the smaller id.
      const bool keep_first = top.c1 > top.c2;
      next.c1 = keep_first ? top.c1 : top.c2;
      next.shared = keep_first ? std::move(*keep1) : std::move(*keep2);
    } else if (keep1) {
      next.c1 = top.c1;
      next.shared = std::move(*keep1);
    } else if (keep2) {
      next.c1 = top.c2;
      next.shared = std::move(*keep2);
    } else {
      throw InternalError("cycle exchange through edge " + std::to_string(reconnecting) +
                          " did not shrink the common path");
    }
    ++result.exchanges;
    stack.push_back(std::move(next));
  }

  result.basis = fundamental_cycles(g, tree);
  for (const SemiFundamentalStep& step : result.steps) {
    result.basis.cycles.push_back(semi_fundamental_cycle(x, step.e, step.f));
    Provenance p;
    p.origin = CycleOrigin::semi_fundamental;
    p.edge = step.e;
    p.partner = step.f;
    p.tree_edge = step.tree_edge;
    result.basis.provenance.push_back(p);
  }
  return result;
}

}  // namespace

SemiFundamentalResult semi_fundamental_basis(const Multigraph& g, const SpanningForest& tree) {
  if (!is_connected(g)) {
    throw PreconditionError("graph is disconnected (" +
                            std::to_string(connected_components(g).size()) + " components)");
  }
  if (is_three_edge_connected(g)) return run_three_edge_connected(g, tree);

  const Cosimplification cos = cosimplify(g, &tree);
  SemiFundamentalResult result;
  std::vector<CycleBasis> parts;
  for (const auto& component : connected_components(cos.hat_graph)) {
    const Multigraph sub = induced_subgraph(cos.hat_graph, component);
    std::vector<EdgeId> sub_tree;
    for (const Edge& e : sub.edges()) {
      if (tree.contains(e.id)) sub_tree.push_back(e.id);
    }
    SemiFundamentalResult part =
        run_three_edge_connected(sub, SpanningForest::from_edges(sub, sub_tree));
    result.steps.insert(result.steps.end(), part.steps.begin(), part.steps.end());
    result.exchanges += part.exchanges;
    parts.push_back(std::move(part.basis));
  }
  result.basis = lift_basis(g, cos, parts);
  result.basis.tree = tree;
  result.lifted = true;
  return result;
}

}  // namespace cyclat
