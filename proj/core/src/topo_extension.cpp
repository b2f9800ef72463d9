#include <algorithm>
#include <set>

#include "cyclat/topo_extension.hpp"

namespace cyclat {

char kind_letter(ExtensionKind kind) {
  switch (kind) {
    case ExtensionKind::A:
      return 'A';
    case ExtensionKind::B:
      return 'B';
    case ExtensionKind::C:
      return 'C';
  }
  return '?';
}

ExtensionStep extension_a(const Multigraph& h, VertexId a, VertexId b) {
  ExtensionStep step;
  step.kind = ExtensionKind::A;
  step.new_edge = h.edge_id_bound();
  step.a = a;
  step.b = b;
  validate_extension(h, step);
  return step;
}

ExtensionStep extension_b(const Multigraph& h, EdgeId f, VertexId b) {
  const EdgeId next = h.edge_id_bound();
  ExtensionStep step;
  step.kind = ExtensionKind::B;
  step.a = h.vertex_id_bound();
  step.b = b;
  step.split_f = EdgeSplit{f, next, next + 1, step.a};
  step.new_edge = next + 2;
  validate_extension(h, step);
  return step;
}

ExtensionStep extension_c(const Multigraph& h, EdgeId f, EdgeId g) {
  const EdgeId next = h.edge_id_bound();
  ExtensionStep step;
  step.kind = ExtensionKind::C;
  step.a = h.vertex_id_bound();
  step.b = step.a + 1;
  step.split_f = EdgeSplit{f, next, next + 1, step.a};
  step.split_g = EdgeSplit{g, next + 2, next + 3, step.b};
  step.new_edge = next + 4;
  validate_extension(h, step);
  return step;
}

void validate_extension(const Multigraph& h, const ExtensionStep& step) {
  auto fail = [](const std::string& why) { throw ArgumentError("invalid extension: " + why); };
  std::set<EdgeId> fresh{step.new_edge};
  auto check_split = [&](const std::optional<EdgeSplit>& s, VertexId vertex, const char* name) {
    if (!s) fail(std::string("missing split ") + name);
    if (!h.has_edge(s->edge)) fail("edge " + std::to_string(s->edge) + " is not in H");
    if (s->vertex != vertex) fail(std::string("split ") + name + " vertex does not match");
    if (h.has_vertex(vertex) || vertex < 0) fail("vertex " + std::to_string(vertex) + " is not new");
    fresh.insert(s->first);
    fresh.insert(s->second);
  };
  switch (step.kind) {
    case ExtensionKind::A:
      if (step.split_f || step.split_g) fail("kind A subdivides nothing");
      if (!h.has_vertex(step.a) || !h.has_vertex(step.b)) fail("endpoint is not in H");
      break;
    case ExtensionKind::B:
      if (step.split_g) fail("kind B subdivides one edge");
      check_split(step.split_f, step.a, "f");
      if (!h.has_vertex(step.b)) fail("endpoint b is not in H");
      break;
    case ExtensionKind::C:
      check_split(step.split_f, step.a, "f");
      check_split(step.split_g, step.b, "g");
      if (step.split_f->edge == step.split_g->edge) fail("kind C needs two distinct edges");
      if (step.a == step.b) fail("kind C needs two new vertices");
      break;
  }
  const std::size_t expected = 1 + (step.split_f ? 2 : 0) + (step.split_g ? 2 : 0);
  if (fresh.size() != expected) fail("new edge ids are not distinct");
  for (EdgeId e : fresh) {
    if (e < 0 || h.has_edge(e)) fail("edge id " + std::to_string(e) + " is already in use");
  }
}

Multigraph apply_extension(const Multigraph& h, const ExtensionStep& step) {
  validate_extension(h, step);
  std::vector<VertexId> vertices(h.vertices().begin(), h.vertices().end());
  std::vector<std::string> labels(h.labels().begin(), h.labels().end());
  std::vector<Edge> edges;
  edges.reserve(h.num_edges() + 5);
  for (const Edge& e : h.edges()) {
    if ((step.split_f && e.id == step.split_f->edge) ||
        (step.split_g && e.id == step.split_g->edge)) {
      continue;
    }
    edges.push_back(e);
  }
  for (const auto* s : {&step.split_f, &step.split_g}) {
    if (!*s) continue;
    const Edge& old = h.edge((*s)->edge);
    vertices.push_back((*s)->vertex);
    labels.emplace_back();
    edges.push_back({(*s)->first, old.u, (*s)->vertex});
    edges.push_back({(*s)->second, (*s)->vertex, old.v});
  }
  edges.push_back({step.new_edge, step.a, step.b});
  return Multigraph(std::move(vertices), std::move(edges), std::move(labels));
}

std::vector<EdgeId> edge_image(const ExtensionStep& step, EdgeId e) {
  for (const auto* s : {&step.split_f, &step.split_g}) {
    if (*s && (*s)->edge == e) return {(*s)->first, (*s)->second};
  }
  return {e};
}

EdgeVector embed_vector(const Multigraph& h, const Multigraph& g, const ExtensionStep& step,
                        const EdgeVector& x) {
  x.check_dimension(h);
  EdgeVector out = EdgeVector::zero(g);
  for (const Edge& e : h.edges()) {
    for (EdgeId image : edge_image(step, e.id)) {
      if (!g.has_edge(image)) throw ArgumentError("extension does not match the target graph");
      out.at(g, image) = x.at(h, e.id);
    }
  }
  return out;
}

EdgeVector embed_vector(const Multigraph& h, const ExtensionStep& step, const EdgeVector& x) {
  return embed_vector(h, apply_extension(h, step), step, x);
}

std::vector<EdgeId> embed_cycle(const ExtensionStep& step, std::span<const EdgeId> cycle) {
  std::vector<EdgeId> out;
  out.reserve(cycle.size() + 2);
  for (EdgeId e : cycle) {
    for (EdgeId image : edge_image(step, e)) out.push_back(image);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Multigraph> ExtensionSequence::replay() const {
  std::vector<Multigraph> graphs{base};
  graphs.reserve(steps.size() + 1);
  for (const ExtensionStep& step : steps) graphs.push_back(apply_extension(graphs.back(), step));
  return graphs;
}

Multigraph ExtensionSequence::result() const {
  Multigraph g = base;
  for (const ExtensionStep& step : steps) g = apply_extension(g, step);
  return g;
}

namespace {

std::vector<EdgeId> path_or_fail(const Multigraph& h, VertexId u, VertexId v,
                                 std::span<const EdgeId> excluded) {
  auto path = bfs_path(h, u, v, excluded);
  if (!path) {
    throw InternalError("no path between " + std::to_string(u) + " and " + std::to_string(v) +
                        " avoiding the subdivided edges; H is not 3-edge-connected");
  }
  return *path;
}

std::vector<EdgeId> close(std::vector<EdgeId> path, std::initializer_list<EdgeId> extra) {
  path.insert(path.end(), extra.begin(), extra.end());
  std::sort(path.begin(), path.end());
  return path;
}

}  // namespace

std::vector<std::vector<EdgeId>> extending_cycles(const Multigraph& h, const ExtensionStep& step,
                                                  const SpanningForest* tree) {
  validate_extension(h, step);
  const EdgeId e = step.new_edge;
  switch (step.kind) {
    case ExtensionKind::A: {
      if (step.a == step.b) return {{e}};
      auto path = tree ? tree->path(step.a, step.b) : path_or_fail(h, step.a, step.b, {});
      return {close(std::move(path), {e})};
    }
    case ExtensionKind::B: {
      const EdgeSplit& f = *step.split_f;
      const Edge& old = h.edge(f.edge);
      const std::vector<EdgeId> excluded{f.edge};
      return {close(path_or_fail(h, old.u, step.b, excluded), {f.first, e}),
              close(path_or_fail(h, old.v, step.b, excluded), {f.second, e})};
    }
    case ExtensionKind::C: {
      const EdgeSplit& f = *step.split_f;
      const EdgeSplit& g = *step.split_g;
      const Edge& of = h.edge(f.edge);
      const Edge& og = h.edge(g.edge);
      const std::vector<EdgeId> excluded{f.edge, g.edge};
      return {close(path_or_fail(h, of.u, og.u, excluded), {f.first, g.first, e}),
              close(path_or_fail(h, of.v, og.v, excluded), {f.second, g.second, e}),
              close(path_or_fail(h, of.u, og.v, excluded), {f.first, g.second, e})};
    }
  }
  return {};
}

CycleBasis extend_basis(const Multigraph& h, const CycleBasis& basis, const ExtensionStep& step,
                        int step_number) {
  CycleBasis out;
  out.provenance = basis.provenance;
  for (const auto& cycle : basis.cycles) out.cycles.push_back(embed_cycle(step, cycle));
  for (auto& cycle : extending_cycles(h, step)) {
    out.cycles.push_back(std::move(cycle));
    Provenance p;
    p.origin = CycleOrigin::extension;
    p.edge = step.new_edge;
    p.step = step_number;
    p.extension_case = kind_letter(step.kind);
    out.provenance.push_back(p);
  }
  return out;
}

}  // namespace cyclat
