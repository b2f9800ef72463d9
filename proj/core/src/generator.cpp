#include <random>

#include "cyclat/generator.hpp"

namespace cyclat {

namespace {

// Rejection sampling keeps draws identical across standard libraries, which
// std::uniform_int_distribution does not promise.
std::size_t draw(std::mt19937_64& rng, std::size_t bound) {
  const std::uint64_t b = bound;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % b;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % b);
}

// Live edges of the growing graph with O(1) removal by id.
class State {
 public:
  State() : vertices_(1) {}

  std::size_t num_vertices() const { return vertices_; }
  std::size_t num_edges() const { return live_.size(); }
  VertexId next_vertex() const { return static_cast<VertexId>(vertices_); }
  EdgeId next_edge() const { return static_cast<EdgeId>(all_.size()); }
  EdgeId live(std::size_t i) const { return live_[i]; }

  ExtensionStep split(ExtensionKind kind, EdgeId f, EdgeId g, VertexId b) {
    const EdgeId next = next_edge();
    ExtensionStep step;
    step.kind = kind;
    step.a = next_vertex();
    step.split_f = EdgeSplit{f, next, next + 1, step.a};
    if (kind == ExtensionKind::C) {
      step.b = step.a + 1;
      step.split_g = EdgeSplit{g, next + 2, next + 3, step.b};
    } else {
      step.b = b;
    }
    step.new_edge = next + (kind == ExtensionKind::C ? 4 : 2);
    return step;
  }

  void apply(const ExtensionStep& step) {
    for (const auto* s : {&step.split_f, &step.split_g}) {
      if (!*s) continue;
      const Edge old = all_[(*s)->edge];
      remove((*s)->edge);
      ++vertices_;
      add({(*s)->first, old.u, (*s)->vertex});
      add({(*s)->second, (*s)->vertex, old.v});
    }
    add({step.new_edge, step.a, step.b});
  }

  Multigraph graph() const {
    std::vector<VertexId> vertices(vertices_);
    for (std::size_t v = 0; v < vertices_; ++v) vertices[v] = static_cast<VertexId>(v);
    std::vector<Edge> edges;
    edges.reserve(live_.size());
    for (EdgeId e : live_) edges.push_back(all_[e]);
    return compact(Multigraph(std::move(vertices), std::move(edges)));
  }

 private:
  void add(const Edge& e) {
    if (static_cast<std::size_t>(e.id) != all_.size()) throw InternalError("edge ids out of order");
    all_.push_back(e);
    slot_.push_back(live_.size());
    live_.push_back(e.id);
  }

  void remove(EdgeId e) {
    const std::size_t i = slot_[e];
    live_[i] = live_.back();
    slot_[live_[i]] = i;
    live_.pop_back();
  }

  std::size_t vertices_;
  std::vector<Edge> all_;
  std::vector<std::size_t> slot_;
  std::vector<EdgeId> live_;
};

ExtensionStep random_step(std::mt19937_64& rng, State& state, ExtensionKind kind) {
  const std::size_t m = state.num_edges();
  switch (kind) {
    case ExtensionKind::A: {
      const auto n = state.num_vertices();
      ExtensionStep step;
      step.kind = kind;
      step.a = static_cast<VertexId>(draw(rng, n));
      step.b = static_cast<VertexId>(draw(rng, n));
      step.new_edge = state.next_edge();
      return step;
    }
    case ExtensionKind::B:
      return state.split(kind, state.live(draw(rng, m)), kNoId,
                         static_cast<VertexId>(draw(rng, state.num_vertices())));
    case ExtensionKind::C: {
      const std::size_t i = draw(rng, m);
      std::size_t j = draw(rng, m - 1);
      if (j >= i) ++j;
      return state.split(kind, state.live(i), state.live(j), kNoId);
    }
  }
  throw InternalError("unknown extension kind");
}

template <class Fits>
GeneratedInstance run(std::mt19937_64& rng, std::size_t steps, Fits fits) {
  State state;
  GeneratedInstance out;
  out.sequence.base = Multigraph({0}, {});
  for (std::size_t i = 0; i < steps; ++i) {
    std::vector<ExtensionKind> kinds;
    for (ExtensionKind k : {ExtensionKind::A, ExtensionKind::B, ExtensionKind::C}) {
      const std::size_t need = k == ExtensionKind::A ? 0 : k == ExtensionKind::B ? 1 : 2;
      if (state.num_edges() >= need && fits(state, k, i)) kinds.push_back(k);
    }
    if (kinds.empty()) break;
    const ExtensionStep step = random_step(rng, state, kinds[draw(rng, kinds.size())]);
    state.apply(step);
    out.sequence.steps.push_back(step);
  }
  out.graph = state.graph();
  return out;
}

std::size_t added_vertices(ExtensionKind k) {
  return k == ExtensionKind::A ? 0 : k == ExtensionKind::B ? 1 : 2;
}

std::size_t added_edges(ExtensionKind k) {
  return k == ExtensionKind::A ? 1 : k == ExtensionKind::B ? 2 : 3;
}

}  // namespace

GeneratedInstance generate(const GeneratorOptions& options) {
  std::mt19937_64 rng(options.seed);
  return run(rng, options.steps, [&](const State& s, ExtensionKind k, std::size_t) {
    return (options.max_vertices == 0 || s.num_vertices() + added_vertices(k) <= options.max_vertices) &&
           (options.max_edges == 0 || s.num_edges() + added_edges(k) <= options.max_edges);
  });
}

GeneratedInstance generate_sized(std::size_t n, std::size_t m, std::uint64_t seed) {
  auto unreachable = [&] {
    return ArgumentError("no extension sequence reaches " + std::to_string(n) + " vertices and " +
                         std::to_string(m) + " edges");
  };
  if (n < 1 || m + 1 < n || n / 2 > m + 1 - n) throw unreachable();
  const std::size_t steps = m + 1 - n;
  std::mt19937_64 rng(seed);
  auto out = run(rng, steps, [&](const State& s, ExtensionKind k, std::size_t i) {
    const std::size_t added = added_vertices(k);
    if (s.num_vertices() + added > n) return false;
    const std::size_t left_vertices = n - s.num_vertices() - added;
    const std::size_t left_steps = steps - i - 1;
    return (left_vertices + 1) / 2 <= left_steps;
  });
  // The first step is always a loop, so a few tight (n, m) pairs run dry.
  if (out.graph.num_vertices() != n || out.graph.num_edges() != m) throw unreachable();
  return out;
}

std::uint64_t instance_seed(std::uint64_t seed, std::size_t index) {
  // splitmix64 finalizer over (seed, index).
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace cyclat
