#include <map>

#include <benchmark/benchmark.h>

#include <cyclat/cyclat.hpp>

namespace {

using namespace cyclat;

// Instances with m = 3n, cached per size so generation is not timed.
const Multigraph& instance(std::size_t n) {
  static std::map<std::size_t, Multigraph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, generate_sized(n, 3 * n, n).graph).first;
  return it->second;
}

void set_mn(benchmark::State& state, const Multigraph& g) {
  state.SetComplexityN(static_cast<std::int64_t>(g.num_vertices() * g.num_edges()));
  state.counters["n"] = static_cast<double>(g.num_vertices());
  state.counters["m"] = static_cast<double>(g.num_edges());
}

void BM_SimpleBasis(benchmark::State& state) {
  const Multigraph& g = instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(simple_basis(g, spanning_forest(g)));
  set_mn(state, g);
}

void BM_SemiFundamental(benchmark::State& state) {
  const Multigraph& g = instance(static_cast<std::size_t>(state.range(0)));
  std::size_t exchanges = 0;
  for (auto _ : state) {
    auto r = semi_fundamental_basis(g, spanning_forest(g));
    exchanges = r.exchanges;
    benchmark::DoNotOptimize(r);
  }
  set_mn(state, g);
  state.counters["exchanges"] = static_cast<double>(exchanges);
}

void BM_CompatibleChain(benchmark::State& state) {
  const Multigraph& g = instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compatible_chain(g));
  set_mn(state, g);
}

void BM_ThreeEdgeConnectivity(benchmark::State& state) {
  const Multigraph& g = instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_three_edge_connected(g));
  set_mn(state, g);
}

void BM_Membership(benchmark::State& state) {
  const Multigraph& g = instance(static_cast<std::size_t>(state.range(0)));
  EdgeVector p = EdgeVector::zero(g);
  for (EdgeId e : g.edge_ids()) p.at(g, e) = 2;
  for (auto _ : state) benchmark::DoNotOptimize(is_lattice_member(g, p));
  set_mn(state, g);
}

BENCHMARK(BM_SimpleBasis)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oN)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SemiFundamental)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oN)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CompatibleChain)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oN)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThreeEdgeConnectivity)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Membership)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
