#include <benchmark/benchmark.h>

#include "openpack/generators.hpp"
#include "openpack/matching.hpp"

using namespace openpack;

namespace {

Multigraph random_multigraph(std::size_t n, std::size_t m, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<MultiEdge> edges;
  for (std::uint32_t label = 0; label < m; ++label) {
    auto u = static_cast<Vertex>(rng.uniform(n));
    auto v = static_cast<Vertex>(rng.uniform(n - 1));
    if (v >= u) ++v;
    edges.push_back({u, v, label});
  }
  return Multigraph(n, std::move(edges));
}

void BM_MaxMatchingPoly(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Multigraph mg = random_multigraph(n, 3 * n, 11);
  for (auto _ : state) benchmark::DoNotOptimize(max_matching_poly(mg).size());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxMatchingPoly)->RangeMultiplier(2)->Range(16, 1024)->Complexity();

void BM_MaxMatchingOddCycle(benchmark::State& state) {
  Graph c = gen_cycle(static_cast<std::size_t>(state.range(0)));
  std::vector<MultiEdge> edges;
  std::uint32_t label = 0;
  for (auto [u, v] : c.edges()) edges.push_back({u, v, label++});
  Multigraph mg(c.order(), std::move(edges));
  for (auto _ : state) benchmark::DoNotOptimize(max_matching_poly(mg).size());
}
BENCHMARK(BM_MaxMatchingOddCycle)->Arg(101)->Arg(1001);

}  // namespace

BENCHMARK_MAIN();
