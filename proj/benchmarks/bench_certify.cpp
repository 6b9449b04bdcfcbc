#include <benchmark/benchmark.h>

#include "openpack/certify.hpp"
#include "openpack/generators.hpp"
#include "openpack/oracle.hpp"

using namespace openpack;

namespace {

// {0, 1, 4, 5, 8, 9, ...} is an open packing of C_n for n divisible by 4, so
// both checks scan all of S.
VertexSet cycle_packing(std::size_t n) {
  VertexSet S;
  for (Vertex v = 0; v < n; v += 4) S.insert(S.end(), {v, v + 1});
  return S;
}

void BM_OpenPackingFast(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Graph g = gen_cycle(n);
  VertexSet S = cycle_packing(n);
  for (auto _ : state) benchmark::DoNotOptimize(is_open_packing_fast(g, S).valid);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OpenPackingFast)->RangeMultiplier(2)->Range(64, 2048)->Complexity();

void BM_OpenPackingNaive(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Graph g = gen_cycle(n);
  VertexSet S = cycle_packing(n);
  for (auto _ : state) benchmark::DoNotOptimize(is_open_packing_naive(g, S).valid);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OpenPackingNaive)->RangeMultiplier(2)->Range(64, 2048)->Complexity();

void BM_MaxOpenPackingOracle(benchmark::State& state) {
  Graph g = gen_random_graph(static_cast<std::size_t>(state.range(0)), 0.3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(max_open_packing_bf(g).size());
}
BENCHMARK(BM_MaxOpenPackingOracle)->DenseRange(10, 22, 4);

}  // namespace

BENCHMARK_MAIN();
