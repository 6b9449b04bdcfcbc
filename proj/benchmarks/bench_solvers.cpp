#include <benchmark/benchmark.h>

#include "openpack/generators.hpp"
#include "openpack/recognize.hpp"
#include "openpack/solvers.hpp"

using namespace openpack;

namespace {

void BM_SolveI1Split(benchmark::State& state) {
  const auto half = static_cast<std::size_t>(state.range(0)) / 2;
  auto [g, part] = gen_random_split(half, half, 1, 1, 21);
  for (auto _ : state) benchmark::DoNotOptimize(solve_tds_i1_split(g, part).optimum());
}
BENCHMARK(BM_SolveI1Split)->Arg(20)->Arg(40)->Arg(200);

void BM_SolveSplitDeg12(benchmark::State& state) {
  const auto half = static_cast<std::size_t>(state.range(0)) / 2;
  auto [g, part] = gen_random_split(half, half, 1, 2, 23);
  for (auto _ : state) benchmark::DoNotOptimize(solve_op_split_deg12(g, part).optimum());
}
BENCHMARK(BM_SolveSplitDeg12)->Arg(20)->Arg(40)->Arg(200);

void BM_SolveK13FreeSplit(benchmark::State& state) {
  auto [g, part] = gen_random_split(static_cast<std::size_t>(state.range(0)), 2, 1, 1, 29);
  for (auto _ : state) benchmark::DoNotOptimize(solve_op_k13free_split(g, part).optimum());
}
BENCHMARK(BM_SolveK13FreeSplit)->Arg(10)->Arg(38);

void BM_AutoSolveGr(benchmark::State& state) {
  Graph g = gen_Gr(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(auto_solve(g, Problem::open_packing).optimum());
}
BENCHMARK(BM_AutoSolveGr)->DenseRange(1, 4);

void BM_RecognizeP4UnionIsolated(benchmark::State& state) {
  Graph g = gen_random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 31);
  for (auto _ : state) benchmark::DoNotOptimize(is_pt_union_sk1_free(g, 4, 2).free);
}
BENCHMARK(BM_RecognizeP4UnionIsolated)->Arg(12)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
