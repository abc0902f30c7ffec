#include <benchmark/benchmark.h>

#include "orbitgraph/closure_poset.hpp"
#include "orbitgraph/graph_induction.hpp"
#include "orbitgraph/orbit_graph.hpp"
#include "orbitgraph/series.hpp"

using namespace orbitgraph;

static void BM_EnumerateSyd(benchmark::State& state) {
  const Partition lam({9, 9, 8, 8, 6, 5, 4, 2, 2});
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_syd(PairType::AIII, lam, 27, 26));
}
BENCHMARK(BM_EnumerateSyd);

static void BM_BuildGraph(benchmark::State& state) {
  const Partition lam({9, 9, 8, 8, 6, 5, 4, 2, 2});
  for (auto _ : state)
    benchmark::DoNotOptimize(build_graph(PairType::AIII, lam, 27, 26));
}
BENCHMARK(BM_BuildGraph);

static void BM_ComponentsSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long long total = 0;
    for (const auto& lam : partitions_of(n))
      for (int p = 0; p <= n; ++p)
        total += components_bfs(build_graph(PairType::AIII, lam, p, n - p))
                     .count;
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_ComponentsSweep)->Arg(8)->Arg(10)->Arg(12);

static void BM_Genfunc(benchmark::State& state) {
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(genfunc(PairType::CII, bound));
}
BENCHMARK(BM_Genfunc)->Arg(8)->Arg(10);

static void BM_ClosureDiagram(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(closure_diagram(PairType::AIII, 3, 3));
}
BENCHMARK(BM_ClosureDiagram);

static void BM_CoversDown(benchmark::State& state) {
  const SignedDiagram t(Partition({5, 4, 3, 2, 1}), {+1, -1, +1, -1, +1});
  for (auto _ : state)
    benchmark::DoNotOptimize(covers_down(PairType::AIII, t));
}
BENCHMARK(BM_CoversDown);

BENCHMARK_MAIN();
