#include <benchmark/benchmark.h>

#include <cstdint>

#include "divnet/analytic.hpp"
#include "divnet/graph_oracle.hpp"
#include "divnet/numtheory.hpp"

using namespace divnet;

static void BM_BuildSieve(benchmark::State& state) {
  for (auto _ : state) {
    SieveTables t(state.range(0));
    benchmark::DoNotOptimize(t);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildSieve)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity();

static void BM_BuildGraph(benchmark::State& state) {
  for (auto _ : state) {
    DivisibilityGraph g(state.range(0));
    benchmark::DoNotOptimize(g);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildGraph)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity();

static void BM_DivisorSummatory(benchmark::State& state) {
  const std::int64_t x = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(divisor_summatory(x));
}
BENCHMARK(BM_DivisorSummatory)->RangeMultiplier(100)->Range(100, 100000000);

// Closed form vs triangle counting for the full clustering profile of G_N.
static void BM_ClusteringAnalytic(benchmark::State& state) {
  const std::int64_t N = state.range(0);
  const SieveTables t(N);
  for (auto _ : state) benchmark::DoNotOptimize(clustering_profile(N, t));
  state.SetComplexityN(N);
}
BENCHMARK(BM_ClusteringAnalytic)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

static void BM_ClusteringOracle(benchmark::State& state) {
  const std::int64_t N = state.range(0);
  const DivisibilityGraph g(N);
  for (auto _ : state) {
    for (std::int64_t n = 1; n <= N; ++n) benchmark::DoNotOptimize(clustering_oracle(g, n));
  }
  state.SetComplexityN(N);
}
BENCHMARK(BM_ClusteringOracle)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

static void BM_BetweennessMatrix(benchmark::State& state) {
  const DivisibilityGraph g(state.range(0));
  for (auto _ : state) {
    for (std::int64_t n = 1; n <= g.size(); ++n) benchmark::DoNotOptimize(betweenness_matrix_float(g, n));
  }
}
BENCHMARK(BM_BetweennessMatrix)->Arg(250)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_BetweennessBrandes(benchmark::State& state) {
  const DivisibilityGraph g(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(betweenness_brandes(g));
}
BENCHMARK(BM_BetweennessBrandes)->Arg(250)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
