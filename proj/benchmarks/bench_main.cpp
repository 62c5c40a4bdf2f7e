#include <benchmark/benchmark.h>

#include "pancake/cycle_census.hpp"
#include "pancake/layer_search.hpp"

using namespace pancake;

static void BM_LayerProfilePlain(benchmark::State& state) {
  const auto g = GraphKind::plain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(layer_profile(g));
  state.counters["vertices/s"] = benchmark::Counter(static_cast<double>(g.order()) * state.iterations(),
                                                    benchmark::Counter::kIsRate);
}
BENCHMARK(BM_LayerProfilePlain)->DenseRange(7, 9)->Unit(benchmark::kMillisecond);

static void BM_LayerProfileBurnt(benchmark::State& state) {
  const auto g = GraphKind::burnt(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(layer_profile(g));
  state.counters["vertices/s"] = benchmark::Counter(static_cast<double>(g.order()) * state.iterations(),
                                                    benchmark::Counter::kIsRate);
}
BENCHMARK(BM_LayerProfileBurnt)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

static void BM_RankRoundTrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RankIndex order = factorial(n);
  RankIndex r = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank(unrank(n, r)));
    r = (r + 7919) % order;
  }
}
BENCHMARK(BM_RankRoundTrip)->Arg(10)->Arg(16);

static void BM_SignedRankRoundTrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RankIndex order = signed_group_order(n);
  RankIndex r = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(srank(sunrank(n, r)));
    r = (r + 7919) % order;
  }
}
BENCHMARK(BM_SignedRankRoundTrip)->Arg(8)->Arg(14);

static void BM_CycleEnumeration(benchmark::State& state) {
  const auto g = GraphKind::plain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cycles(g, 9));
}
BENCHMARK(BM_CycleEnumeration)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
