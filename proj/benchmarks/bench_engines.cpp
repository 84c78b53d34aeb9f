#include <benchmark/benchmark.h>

#include "pat1324/avoider.hpp"
#include "pat1324/fe_engine.hpp"
#include "pat1324/inversion.hpp"
#include "pat1324/permutation.hpp"

using namespace pat1324;

static void BM_CountAvoiders(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_avoiders(n));
}
BENCHMARK(BM_CountAvoiders)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

static void BM_CountAvoidersFixedWidth(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_avoiders(n, {.fixed_width = true}));
}
BENCHMARK(BM_CountAvoidersFixedWidth)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

static void BM_CountAvoidersUpto(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_avoiders_upto(n));
}
BENCHMARK(BM_CountAvoidersUpto)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_SeriesCounts(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int r = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(series_counts(n, r));
}
BENCHMARK(BM_SeriesCounts)->Args({10, 0})->Args({10, 1})->Args({10, 2})->Args({12, 1})->Unit(benchmark::kMillisecond);

static void BM_AvoidersByInversions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(avoiders_by_inversions(n));
}
BENCHMARK(BM_AvoidersByInversions)->Arg(10)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_BruteForceDistribution(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto tau = Permutation::parse("1324");
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_distribution(n, tau));
}
BENCHMARK(BM_BruteForceDistribution)->DenseRange(7, 9, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
