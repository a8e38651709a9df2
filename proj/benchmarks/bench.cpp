// Microbenchmarks for the Monte Carlo hot path: configuration sampling,
// cluster labeling, and arm detection at a few annulus sizes.

#include <benchmark/benchmark.h>

#include "perc/arm_events.hpp"

using namespace perc;

static void BM_SampleCritical(benchmark::State& state) {
  Box box{{0, 0}, (int)state.range(0)};
  std::uint64_t t = 0;
  for (auto _ : state) {
    Configuration cfg = Configuration::sample_critical(box, {1, t++});
    benchmark::DoNotOptimize(cfg);
  }
}
BENCHMARK(BM_SampleCritical)->Arg(17)->Arg(33)->Arg(65);

static void BM_LabelClusters(benchmark::State& state) {
  Box box{{0, 0}, (int)state.range(0)};
  auto within = box_edges(box);
  std::uint64_t t = 0;
  for (auto _ : state) {
    Configuration cfg = Configuration::sample_critical(box, {2, t++});
    ClusterLabeling lab = label_clusters(cfg, within, Color::O);
    benchmark::DoNotOptimize(lab);
  }
}
BENCHMARK(BM_LabelClusters)->Arg(16)->Arg(32);

static void BM_DetectArms(benchmark::State& state) {
  int N = (int)state.range(0);
  Box box{{0, 0}, N + 1};
  Annulus a{{0, 0}, 2, N};
  ColorSequence sigma{Color::O, Color::Cs, Color::Cs};
  std::uint64_t t = 0;
  for (auto _ : state) {
    Configuration cfg = Configuration::sample_critical(box, {3, t++});
    benchmark::DoNotOptimize(detect_arms(cfg, a, sigma));
  }
}
BENCHMARK(BM_DetectArms)->Arg(16)->Arg(32)->Arg(64);

static void BM_DetectSeparated(benchmark::State& state) {
  int N = (int)state.range(0);
  Box box{{0, 0}, N + 1};
  Annulus a{{0, 0}, N / 8, N};
  ColorSequence sigma{Color::O, Color::Cs};
  std::uint64_t t = 0;
  for (auto _ : state) {
    Configuration cfg = Configuration::sample_critical(box, {4, t++});
    benchmark::DoNotOptimize(detect_separated(cfg, a, sigma, 5));
  }
}
BENCHMARK(BM_DetectSeparated)->Arg(64)->Arg(128);

BENCHMARK_MAIN();
