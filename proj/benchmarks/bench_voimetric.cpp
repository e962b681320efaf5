#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "voi/binpack.hpp"
#include "voi/greedy_mmi.hpp"
#include "voi/reduction.hpp"
#include "voi/transport.hpp"

namespace {

voi::Distribution random_distribution(std::mt19937_64& rng, std::size_t n) {
  std::vector<double> v(n);
  double sum = 0.0;
  for (double& x : v) {
    x = 1e-9 + static_cast<double>(rng() >> 11) * 0x1.0p-53;
    sum += x;
  }
  for (double& x : v) x /= sum;
  return voi::Distribution(std::move(v));
}

void BM_GreedyMetricBound(benchmark::State& state) {
  std::mt19937_64 rng(1);
  voi::Distribution phi = random_distribution(rng, static_cast<std::size_t>(state.range(0)));
  voi::Distribution psi = random_distribution(rng, 100);
  for (auto _ : state) {
    auto trace = voi::greedy_metric_bound(phi, psi);
    benchmark::DoNotOptimize(trace.d_bound);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GreedyMetricBound)->RangeMultiplier(10)->Range(1000, 100000)->Complexity();

void BM_BestFitOverstuff(benchmark::State& state) {
  std::mt19937_64 rng(2);
  voi::PackingInstance inst{
      random_distribution(rng, static_cast<std::size_t>(state.range(0))).probs(),
      voi::uniform(64).probs()};
  for (auto _ : state) {
    auto r = voi::best_fit_overstuff(inst);
    benchmark::DoNotOptimize(r.loads);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BestFitOverstuff)->RangeMultiplier(4)->Range(1024, 262144)->Complexity();

void BM_GreedyReduce(benchmark::State& state) {
  std::mt19937_64 rng(3);
  voi::Distribution phi = random_distribution(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto r = voi::greedy_reduce(phi, 32);
    benchmark::DoNotOptimize(r.entropy);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GreedyReduce)->RangeMultiplier(10)->Range(1000, 100000)->Complexity();

void BM_ExactMetric4x4(benchmark::State& state) {
  std::mt19937_64 rng(4);
  voi::Distribution phi = random_distribution(rng, 4);
  voi::Distribution psi = random_distribution(rng, 4);
  for (auto _ : state) {
    auto r = voi::exact_metric(phi, psi);
    benchmark::DoNotOptimize(r.distance);
  }
}
BENCHMARK(BM_ExactMetric4x4);

void BM_ExactNx2(benchmark::State& state) {
  std::mt19937_64 rng(5);
  voi::Distribution phi = random_distribution(rng, static_cast<std::size_t>(state.range(0)));
  voi::Distribution psi = random_distribution(rng, 2);
  for (auto _ : state) {
    auto r = voi::exact_nx2(phi, psi);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_ExactNx2)->DenseRange(8, 16, 4);

}  // namespace

BENCHMARK_MAIN();
