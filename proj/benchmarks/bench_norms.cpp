#include <benchmark/benchmark.h>

#include <limits>
#include <random>
#include <vector>

#include "mixedweak/interval_family.hpp"
#include "mixedweak/norms.hpp"
#include "mixedweak/weight_constants.hpp"

namespace {

using namespace mixedweak;

StepFunction random_profile(std::size_t n, double lo, double hi) {
  const Grid g(-4.0, 8.0 / static_cast<double>(n), n, 0.0);
  std::mt19937_64 rng(54321);
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> vals(n);
  for (double& v : vals) v = dist(rng);
  return StepFunction(g, std::move(vals));
}

void BM_WeakNorm(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const StepFunction f = random_profile(n, 0.0, 4.0);
  const WeightedMeasure mu{random_profile(n, 0.25, 4.0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(weak_norm(f, 1.0, mu));
  }
}
BENCHMARK(BM_WeakNorm)->Range(1 << 10, 1 << 18);

void BM_LorentzNorm(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const StepFunction f = random_profile(n, 0.0, 4.0);
  const WeightedMeasure mu{random_profile(n, 0.25, 4.0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(lorentz_p1_norm(f, 1.0, mu));
  }
}
BENCHMARK(BM_LorentzNorm)->Range(1 << 10, 1 << 18);

void BM_A1Constant(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const StepFunction w = random_profile(n, 0.25, 4.0);
  const IntervalFamily family = IntervalFamily::all(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a1_constant(w, family));
  }
}
BENCHMARK(BM_A1Constant)->Range(256, 2048);

void BM_ReverseHolderInfty(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const StepFunction w = random_profile(n, 0.25, 4.0);
  const IntervalFamily family = IntervalFamily::all(n);
  const double inf = std::numeric_limits<double>::infinity();
  for (auto _ : state) {
    benchmark::DoNotOptimize(rh_constant(w, inf, family));
  }
}
BENCHMARK(BM_ReverseHolderInfty)->Range(256, 2048);

}  // namespace
