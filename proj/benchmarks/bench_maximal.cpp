#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "mixedweak/interval_family.hpp"
#include "mixedweak/maximal.hpp"

namespace {

using namespace mixedweak;

StepFunction random_profile(std::size_t n) {
  const Grid g(-4.0, 8.0 / static_cast<double>(n), n, 0.0);
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> dist(0.0, 4.0);
  std::vector<double> vals(n);
  for (double& v : vals) v = dist(rng);
  return StepFunction(g, std::move(vals));
}

void BM_MaximalFast(benchmark::State& state) {
  const StepFunction f = random_profile(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximal_fast(f));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaximalFast)->Range(1 << 12, 1 << 20)->Complexity();

void BM_MaximalBrute(benchmark::State& state) {
  const StepFunction f = random_profile(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximal_brute(f));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaximalBrute)->Range(256, 4096)->Complexity();

void BM_MaximalCentered(benchmark::State& state) {
  const StepFunction f = random_profile(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximal_fast(f, MaximalKind::Centered));
  }
}
BENCHMARK(BM_MaximalCentered)->Range(256, 4096);

void BM_MaximalLlogL(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const StepFunction f = random_profile(n);
  const IntervalFamily family = IntervalFamily::dyadic(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximal_llogl(f, family));
  }
}
BENCHMARK(BM_MaximalLlogL)->Range(256, 1024);

}  // namespace
