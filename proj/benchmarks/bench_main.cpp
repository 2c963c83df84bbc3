#include <benchmark/benchmark.h>

#include "randcx/constants.hpp"
#include "randcx/homology.hpp"
#include "randcx/models.hpp"
#include "randcx/param_functions.hpp"
#include "randcx/persistence.hpp"
#include "randcx/rng.hpp"
#include "randcx/spectral.hpp"

using namespace randcx;

static void BM_RankExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto X = sample_static(n, MultiParameter::lm(2, 0.5), 7, 2);
  const auto B = boundary_matrix(X, 2);
  for (auto _ : state) benchmark::DoNotOptimize(rank_exact(B));
}
BENCHMARK(BM_RankExact)->Arg(8)->Arg(10)->Arg(12);

static void BM_RankModP(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto X = sample_static(n, MultiParameter::lm(2, 0.5), 7, 2);
  const auto B = boundary_matrix(X, 2);
  for (auto _ : state) benchmark::DoNotOptimize(rank_mod_p(B));
}
BENCHMARK(BM_RankModP)->Arg(8)->Arg(12)->Arg(20);

static void BM_BettiStepsClique(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto proc = sample_process(n, ParamFunctions::clique(), 2, trial_seed(1, static_cast<std::uint64_t>(n), 0));
  for (auto _ : state) benchmark::DoNotOptimize(betti_steps(proc, 1));
}
BENCHMARK(BM_BettiStepsClique)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);

static void BM_BettiStepsLM(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto proc = sample_process(n, ParamFunctions::lm(2), 1, trial_seed(2, static_cast<std::uint64_t>(n), 0));
  for (auto _ : state) benchmark::DoNotOptimize(betti_steps(proc, 1));
}
BENCHMARK(BM_BettiStepsLM)->Arg(15)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_SampleProcess(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t t = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_process(n, ParamFunctions::clique(), 2, trial_seed(3, 0, t++)));
}
BENCHMARK(BM_SampleProcess)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

static void BM_BettiBound(benchmark::State& state) {
  const auto X = sample_static(10, MultiParameter::clique(10, 0.6), 5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(betti_upper_bound(X, 2));
}
BENCHMARK(BM_BettiBound);

static void BM_Constants(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(I_quadrature(d, 2.0));
    benchmark::DoNotOptimize(I_series(d, 2));
  }
}
BENCHMARK(BM_Constants)->DenseRange(1, 3);

BENCHMARK_MAIN();
