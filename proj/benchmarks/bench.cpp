#include <benchmark/benchmark.h>

#include "ellint/ellint.hpp"

using namespace ellint;

static void BM_ReferenceF(benchmark::State& state) {
  const EvalPoint p(0.9, 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(reference_f(p));
}
BENCHMARK(BM_ReferenceF);

static void BM_ModulusExpansion(benchmark::State& state) {
  const EvalPoint p(0.95, 0.9);
  const auto order = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(modulus_expansion(p, order));
}
BENCHMARK(BM_ModulusExpansion)->Arg(1)->Arg(3)->Arg(8);

static void BM_AmplitudeExpansion(benchmark::State& state) {
  const EvalPoint p(0.95, 0.9);
  const auto order = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(amplitude_expansion(p, order));
}
BENCHMARK(BM_AmplitudeExpansion)->Arg(1)->Arg(3)->Arg(8);

static void BM_AmplitudeExpansionCached(benchmark::State& state) {
  const EvalPoint p(0.95, 0.9);
  AnCache cache(p.lambda_comp_sq() / p.k_comp_sq());
  for (auto _ : state) benchmark::DoNotOptimize(amplitude_expansion(p, 3, cache));
}
BENCHMARK(BM_AmplitudeExpansionCached);

static void BM_CG1(benchmark::State& state) {
  const EvalPoint p(0.95, 0.95);
  for (auto _ : state) benchmark::DoNotOptimize(cg1(p));
}
BENCHMARK(BM_CG1);

static void BM_SnRecurrence(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sn_recurrence(0.8, n));
}
BENCHMARK(BM_SnRecurrence)->Arg(4)->Arg(16);

BENCHMARK_MAIN();
