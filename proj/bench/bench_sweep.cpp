// Serial reference against the OpenMP sweep on the identity-checking grid.
#include <benchmark/benchmark.h>

#include "uqkit/sweep.hpp"

namespace {

void BM_Identity31(benchmark::State& state, uqkit::Exec exec) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(uqkit::sweep_identity_31(degree, -2, 2, exec));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(uqkit::monomial_grid(-2, 2, degree).size()));
}

void BM_Hopf(benchmark::State& state, uqkit::Exec exec) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(uqkit::sweep_hopf_axioms(2, degree, exec));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Identity31, serial, uqkit::Exec::Serial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Identity31, parallel, uqkit::Exec::Parallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Hopf, serial, uqkit::Exec::Serial)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Hopf, parallel, uqkit::Exec::Parallel)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
