// Serial vs OpenMP timings for the three parallel kernels.

#include <benchmark/benchmark.h>

#include "trdeg/coquand_lombardi.hpp"
#include "trdeg/dependence.hpp"
#include "trdeg/harness.hpp"
#include "trdeg/parse.hpp"

namespace {

using namespace trdeg;

Execution mode(const benchmark::State& state) {
  return state.range(0) ? Execution::Parallel : Execution::Serial;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) ? "parallel" : "serial"); }

void BM_DependenceMatrix(benchmark::State& state) {
  const RingPtr zx = parse_ring("Poly(ZZ; x)");
  const AlgebraConfig config = AlgebraConfig::make(Ring::integers(), zx);
  const auto pool =
      parse_element_list("x, x^2 + 1, 2*x - 3, x^2 - x, 3*x^2 + 2, x + 5, -x^2 + 4*x, 2*x^2 - 1", zx);
  const auto ord = MonomialOrdering::grevlex();
  for (auto _ : state) {
    benchmark::DoNotOptimize(dependence_matrix(config, pool, 2, ord, 4, {}, mode(state)));
  }
  label(state);
}
BENCHMARK(BM_DependenceMatrix)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_FiniteRingDim(benchmark::State& state) {
  const RingPtr r = Ring::zmod(30);
  for (auto _ : state) benchmark::DoNotOptimize(finite_ring_dim_lt(r, 2, std::nullopt, mode(state)));
  label(state);
}
BENCHMARK(BM_FiniteRingDim)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Experiment(benchmark::State& state) {
  ExperimentSpec spec;
  spec.trials = 200;
  for (auto _ : state) benchmark::DoNotOptimize(run_experiment(spec, mode(state)));
  label(state);
}
BENCHMARK(BM_Experiment)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
