#include <numbers>

#include <benchmark/benchmark.h>

#include "mzent/fock.hpp"
#include "mzent/gaussian.hpp"
#include "mzent/observables.hpp"

using namespace mzent;
using std::numbers::pi;

static void BM_GaussianEpsilon(benchmark::State& state) {
  const auto s = InputSpec::from_energy(3.0, 0.5);
  double phi = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gaussian::epsilon(s, s, phi));
    phi += 1e-3;
  }
}
BENCHMARK(BM_GaussianEpsilon);

static void BM_VisibilityH(benchmark::State& state) {
  const auto s = InputSpec::from_energy(3.0, 0.5);
  const PhiScan scan{static_cast<int>(state.range(0)), 1e-6};
  for (auto _ : state) benchmark::DoNotOptimize(visibility_H(s, s, scan).v);
}
BENCHMARK(BM_VisibilityH)->Arg(256)->Arg(1024);

static void BM_MzUnitaryBuild(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  for (auto _ : state) {
    fock::MzUnitary u(pi / 3, dim);
    benchmark::DoNotOptimize(&u);
  }
}
BENCHMARK(BM_MzUnitaryBuild)->Arg(32)->Arg(64)->Arg(96)->Unit(benchmark::kMillisecond);

static void BM_BuildInput(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const auto s = InputSpec::from_energy(1.0, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(fock::build_input(s, s, {dim, 1e-4}).amplitudes.data());
}
BENCHMARK(BM_BuildInput)->Arg(32)->Arg(96)->Unit(benchmark::kMicrosecond);

static void BM_FockEvaluateAuto(benchmark::State& state) {
  const auto s = InputSpec::from_energy(static_cast<double>(state.range(0)), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(fock::evaluate_auto(s, s, pi / 4).epsilon);
}
BENCHMARK(BM_FockEvaluateAuto)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
