#include <benchmark/benchmark.h>

#include <cmath>

#include "gdec/decoherence.hpp"
#include "gdec/kernels.hpp"
#include "gdec/polarization.hpp"
#include "gdec/quadrature.hpp"
#include "gdec/stochastic.hpp"

namespace {

using namespace gdec;

void BM_CutoffF(benchmark::State& state) {
  double x = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cutoff_F(x));
    x += 0.37;
    if (x > 100.0) x = 0.01;
  }
}
BENCHMARK(BM_CutoffF);

void BM_GofX(benchmark::State& state) {
  double x = 0.15;
  for (auto _ : state) {
    benchmark::DoNotOptimize(G_of_x(x));
    x += 0.83;
    if (x > 60.0) x = 0.15;
  }
}
BENCHMARK(BM_GofX);

void BM_PolarizationPair(benchmark::State& state) {
  SpatialVector k{0.3, -0.5, 0.81};
  for (auto _ : state) {
    benchmark::DoNotOptimize(polarization_pair(k));
  }
}
BENCHMARK(BM_PolarizationPair);

void BM_AngularIntegral(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(angular_integral_numeric(order));
  }
}
BENCHMARK(BM_AngularIntegral)->Arg(3)->Arg(8)->Arg(16);

void BM_GammaPiecewise(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  DecoherenceParams p;
  p.graviton = {1.0, 1.0};
  p.bath.lambda = 1.0;
  p.bath.gamma = 108.0 * 1e-4 / 3.14159265358979;
  p.config.Xi = {1.0, 0.0, 0.0};
  p.config.v = {0.0, 1.0, 0.0};
  p.config.t_f = x;
  const VacuumGravitonKernel kernel(p.graviton);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma_piecewise(p, kernel, 1e-6));
  }
}
BENCHMARK(BM_GammaPiecewise)->Arg(5)->Arg(25)->Arg(50);

void BM_CovarianceBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const TimeGrid grid{0.0, 5.0, n};
  const GravitonParams p{1.0, 1.0};
  for (auto _ : state) {
    NoiseCovariance cov(grid, p);
    benchmark::DoNotOptimize(cov.max_eigenvalue());
  }
}
BENCHMARK(BM_CovarianceBuild)->Arg(32)->Arg(64)->Arg(128)->Arg(256);

void BM_SampleNoise(benchmark::State& state) {
  const TimeGrid grid{0.0, 5.0, 64};
  const GravitonParams p{1.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_noise(grid, p, 100, 7));
  }
}
BENCHMARK(BM_SampleNoise);

void BM_McDecoherence(benchmark::State& state) {
  DecoherenceParams p;
  p.graviton = {1.0, 1.0};
  p.bath.lambda = 0.0;
  p.config.Xi = {1.0, 0.0, 0.0};
  p.config.v = {0.0, 1.0, 0.0};
  p.config.t_f = 5.0;
  const TimeGrid grid{0.0, 5.0, 64};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        mc_decoherence_factor(p, grid, static_cast<int>(state.range(0)), 3));
  }
}
BENCHMARK(BM_McDecoherence)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
