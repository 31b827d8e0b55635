#include <benchmark/benchmark.h>

#include "geoflow/geoflow.hpp"

using namespace geoflow;

static void BM_Derivative(benchmark::State& state) {
  const GridSpec g(static_cast<int>(state.range(0)));
  const auto u = random_band_limited(g, 1, g.max_mode() / 2, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(derivative(u));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Derivative)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

static void BM_Multiply(benchmark::State& state) {
  const GridSpec g(static_cast<int>(state.range(0)));
  const auto u = random_band_limited(g, 1, g.max_mode() / 2, 1.0);
  const auto v = random_band_limited(g, 2, g.max_mode() / 2, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(u, v));
}
BENCHMARK(BM_Multiply)->RangeMultiplier(2)->Range(64, 1024);

static void BM_BilinearB(benchmark::State& state) {
  const GridSpec g(128);
  const SobolevOrder k(static_cast<int>(state.range(0)));
  const auto u = random_band_limited(g, 1, 16, 1.0);
  const auto v = random_band_limited(g, 2, 16, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(bilinear_b(k, u, v));
}
BENCHMARK(BM_BilinearB)->DenseRange(0, 3);

static void BM_Compose(benchmark::State& state) {
  const GridSpec g(static_cast<int>(state.range(0)));
  SolverConfig c{g, SobolevOrder(1)};
  c.dt = 1e-2;
  c.t_end = 0.5;
  const auto phi = geodesic_endpoint(random_band_limited(g, 3, 4, 0.1), c).phi;
  for (auto _ : state) benchmark::DoNotOptimize(compose(phi, phi));
}
BENCHMARK(BM_Compose)->RangeMultiplier(2)->Range(32, 256);
