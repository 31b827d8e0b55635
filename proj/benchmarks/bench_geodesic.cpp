#include <benchmark/benchmark.h>

#include "geoflow/geoflow.hpp"

using namespace geoflow;

namespace {

SolverConfig config(int n, double t_end, Integrator integrator) {
  SolverConfig c{GridSpec(n), SobolevOrder(1)};
  c.dt = 1e-3;
  c.t_end = t_end;
  c.integrator = integrator;
  return c;
}

}  // namespace

// 100 RK4 steps, so time per step is the reported time / 100.
static void BM_GeodesicSteps(benchmark::State& state) {
  const auto integrator = state.range(1) ? Integrator::rk4_mform : Integrator::rk4;
  const auto c = config(static_cast<int>(state.range(0)), 0.1, integrator);
  const auto u0 = random_band_limited(c.grid, 1, 4, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(geodesic_endpoint(u0, c));
}
BENCHMARK(BM_GeodesicSteps)->ArgsProduct({{64, 128, 256}, {0, 1}})->Unit(benchmark::kMillisecond);

static void BM_RiemannExp(benchmark::State& state) {
  const auto c = config(static_cast<int>(state.range(0)), 1.0, Integrator::rk4_mform);
  const ExpConfig cfg(c);
  const auto u0 = random_band_limited(c.grid, 2, 4, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(riemann_exp(SobolevOrder(1), u0, cfg));
}
BENCHMARK(BM_RiemannExp)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_RiemannLog(benchmark::State& state) {
  auto c = config(32, 1.0, Integrator::rk4_mform);
  c.dt = 1e-2;
  const ExpConfig cfg(c);
  const auto psi = riemann_exp(SobolevOrder(1), random_band_limited(c.grid, 2, 4, 0.05), cfg);
  for (auto _ : state) benchmark::DoNotOptimize(riemann_log(SobolevOrder(1), psi, cfg));
}
BENCHMARK(BM_RiemannLog)->Unit(benchmark::kMillisecond);
