#include <limits>

#include "doctest.h"
#include "support.hpp"

using namespace geoflow;
using namespace geoflow::testing;

namespace {
const double kTstar = 1.0 / (6.0 * kPi);
}

TEST_CASE("blow-up time from the steepest descent of u0") {
  const GridSpec g(64);
  CHECK(std::isinf(blowup_time(PeriodicField::constant(g, 0.7))));
  CHECK(std::isinf(blowup_time(PeriodicField::zero(g))));
  CHECK(blowup_time(sin_mode(g, 1)) == doctest::Approx(kTstar).epsilon(1e-12));
  CHECK(blowup_time(sin_mode(g, 1, -1.0)) == doctest::Approx(kTstar).epsilon(1e-12));
  CHECK(blowup_time(sin_mode(g, 1, 0.5)) == doctest::Approx(2 * kTstar).epsilon(1e-12));
  CHECK(blowup_time(sin_mode(g, 3)) == doctest::Approx(kTstar / 3).epsilon(1e-12));
}

TEST_CASE("crossing detector agrees with the formula") {
  const GridSpec g(64);
  const double detected = detect_blowup(sin_mode(g, 1));
  CHECK(std::abs(detected - kTstar) <= 0.02 * kTstar);
  CHECK(std::abs(detected - kTstar) <= 1e-4 * kTstar);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto u0 = random_band_limited(g, seed, 5, 1.0);
    const double a = blowup_time(u0);
    const double b = detect_blowup(u0);
    CHECK(std::abs(a - b) <= 0.02 * a);
  }
  CHECK(std::isinf(detect_blowup(PeriodicField::constant(g, 0.3))));
}

TEST_CASE("characteristics at t = 0 and for constants") {
  const GridSpec g(32);
  const auto u0 = mix(g);
  const auto s = characteristics_solve(u0, 0.0);
  for (int j = 0; j < 32; ++j) {
    CHECK(s.foot_points[static_cast<std::size_t>(j)] == doctest::Approx(g.node(j)).epsilon(1e-15));
  }
  CHECK(sup_diff(s.field(), u0) < 1e-14);
  const auto c = characteristics_solve(PeriodicField::constant(g, -0.4), 3.0);
  CHECK(sup_diff(c.field(), PeriodicField::constant(g, -0.4)) < 1e-14);
}

TEST_CASE("foot points satisfy the characteristic relation") {
  const GridSpec g(128);
  const auto u0 = sin_mode(g, 1);
  const auto s = characteristics_solve(u0, 0.9 * kTstar);
  const auto u_at_foot = evaluate_at(u0, s.foot_points);
  for (int j = 0; j < 128; ++j) {
    const auto jj = static_cast<std::size_t>(j);
    CHECK(std::abs(s.foot_points[jj] + 3 * u_at_foot[jj] * s.t - g.node(j)) <= 1e-12);
    CHECK(std::abs(s.u_values[jj] - u_at_foot[jj]) <= 1e-10);
  }
}

TEST_CASE("characteristics past blow-up are refused") {
  const GridSpec g(32);
  CHECK_THROWS_AS(characteristics_solve(sin_mode(g, 1), kTstar * 1.01), PastBlowUp);
  CHECK_THROWS_AS(flow_map_k0(sin_mode(g, 1), kTstar), PastBlowUp);
  CHECK_THROWS_AS(characteristics_solve(sin_mode(g, 1), -0.1), InvalidArgument);
}

TEST_CASE("characteristics agree with the spectral k = 0 integrator") {
  const GridSpec g(128);
  const auto u0 = sin_mode(g, 1);
  const double t = 0.5 * kTstar;
  SolverConfig c{g, SobolevOrder(0)};
  c.dt = 1e-5;
  c.t_end = t;
  const auto spectral = geodesic_endpoint(u0, c).u;
  CHECK(sup_diff(characteristics_solve(u0, t).field(), spectral) <= 1e-6);
}

TEST_CASE("L2 energy is conserved before blow-up") {
  const GridSpec g(256);
  const auto u0 = sin_mode(g, 1);
  const double e0 = inner_k(SobolevOrder(0), u0, u0);
  for (double f : {0.2, 0.5}) {
    const auto u = characteristics_solve(u0, f * kTstar).field();
    CHECK(std::abs(inner_k(SobolevOrder(0), u, u) - e0) <= 1e-8 * e0);
  }
}

TEST_CASE("k = 0 flow map") {
  const GridSpec g(32);
  CHECK(sup_diff(flow_map_k0(PeriodicField::zero(g), 0.7), identity_diffeo(g)) == 0.0);
  CHECK(sup_diff(flow_map_k0(PeriodicField::constant(g, 0.2), 0.5), CircleDiffeo::rotation(g, 0.1)) <
        1e-14);
  const auto u0 = sin_mode(GridSpec(64), 1);
  double prev = 1.0;
  for (double f : {0.2, 0.5, 0.8}) {
    const double s = flow_map_k0(u0, f * kTstar).min_slope();
    CHECK(s < prev);
    prev = s;
  }
}

TEST_CASE("k = 0 flow map matches the spectral geodesic flow") {
  const GridSpec g(128);
  const auto u0 = sin_mode(g, 1, 0.1);
  const double t = 0.25;  // breaking at ~0.53
  SolverConfig c{g, SobolevOrder(0)};
  c.dt = 1e-4;
  c.t_end = t;
  const auto phi = geodesic_endpoint(u0, c).phi;
  CHECK(sup_diff(flow_map_k0(u0, t, 200), phi) <= 1e-9);
}

TEST_CASE("differentiability probe") {
  SolverConfig s{GridSpec(32), SobolevOrder(1)};
  s.dt = 0.01;
  const ExpConfig cfg(s);
  const GridSpec& g = s.grid;
  const std::vector<double> hs{1e-3, 1e-4};

  SUBCASE("rotation direction at the origin") {
    const auto rep = exp_c1_failure_probe(PeriodicField::zero(g), {PeriodicField::constant(g, 1.0)},
                                          hs, cfg, 50);
    REQUIRE(rep.k0.size() == 2);
    REQUIRE(rep.control.size() == 2);
    for (const auto& r : rep.k0) {
      CHECK(r.valid);
      CHECK(r.fd_norm == doctest::Approx(1.0).epsilon(1e-9));
    }
    CHECK(std::isnan(rep.k0[0].ratio));
    CHECK(rep.k0[1].ratio == doctest::Approx(1.0).epsilon(1e-9));
  }

  SUBCASE("smooth control converges") {
    const auto u0 = sin_mode(g, 1, 0.05);
    const auto rep = exp_c1_failure_probe(u0, {sin_mode(g, 2), sin_mode(g, 8)}, hs, cfg, 100);
    REQUIRE(rep.control.size() == 4);
    REQUIRE(rep.k0.size() == 4);
    for (const auto& r : rep.control) CHECK(r.valid);
    CHECK(std::abs(rep.control[1].ratio - 1.0) <= 1e-4);
    CHECK(std::isfinite(rep.control[3].ratio));
    // sin 16 pi x at h = 1e-3 steepens u0 enough to break before t = 1.
    CHECK(rep.k0[0].valid);
    CHECK(rep.k0[1].valid);
    CHECK_FALSE(rep.k0[2].valid);
    CHECK(std::isnan(rep.k0[2].fd_norm));
    CHECK(rep.k0[3].valid);
  }
}
