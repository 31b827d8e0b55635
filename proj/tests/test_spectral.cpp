#include "doctest.h"
#include "support.hpp"

using namespace geoflow;
using namespace geoflow::testing;

TEST_CASE("grid and order validation") {
  CHECK_THROWS_AS(GridSpec(6), InvalidArgument);
  CHECK_THROWS_AS(GridSpec(65), InvalidArgument);
  CHECK_THROWS_AS(GridSpec(64, 22), InvalidArgument);
  CHECK(GridSpec(64).max_mode() == 21);
  CHECK(GridSpec(128).max_mode() == 42);
  CHECK_THROWS_AS(SobolevOrder(5), InvalidArgument);
  CHECK_THROWS_AS(SobolevOrder(-1), InvalidArgument);
  CHECK_THROWS_AS(PeriodicField(GridSpec(8), std::vector<double>(7)), InvalidArgument);
  std::vector<double> bad(8, 0.0);
  bad[3] = std::nan("");
  CHECK_THROWS_AS(PeriodicField(GridSpec(8), bad), InvalidArgument);
}

TEST_CASE("derivative of Fourier eigenfunctions") {
  const GridSpec g(64);
  const auto s = sin_mode(g, 1);
  CHECK(sup_diff(derivative(s, 1), cos_mode(g, 1, kTwoPi)) < 1e-12);
  CHECK(derivative(PeriodicField::constant(g, 3.5), 1).sup_norm() < 1e-15);
  CHECK(sup_diff(derivative(s, 2), sin_mode(g, 1, -kTwoPi * kTwoPi)) < 1e-11);
}

TEST_CASE("derivative orders compose") {
  const GridSpec g(128);
  const auto u = random_band_limited(g, 7, 20, 1.0);
  for (int p = 0; p <= 4; ++p) {
    for (int q = 0; q <= 4; ++q) {
      const auto lhs = derivative(derivative(u, p), q);
      const auto rhs = derivative(u, p + q);
      CHECK(sup_diff(lhs, rhs) <= 1e-12 * (1.0 + rhs.sup_norm()));
    }
  }
}

TEST_CASE("derivative against analytic trigonometric polynomial") {
  const GridSpec g(64);
  const TrigPoly p{{{0, 0.3, 0.0}, {1, 0.5, -0.2}, {3, 0.1, 0.4}, {7, -0.05, 0.02}}};
  const auto u = p.field(g);
  for (int order = 1; order <= 5; ++order) {
    const auto du = derivative(u, order);
    const auto oracle = PeriodicField::sample(g, [&](double x) { return p.derivative_at(order, x); });
    // The oracle itself loses digits in cos(2 pi m x) * (2 pi m)^order.
    CHECK(sup_diff(du, oracle) <= 1e-10 * oracle.sup_norm());
  }
}

TEST_CASE("multiply") {
  const GridSpec g(64);
  const auto u = random_band_limited(g, 3, 10, 1.0);
  CHECK(sup_diff(multiply(u, PeriodicField::constant(g, 1.0)), u) < 1e-14);
  CHECK(multiply(u, PeriodicField::zero(g)).sup_norm() == 0.0);

  // Pointwise oracle: sin^2 = 1/2 - cos(4 pi x)/2 sampled directly.
  const auto s = sin_mode(g, 1);
  const auto oracle = PeriodicField::sample(g, [](double x) {
    const double v = std::sin(kTwoPi * x);
    return v * v;
  });
  CHECK(sup_diff(multiply(s, s), oracle) < 1e-14);
  CHECK(sup_diff(multiply(s, s), PeriodicField::sample(g, [](double x) {
          return 0.5 - 0.5 * std::cos(2 * kTwoPi * x);
        })) < 1e-14);

  CHECK_THROWS_AS(multiply(u, PeriodicField::zero(GridSpec(32))), GridMismatch);
}

TEST_CASE("multiply truncates to the retained band") {
  const GridSpec g(64);  // max_mode 21
  const auto a = sin_mode(g, 15);
  const auto p = multiply(a, a);  // modes 0 and 30
  for (int m = 1; m <= 32; ++m) CHECK(std::abs(p.coefficient(m)) < 1e-15);
  for (int m = 22; m <= 32; ++m) CHECK(p.coefficient(m) == Complex{});
  CHECK(p.mean() == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("inertia operator") {
  const GridSpec g(64);
  const auto u = random_band_limited(g, 11, 12, 1.0);
  CHECK(sup_diff(apply_inertia(SobolevOrder(0), u), u) == 0.0);
  const auto s = sin_mode(g, 1);
  CHECK(sup_diff(apply_inertia(SobolevOrder(1), s), s * (1.0 + kTwoPi * kTwoPi)) < 1e-12 * kTwoPi * kTwoPi);
  CHECK(sup_diff(apply_inertia(SobolevOrder(2), PeriodicField::constant(g, 2.5)),
                 PeriodicField::constant(g, 2.5)) < 1e-15);
  CHECK(sup_diff(invert_inertia(SobolevOrder(1), s * (1.0 + kTwoPi * kTwoPi)), s) < 1e-15);
  for (int k = 0; k <= 4; ++k) {
    CHECK(sup_diff(invert_inertia(SobolevOrder(k), PeriodicField::constant(g, -1.25)),
                   PeriodicField::constant(g, -1.25)) < 1e-15);
  }
  CHECK(inertia_multiplier(SobolevOrder(2), 1) ==
        doctest::Approx(1 + std::pow(kTwoPi, 2) + std::pow(kTwoPi, 4)));
}

TEST_CASE("inertia round trip for k = 0..4") {
  const GridSpec g(128);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto f = random_band_limited(g, seed, g.max_mode(), 1.0);
    for (int k = 0; k <= 4; ++k) {
      const SobolevOrder order(k);
      CHECK(sup_diff(invert_inertia(order, apply_inertia(order, f)), f) <= 1e-12);
    }
  }
}

TEST_CASE("inner products") {
  const GridSpec g(64);
  const auto s = sin_mode(g, 1);
  // |c_{+1}|^2 + |c_{-1}|^2 = 1/2, weighted by a_1(1).
  CHECK(inner_k(SobolevOrder(1), s, s) == doctest::Approx((1 + kTwoPi * kTwoPi) / 2).epsilon(1e-14));
  const auto one = PeriodicField::constant(g, 1.0);
  for (int k = 0; k <= 4; ++k) CHECK(inner_k(SobolevOrder(k), one, one) == doctest::Approx(1.0));

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto u = random_band_limited(g, seed, 10, 1.0);
    const auto v = random_band_limited(g, seed + 100, 10, 1.0);
    const SobolevOrder k(2);
    CHECK(inner_k(k, u, v) == doctest::Approx(inner_k(k, v, u)).epsilon(1e-14));
    CHECK(inner_k(k, u, u) > 0.0);
  }
  CHECK(inner_k(SobolevOrder(3), PeriodicField::zero(g), PeriodicField::zero(g)) == 0.0);
  CHECK_THROWS_AS(inner_k(SobolevOrder(1), s, PeriodicField::zero(GridSpec(32))), GridMismatch);
}

TEST_CASE("spectral inner product equals trapezoid quadrature of analytic derivatives") {
  const GridSpec g(64);
  const TrigPoly p{{{0, 0.2, 0.0}, {1, 0.7, -0.1}, {2, 0.0, 0.3}, {5, 0.05, 0.01}}};
  const TrigPoly q{{{0, -0.4, 0.0}, {1, 0.1, 0.9}, {4, 0.2, -0.2}, {9, 0.01, 0.02}}};
  const auto u = p.field(g);
  const auto v = q.field(g);
  for (int k = 0; k <= 3; ++k) {
    double quad = 0.0;
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; j < g.n_points(); ++j) {
        const double x = g.node(j);
        quad += p.derivative_at(i, x) * q.derivative_at(i, x) / g.n_points();
      }
    }
    const double spectral = inner_k(SobolevOrder(k), u, v);
    CHECK(std::abs(spectral - quad) <= 1e-10 * std::abs(quad));
  }
}

TEST_CASE("evaluate_at") {
  const GridSpec g(32);
  const auto s = sin_mode(g, 1);
  CHECK(evaluate_at(s, 0.25) == doctest::Approx(1.0).epsilon(1e-14));
  const auto c = cos_mode(g, 1);
  CHECK(std::abs(evaluate_at(c, 1.75)) < 1e-14);
  CHECK(evaluate_at(c, -0.25 + 3.0) == doctest::Approx(evaluate_at(c, 0.75)));

  const auto u = random_band_limited(g, 5, 10, 1.0);
  const auto nodes = g.nodes();
  const auto at_nodes = evaluate_at(u, nodes);
  for (int j = 0; j < g.n_points(); ++j) CHECK(std::abs(at_nodes[j] - u[j]) < 1e-14);

  // Interpolation also reproduces samples of a full-band (non-truncated) field.
  std::vector<double> raw(32);
  for (int j = 0; j < 32; ++j) raw[j] = std::sin(0.3 * j * j);
  const PeriodicField wild(g, raw);
  const auto back = evaluate_at(wild, nodes);
  for (int j = 0; j < 32; ++j) CHECK(std::abs(back[j] - raw[j]) < 1e-13);

  const auto [value, slope] = evaluate_with_derivative(s, 0.1);
  CHECK(value == doctest::Approx(std::sin(kTwoPi * 0.1)));
  CHECK(slope == doctest::Approx(kTwoPi * std::cos(kTwoPi * 0.1)));
}

TEST_CASE("random band-limited fields") {
  const GridSpec g(64);
  const auto a = random_band_limited(g, 42, 8, 1.0);
  const auto b = random_band_limited(g, 42, 8, 1.0);
  CHECK(sup_diff(a, b) == 0.0);
  CHECK(random_band_limited(g, 42, 8, 0.0).sup_norm() == 0.0);
  for (int m = 9; m <= 32; ++m) CHECK(std::abs(a.coefficient(m)) == 0.0);
  CHECK(a.band() <= 8);
  // Sup over a fine mesh, not just the grid.
  double sup = 0.0;
  for (int i = 0; i < 4096; ++i) sup = std::max(sup, std::abs(evaluate_at(a, i / 4096.0)));
  CHECK(sup <= 1.0);
  CHECK(sup > 0.0);
  CHECK(sup_diff(a, random_band_limited(g, 43, 8, 1.0)) > 0.0);
  CHECK_THROWS_AS(random_band_limited(g, 1, 22, 1.0), InvalidArgument);
}

TEST_CASE("Hermitian spectrum of real fields") {
  const GridSpec g(16);
  const auto u = random_band_limited(g, 9, 5, 1.0);
  for (int m = 1; m < 8; ++m) {
    CHECK(u.coefficient(-m) == std::conj(u.coefficient(m)));
  }
  CHECK(u.coefficient(0).imag() == 0.0);
}
