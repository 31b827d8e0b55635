#include "doctest.h"
#include "support.hpp"

using namespace geoflow;
using namespace geoflow::testing;

TEST_CASE("bracket of sin and cos") {
  const GridSpec g(32);
  // u_x v - u v_x = 2 pi (cos^2 + sin^2).
  const auto b = lie_bracket(sin_mode(g, 1), cos_mode(g, 1));
  CHECK(sup_diff(b, PeriodicField::constant(g, -kTwoPi)) < 1e-13);
}

TEST_CASE("bracket is antisymmetric and satisfies Jacobi") {
  // Three nested products of band-12 fields reach mode 36 < max_mode 42.
  const GridSpec g(128);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto u = random_band_limited(g, seed, 12, 1.0);
    const auto v = random_band_limited(g, seed + 20, 12, 1.0);
    const auto w = random_band_limited(g, seed + 40, 12, 1.0);
    CHECK((lie_bracket(u, v) + lie_bracket(v, u)).sup_norm() < 1e-12);
    const auto jac = lie_bracket(lie_bracket(u, v), w) + lie_bracket(lie_bracket(v, w), u) +
                     lie_bracket(lie_bracket(w, u), v);
    CHECK(jac.sup_norm() < 1e-9);
  }
}

TEST_CASE("B_k on a single mode") {
  const GridSpec g(64);
  const auto s = sin_mode(g, 1);
  CHECK(sup_diff(bilinear_b(SobolevOrder(0), s, s), sin_mode(g, 2, -3 * kPi)) < 1e-12);
  const double a1 = 1 + kTwoPi * kTwoPi;
  const double a2 = 1 + 4 * kTwoPi * kTwoPi;
  CHECK(sup_diff(bilinear_b(SobolevOrder(1), s, s), sin_mode(g, 2, -3 * kPi * a1 / a2)) < 1e-12);
}

TEST_CASE("B_0(u,u) is -3 u u_x") {
  const GridSpec g(64);
  const auto u = random_band_limited(g, 2, 8, 1.0);
  const auto oracle = -3.0 * multiply(u, derivative(u));
  CHECK(sup_diff(bilinear_b(SobolevOrder(0), u, u), oracle) < 1e-12);
}

TEST_CASE("B_k is the adjoint of the bracket") {
  const GridSpec g(64);  // band 10 keeps every product below max_mode 21
  for (int k = 0; k <= 4; ++k) {
    const SobolevOrder order(k);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto u = random_band_limited(g, seed, 10, 1.0);
      const auto v = random_band_limited(g, seed + 11, 10, 1.0);
      const auto w = random_band_limited(g, seed + 22, 10, 1.0);
      const double lhs = inner_k(order, bilinear_b(order, u, v), w);
      const double rhs = inner_k(order, u, lie_bracket(v, w));
      CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(rhs)));
    }
  }
}

TEST_CASE("Q_k is symmetric and Theta reproduces the symmetric transport form") {
  const GridSpec g(64);
  for (int k = 0; k <= 3; ++k) {
    const SobolevOrder order(k);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto u = random_band_limited(g, seed, 8, 1.0);
      const auto v = random_band_limited(g, seed + 7, 8, 1.0);
      CHECK(sup_diff(q_operator(order, u, v), q_operator(order, v, u)) < 1e-11);
      CHECK(sup_diff(theta_operator(order, u, v), theta_operator(order, v, u)) < 1e-11);
      const auto a = transport_rhs(order, u, v);
      const auto b = transport_rhs_symmetric(order, u, v);
      // The two routes cancel terms of size |A_k u| |v_x| differently.
      const double scale = apply_inertia(order, u).sup_norm() * derivative(v).sup_norm() +
                           apply_inertia(order, v).sup_norm() * derivative(u).sup_norm();
      CHECK(sup_diff(a, b) <= 1e-14 * scale);
    }
  }
}

TEST_CASE("transport along a one-parameter subgroup is an isometry") {
  // With u frozen the curve is the flow of u, and the transport generator
  // must be skew with respect to <.,.>_k.
  const GridSpec g(64);
  for (int k = 0; k <= 3; ++k) {
    const SobolevOrder order(k);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto u = random_band_limited(g, seed, 6, 1.0);
      const auto v = random_band_limited(g, seed + 30, 6, 1.0);
      const auto w = random_band_limited(g, seed + 60, 6, 1.0);
      const double d = inner_k(order, transport_rhs(order, u, v), w) +
                       inner_k(order, v, transport_rhs(order, u, w));
      const double scale = norm_k(order, u) * norm_k(order, v) * norm_k(order, w);
      CHECK(std::abs(d) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("operators reject mixed grids") {
  const auto a = sin_mode(GridSpec(32), 1);
  const auto b = sin_mode(GridSpec(64), 1);
  CHECK_THROWS_AS(lie_bracket(a, b), GridMismatch);
  CHECK_THROWS_AS(bilinear_b(SobolevOrder(1), a, b), GridMismatch);
}
