#include "doctest.h"
#include "support.hpp"

using namespace geoflow;
using namespace geoflow::testing;

TEST_CASE("construction rejects folded maps") {
  const GridSpec g(64);
  // slope 1 + 2 pi a cos: folds once a > 1/(2 pi).
  CHECK_NOTHROW(CircleDiffeo(sin_mode(g, 1, 0.15)));
  CHECK_THROWS_AS(CircleDiffeo(sin_mode(g, 1, 0.2)), DegenerateDiffeo);
  CHECK(CircleDiffeo(sin_mode(g, 1, 0.1)).min_slope() ==
        doctest::Approx(1.0 - kTwoPi * 0.1).epsilon(1e-12));
  CHECK(identity_diffeo(g).min_slope() == 1.0);
}

TEST_CASE("rotations form a subgroup") {
  const GridSpec g(32);
  const auto a = CircleDiffeo::rotation(g, 0.3);
  const auto b = CircleDiffeo::rotation(g, -0.45);
  CHECK(sup_diff(compose(a, b), CircleDiffeo::rotation(g, -0.15)) < 1e-15);
  CHECK(sup_diff(invert(a), CircleDiffeo::rotation(g, -0.3)) < 1e-14);
}

TEST_CASE("composition matches pointwise evaluation") {
  const GridSpec g(64);
  const double e = 0.08;
  const double d = 0.05;
  const CircleDiffeo phi(sin_mode(g, 1, e));
  const CircleDiffeo psi(cos_mode(g, 2, d));
  const auto c = compose(phi, psi);
  for (int j = 0; j < g.n_points(); ++j) {
    const double x = g.node(j);
    const double y = x + d * std::cos(2 * kTwoPi * x);
    const double oracle = y + e * std::sin(kTwoPi * y) - x;
    CHECK(std::abs(c.displacement()[j] - oracle) < 1e-15);
  }
}

TEST_CASE("identity, inverse and associativity") {
  const GridSpec g(128);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto phi = random_diffeo(g, seed);
    const auto psi = random_diffeo(g, seed + 50);
    const auto eta = random_diffeo(g, seed + 90);
    const auto id = identity_diffeo(g);
    CHECK(sup_diff(compose(phi, id), phi) < 1e-15);
    CHECK(sup_diff(compose(id, phi), phi) < 1e-15);
    const auto inv = invert(phi);
    CHECK(sup_diff(compose(phi, inv), id) < 1e-11);
    CHECK(sup_diff(compose(inv, phi), id) < 1e-11);
    // compose resamples its outer argument, so associativity holds to
    // interpolation accuracy of smooth small-displacement maps.
    CHECK(sup_diff(compose(compose(phi, psi), eta), compose(phi, compose(psi, eta))) < 1e-10);
  }
}

TEST_CASE("lift is equivariant under integer shifts") {
  const GridSpec g(64);
  const auto phi = random_diffeo(g, 3);
  const std::vector<double> pts{0.1, 0.37, 0.9};
  std::vector<double> shifted;
  for (double p : pts) shifted.push_back(p + 2.0);
  const auto a = phi(pts);
  const auto b = phi(shifted);
  for (std::size_t i = 0; i < pts.size(); ++i) CHECK(b[i] == doctest::Approx(a[i] + 2.0));
}

TEST_CASE("right translation and jacobian") {
  const GridSpec g(64);
  const CircleDiffeo eta(sin_mode(g, 1, 0.07));
  const auto u = cos_mode(g, 3);
  const auto ut = right_translate(u, eta);
  for (int j = 0; j < g.n_points(); ++j) {
    const double x = g.node(j);
    CHECK(std::abs(ut[j] - std::cos(3 * kTwoPi * (x + 0.07 * std::sin(kTwoPi * x)))) < 1e-13);
  }
  const auto jac = jacobian(eta);
  for (int j = 0; j < g.n_points(); ++j) {
    CHECK(std::abs(jac[j] - (1.0 + 0.07 * kTwoPi * std::cos(kTwoPi * g.node(j)))) < 1e-13);
  }
  CHECK_THROWS_AS(right_translate(cos_mode(GridSpec(32), 1), eta), GridMismatch);
}

TEST_CASE("inversion handles strongly distorted maps") {
  const GridSpec g(256);
  const CircleDiffeo phi(sin_mode(g, 1, 0.155));  // min slope ~ 0.026
  const auto inv = invert(phi);
  const auto lift = phi(inv.lift_at_nodes());
  for (int j = 0; j < g.n_points(); ++j) CHECK(std::abs(lift[j] - g.node(j)) < 1e-11);
}
