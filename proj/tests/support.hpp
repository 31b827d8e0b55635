#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "geoflow/geoflow.hpp"

namespace geoflow::testing {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline PeriodicField sin_mode(const GridSpec& g, int m, double a = 1.0) {
  return PeriodicField::sample(g, [=](double x) { return a * std::sin(kTwoPi * m * x); });
}

inline PeriodicField cos_mode(const GridSpec& g, int m, double a = 1.0) {
  return PeriodicField::sample(g, [=](double x) { return a * std::cos(kTwoPi * m * x); });
}

// "mix": sin 2 pi x + 0.5 cos 4 pi x.
inline PeriodicField mix(const GridSpec& g, double a = 1.0) {
  return PeriodicField::sample(
      g, [=](double x) { return a * (std::sin(kTwoPi * x) + 0.5 * std::cos(2 * kTwoPi * x)); });
}

inline double sup_diff(const PeriodicField& a, const PeriodicField& b) { return (a - b).sup_norm(); }

inline double sup_diff(const CircleDiffeo& a, const CircleDiffeo& b) {
  return sup_diff(a.displacement(), b.displacement());
}

// Small-displacement diffeo x + f(x) with sup|f| <= amp and few modes.
inline CircleDiffeo random_diffeo(const GridSpec& g, std::uint64_t seed, double amp = 0.05,
                                  int modes = 4) {
  return CircleDiffeo(random_band_limited(g, seed, modes, amp));
}

// Trigonometric polynomial given by explicit (mode, cos, sin) triples, with
// analytic derivatives; used as an oracle independent of the FFT path.
struct TrigPoly {
  struct Term {
    int m;
    double a;  // cos coefficient
    double b;  // sin coefficient
  };
  std::vector<Term> terms;

  double derivative_at(int order, double x) const {
    double s = 0.0;
    for (const auto& t : terms) {
      const double w = kTwoPi * t.m;
      const double c = std::cos(w * x);
      const double sn = std::sin(w * x);
      // d^p/dx^p of a cos + b sin cycles with period 4.
      double d = 0.0;
      switch (order % 4) {
        case 0: d = t.a * c + t.b * sn; break;
        case 1: d = -t.a * sn + t.b * c; break;
        case 2: d = -t.a * c - t.b * sn; break;
        case 3: d = t.a * sn - t.b * c; break;
      }
      if (order > 0) d *= std::pow(w, order);
      s += d;
    }
    return s;
  }

  PeriodicField field(const GridSpec& g) const {
    return PeriodicField::sample(g, [this](double x) { return derivative_at(0, x); });
  }
};

}  // namespace geoflow::testing
