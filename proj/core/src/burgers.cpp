#include "geoflow/burgers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "geoflow/errors.hpp"

namespace geoflow {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Minimum of the trigonometric interpolant g over [0,1): dense scan, then
// golden-section refinement around the best sample.
double minimum_of(const PeriodicField& g) {
  const int scan = 16 * g.size();
  double best_x = 0.0;
  double best = evaluate_at(g, 0.0);
  for (int i = 1; i < scan; ++i) {
    const double x = double(i) / scan;
    const double v = evaluate_at(g, x);
    if (v < best) {
      best = v;
      best_x = x;
    }
  }
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = best_x - 1.0 / scan;
  double b = best_x + 1.0 / scan;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = evaluate_at(g, c);
  double fd = evaluate_at(g, d);
  while (b - a > 1e-13) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = evaluate_at(g, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = evaluate_at(g, d);
    }
  }
  return std::min({best, fc, fd});
}

// Solve xi + 3 t u0(xi) = x on the monotone lift.
double foot_point(const PeriodicField& u0, double t, double x, double reach) {
  double lo = x - reach;
  double hi = x + reach;
  double xi = x - 3.0 * t * evaluate_at(u0, x);
  xi = std::clamp(xi, lo, hi);
  for (int it = 0; it < 200; ++it) {
    const auto [u, du] = evaluate_with_derivative(u0, xi);
    const double g = xi + 3.0 * t * u - x;
    if (std::abs(g) <= 1e-14) return xi;
    if (g > 0.0) {
      hi = std::min(hi, xi);
    } else {
      lo = std::max(lo, xi);
    }
    const double slope = 1.0 + 3.0 * t * du;
    double next = slope > 0.0 ? xi - g / slope : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (hi - lo < 1e-15) return next;
    xi = next;
  }
  return xi;
}

void require_before_blowup(const PeriodicField& u0, double t, const char* op) {
  if (t < 0.0 || !std::isfinite(t)) throw InvalidArgument(std::string(op) + ": invalid time");
  const double tstar = blowup_time(u0);
  if (t >= tstar) {
    throw PastBlowUp(std::string(op) + ": t = " + std::to_string(t) +
                     " is past the blow-up time " + std::to_string(tstar));
  }
}

}  // namespace

double blowup_time(const PeriodicField& u0) {
  const double min_slope = minimum_of(derivative(u0, 1));
  if (min_slope >= -1e-14) return kInf;
  return -1.0 / (3.0 * min_slope);
}

std::vector<double> characteristic_velocity(const PeriodicField& u0, double t,
                                            std::span<const double> points) {
  const double reach = 3.0 * t * u0.sup_norm() * 1.5 + 1e-12;
  std::vector<double> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    out[i] = evaluate_at(u0, foot_point(u0, t, points[i], reach));
  }
  return out;
}

CharacteristicSolution characteristics_solve(const PeriodicField& u0, double t) {
  require_before_blowup(u0, t, "characteristics_solve");
  const double reach = 3.0 * t * u0.sup_norm() * 1.5 + 1e-12;
  CharacteristicSolution sol{u0, t, {}, {}};
  const int n = u0.size();
  sol.foot_points.resize(static_cast<std::size_t>(n));
  sol.u_values.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double xi = foot_point(u0, t, u0.grid().node(j), reach);
    sol.foot_points[static_cast<std::size_t>(j)] = xi;
    sol.u_values[static_cast<std::size_t>(j)] = evaluate_at(u0, xi);
  }
  return sol;
}

double detect_blowup(const PeriodicField& u0, BlowupDetectorOptions opts) {
  std::vector<double> xi(static_cast<std::size_t>(opts.xi_samples));
  for (int i = 0; i < opts.xi_samples; ++i) xi[static_cast<std::size_t>(i)] = double(i) / opts.xi_samples;
  const std::vector<double> u = evaluate_at(u0, xi);
  auto monotone = [&](double t) {
    // Lift of the characteristic map, including the wrap-around pair.
    for (std::size_t i = 0; i < xi.size(); ++i) {
      const double here = xi[i] + 3.0 * t * u[i];
      const std::size_t nx = (i + 1) % xi.size();
      const double there = xi[nx] + (nx == 0 ? 1.0 : 0.0) + 3.0 * t * u[nx];
      if (!(there > here)) return false;
    }
    return true;
  };
  double good = 0.0;
  double bad = kInf;
  const double dt = opts.t_max / opts.coarse_steps;
  for (int i = 1; i <= opts.coarse_steps; ++i) {
    const double t = i * dt;
    if (!monotone(t)) {
      bad = t;
      break;
    }
    good = t;
  }
  if (!std::isfinite(bad)) return kInf;
  while (bad - good > opts.time_tolerance) {
    const double mid = 0.5 * (good + bad);
    (monotone(mid) ? good : bad) = mid;
  }
  return 0.5 * (good + bad);
}

CircleDiffeo flow_map_k0(const PeriodicField& u0, double t, int steps) {
  require_before_blowup(u0, t, "flow_map_k0");
  if (steps < 1) throw InvalidArgument("flow_map_k0: steps must be >= 1");
  const GridSpec& grid = u0.grid();
  const int n = grid.n_points();
  std::vector<double> f(static_cast<std::size_t>(n), 0.0);
  auto rhs = [&](double tau, const std::vector<double>& disp) {
    std::vector<double> pts(disp.size());
    for (int j = 0; j < n; ++j) pts[static_cast<std::size_t>(j)] = grid.node(j) + disp[static_cast<std::size_t>(j)];
    return characteristic_velocity(u0, tau, pts);
  };
  auto shifted = [](const std::vector<double>& a, double s, const std::vector<double>& b) {
    std::vector<double> out(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[j] + s * b[j];
    return out;
  };
  const double h = t / steps;
  for (int i = 0; i < steps; ++i) {
    const double tau = i * h;
    const auto k1 = rhs(tau, f);
    const auto k2 = rhs(tau + 0.5 * h, shifted(f, 0.5 * h, k1));
    const auto k3 = rhs(tau + 0.5 * h, shifted(f, 0.5 * h, k2));
    const auto k4 = rhs(tau + h, shifted(f, h, k3));
    for (std::size_t j = 0; j < f.size(); ++j) {
      f[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    }
  }
  return CircleDiffeo(PeriodicField(grid, std::move(f)));
}

ProbeReport exp_c1_failure_probe(const PeriodicField& u0, const std::vector<PeriodicField>& directions,
                                 const std::vector<double>& h_values, const ExpConfig& control_cfg,
                                 int k0_steps) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  ProbeReport report;
  auto run = [&](std::vector<ProbeRow>& rows, auto&& exp_map, auto&& admissible) {
    for (std::size_t d = 0; d < directions.size(); ++d) {
      double previous = nan;
      for (double h : h_values) {
        ProbeRow row{static_cast<int>(d), h, nan, nan, false};
        const PeriodicField plus = axpy(u0, h, directions[d]);
        const PeriodicField minus = axpy(u0, -h, directions[d]);
        if (admissible(plus) && admissible(minus)) {
          try {
            const PeriodicField diff = exp_map(plus) - exp_map(minus);
            row.fd_norm = diff.sup_norm() / (2.0 * h);
            row.valid = true;
          } catch (const NumericalError&) {
            row.valid = false;
          }
        }
        row.ratio = row.fd_norm / previous;
        previous = row.fd_norm;
        rows.push_back(row);
      }
    }
  };
  run(
      report.k0,
      [&](const PeriodicField& v) { return flow_map_k0(v, 1.0, k0_steps).displacement(); },
      [](const PeriodicField& v) { return blowup_time(v) > 1.0; });
  run(
      report.control,
      [&](const PeriodicField& v) {
        return riemann_exp(control_cfg.solver.k, v, control_cfg).displacement();
      },
      [](const PeriodicField&) { return true; });
  return report;
}

}  // namespace geoflow
