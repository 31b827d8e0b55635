#include "geoflow/transport.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "geoflow/errors.hpp"
#include "geoflow/operators.hpp"
#include "geoflow/parallel.hpp"

namespace geoflow {

namespace {

// Second-order finite-difference weights for d/dt at sample i on a
// nonuniform grid (centered inside, one-sided at the ends).
std::array<std::pair<std::size_t, double>, 3> fd_weights(const std::vector<double>& t,
                                                         std::size_t i) {
  const std::size_t n = t.size();
  if (i == 0) {
    const double h1 = t[1] - t[0];
    const double h2 = t[2] - t[1];
    return {{{0, -(2 * h1 + h2) / (h1 * (h1 + h2))},
             {1, (h1 + h2) / (h1 * h2)},
             {2, -h1 / (h2 * (h1 + h2))}}};
  }
  if (i == n - 1) {
    const double h1 = t[n - 2] - t[n - 3];
    const double h2 = t[n - 1] - t[n - 2];
    return {{{n - 3, h2 / (h1 * (h1 + h2))},
             {n - 2, -(h1 + h2) / (h1 * h2)},
             {n - 1, (2 * h2 + h1) / (h2 * (h1 + h2))}}};
  }
  const double h1 = t[i] - t[i - 1];
  const double h2 = t[i + 1] - t[i];
  return {{{i - 1, -h2 / (h1 * (h1 + h2))},
           {i, (h2 - h1) / (h1 * h2)},
           {i + 1, h1 / (h2 * (h1 + h2))}}};
}

template <class Get>
PeriodicField time_derivative(const std::vector<double>& t, std::size_t i, Get get) {
  const auto w = fd_weights(t, i);
  PeriodicField out = get(w[0].first) * w[0].second;
  out += get(w[1].first) * w[1].second;
  out += get(w[2].first) * w[2].second;
  return out;
}

PeriodicField lerp(const PeriodicField& a, const PeriodicField& b, double s) {
  return axpy(a * (1.0 - s), s, b);
}

}  // namespace

PathOnGroup::PathOnGroup(std::vector<double> times, std::vector<CircleDiffeo> diffeos,
                         std::vector<PeriodicField> velocities)
    : times_(std::move(times)), diffeos_(std::move(diffeos)), velocities_(std::move(velocities)) {
  if (times_.empty()) throw InvalidArgument("PathOnGroup: empty path");
  if (diffeos_.size() != times_.size() || velocities_.size() != times_.size()) {
    throw InvalidArgument("PathOnGroup: times, diffeos and velocities differ in length");
  }
  for (std::size_t i = 1; i < times_.size(); ++i) {
    if (!(times_[i] > times_[i - 1])) {
      throw InvalidArgument("PathOnGroup: times must be strictly increasing");
    }
  }
  for (std::size_t i = 0; i < times_.size(); ++i) {
    require_same_grid(diffeos_[i].displacement(), diffeos_.front().displacement(), "PathOnGroup");
    require_same_grid(velocities_[i], diffeos_.front().displacement(), "PathOnGroup");
  }
}

PathOnGroup PathOnGroup::from_trajectory(const Trajectory& traj) {
  std::vector<double> t;
  std::vector<CircleDiffeo> d;
  std::vector<PeriodicField> u;
  for (const auto& s : traj.states) {
    t.push_back(s.t);
    d.push_back(s.phi);
    u.push_back(s.u);
  }
  return PathOnGroup(std::move(t), std::move(d), std::move(u));
}

double PathOnGroup::consistency_residual() const {
  if (size() < 3) return 0.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    const PeriodicField alpha_t =
        time_derivative(times_, i, [&](std::size_t j) { return diffeos_[j].displacement(); });
    const PeriodicField transported = right_translate(velocities_[i], diffeos_[i]);
    worst = std::max(worst, (alpha_t - transported).sup_norm());
  }
  return worst;
}

std::vector<PeriodicField> parallel_transport(SobolevOrder k, const PathOnGroup& path,
                                              const PeriodicField& v0, TransportOptions opts) {
  require_same_grid(v0, path.velocities().front(), "parallel_transport");
  if (opts.substeps < 1) throw InvalidArgument("parallel_transport: substeps must be >= 1");
  const double inconsistency = path.consistency_residual();
  if (inconsistency > opts.consistency_tolerance) {
    throw ResolutionError("parallel_transport: path velocities disagree with the sampled curve (" +
                          std::to_string(inconsistency) + " > " +
                          std::to_string(opts.consistency_tolerance) + ")");
  }

  const auto& t = path.times();
  const auto& u = path.velocities();
  std::vector<PeriodicField> out;
  out.reserve(path.size());
  PeriodicField v = v0.truncated();
  out.push_back(v);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const double h = (t[i + 1] - t[i]) / opts.substeps;
    const double ds = 1.0 / opts.substeps;
    for (int s = 0; s < opts.substeps; ++s) {
      const double s0 = s * ds;
      const PeriodicField ua = lerp(u[i], u[i + 1], s0);
      const PeriodicField um = lerp(u[i], u[i + 1], s0 + 0.5 * ds);
      const PeriodicField ub = lerp(u[i], u[i + 1], s0 + ds);
      const PeriodicField k1 = transport_rhs(k, ua, v);
      const PeriodicField k2 = transport_rhs(k, um, axpy(v, 0.5 * h, k1));
      const PeriodicField k3 = transport_rhs(k, um, axpy(v, 0.5 * h, k2));
      const PeriodicField k4 = transport_rhs(k, ub, axpy(v, h, k3));
      PeriodicField incr = k2 + k3;
      incr *= 2.0;
      incr += k1;
      incr += k4;
      v = axpy(v, h / 6.0, incr);
    }
    out.push_back(v);
  }
  return out;
}

std::vector<PeriodicField> derivation_along_curve(SobolevOrder k, const PathOnGroup& path,
                                                  const std::vector<PeriodicField>& lift) {
  if (path.size() < 3) throw InvalidArgument("derivation_along_curve: need at least 3 samples");
  if (lift.size() != path.size()) {
    throw InvalidArgument("derivation_along_curve: lift must be sampled at the path times");
  }
  std::vector<PeriodicField> out(path.size(), PeriodicField::zero(path.grid()));
  parallel_for(static_cast<int>(path.size()), [&](int ii) {
    const auto i = static_cast<std::size_t>(ii);
    const CircleDiffeo& alpha = path.diffeos()[i];
    const PeriodicField gamma_t =
        time_derivative(path.times(), i, [&](std::size_t j) { return lift[j]; });
    const PeriodicField eulerian = right_translate(lift[i], invert(alpha));
    const PeriodicField q = q_operator(k, path.velocities()[i], eulerian);
    out[i] = gamma_t - right_translate(q, alpha);
  });
  return out;
}

double curve_length(SobolevOrder k, const PathOnGroup& path) {
  const auto& t = path.times();
  double length = 0.0;
  double prev = norm_k(k, path.velocities().front());
  for (std::size_t i = 1; i < path.size(); ++i) {
    const double cur = norm_k(k, path.velocities()[i]);
    length += 0.5 * (t[i] - t[i - 1]) * (prev + cur);
    prev = cur;
  }
  return length;
}

PolarCoordinates polar_coordinates(SobolevOrder k, const CircleDiffeo& phi, const ExpConfig& cfg) {
  const PeriodicField v = riemann_log(k, phi, cfg);
  const double r = norm_k(k, v);
  if (r == 0.0) return {0.0, PeriodicField::zero(phi.grid())};
  return {r, v * (1.0 / r)};
}

PathOnGroup path_from_controls(SobolevOrder k, const std::vector<double>& times,
                               const std::vector<PeriodicField>& controls,
                               const std::vector<PeriodicField>& control_rates,
                               const ExpConfig& cfg) {
  if (controls.size() != times.size() || control_rates.size() != times.size()) {
    throw InvalidArgument("path_from_controls: controls must be sampled at every time");
  }
  const GridSpec& grid = cfg.solver.grid;
  std::vector<CircleDiffeo> diffeos(times.size(), CircleDiffeo::identity(grid));
  std::vector<PeriodicField> velocities(times.size(), PeriodicField::zero(grid));
  parallel_for(static_cast<int>(times.size()), [&](int ii) {
    const auto i = static_cast<std::size_t>(ii);
    diffeos[i] = riemann_exp(k, controls[i], cfg);
    const PeriodicField lagrangian = d_exp(k, controls[i], control_rates[i], cfg);
    velocities[i] = right_translate(lagrangian, invert(diffeos[i]));
  });
  return PathOnGroup(times, std::move(diffeos), std::move(velocities));
}

MinimizationReport minimization_experiment(SobolevOrder k, const PeriodicField& u0,
                                           const MinimizationOptions& opts,
                                           const ExpConfig& cfg) {
  cfg.validate();
  if (opts.samples < 3) throw InvalidArgument("minimization_experiment: need >= 3 samples");
  if (opts.perturbations < 0) throw InvalidArgument("minimization_experiment: negative count");
  const GridSpec& grid = cfg.solver.grid;
  const PeriodicField base = u0.truncated();
  const double r = norm_k(k, base);

  MinimizationReport report{r, 0.0, {}, true};

  SolverConfig geo = cfg.solver;
  geo.k = k;
  geo.t_end = 1.0;
  geo.record_every = std::max(1, geo.steps() / (opts.samples - 1));
  report.geodesic_length = curve_length(k, PathOnGroup::from_trajectory(integrate_geodesic(base, geo)));

  std::vector<double> times(static_cast<std::size_t>(opts.samples));
  for (int i = 0; i < opts.samples; ++i) times[static_cast<std::size_t>(i)] = double(i) / (opts.samples - 1);

  for (int id = 0; id <= opts.perturbations; ++id) {
    PeriodicField eta = PeriodicField::zero(grid);
    if (id > 0) {
      eta = random_band_limited(grid, opts.seed + static_cast<std::uint64_t>(id),
                                std::min(opts.direction_modes, grid.max_mode()), 1.0);
      const double n = norm_k(k, eta);
      if (n > 0.0) eta *= opts.epsilon * r / n;
    }
    std::vector<PeriodicField> controls;
    std::vector<PeriodicField> rates;
    for (double t : times) {
      const double bump = std::sin(std::numbers::pi * t);
      const double bump_rate = std::numbers::pi * std::cos(std::numbers::pi * t);
      controls.push_back(axpy(base * t, bump, eta));
      rates.push_back(axpy(base, bump_rate, eta));
    }
    PathSample sample{id, 0.0, r, 0.0, true, ""};
    try {
      const PathOnGroup path = path_from_controls(k, times, controls, rates, cfg);
      for (const auto& d : path.diffeos()) {
        if (d.displacement().sup_norm() > cfg.trust_radius) {
          sample.in_chart = false;
          sample.note = "left the logarithm trust region";
          break;
        }
      }
      sample.length = curve_length(k, path);
      sample.excess = sample.length - r;
    } catch (const NumericalError& e) {
      sample.in_chart = false;
      sample.note = e.what();
    }
    if (sample.in_chart && sample.length < r - opts.tolerance) report.minimizing = false;
    report.samples.push_back(std::move(sample));
  }
  return report;
}

}  // namespace geoflow
