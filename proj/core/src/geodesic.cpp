#include "geoflow/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "geoflow/errors.hpp"
#include "geoflow/operators.hpp"

namespace geoflow {

std::string_view to_string(Integrator integrator) {
  switch (integrator) {
    case Integrator::rk4:
      return "rk4";
    case Integrator::rk4_mform:
      return "rk4_mform";
  }
  return "unknown";
}

Integrator integrator_from_string(std::string_view name) {
  if (name == "rk4") return Integrator::rk4;
  if (name == "rk4_mform") return Integrator::rk4_mform;
  throw InvalidArgument("unknown integrator '" + std::string(name) +
                        "' (expected rk4 or rk4_mform)");
}

void SolverConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("dt must be positive");
  if (!(t_end > 0.0) || !std::isfinite(t_end)) throw InvalidArgument("t_end must be positive");
  if (dt > t_end) throw InvalidArgument("dt must not exceed t_end");
  if (!(blowup_slope_floor > 0.0 && blowup_slope_floor < 1.0)) {
    throw InvalidArgument("blowup_slope_floor must lie in (0, 1)");
  }
  if (!(velocity_cap > 0.0)) throw InvalidArgument("velocity_cap must be positive");
  if (record_every < 1) throw InvalidArgument("record_every must be >= 1");
}

int SolverConfig::steps() const {
  return std::max(1, static_cast<int>(std::ceil(t_end / dt - 1e-9)));
}

std::vector<double> Trajectory::times() const {
  std::vector<double> t;
  t.reserve(states.size());
  for (const auto& s : states) t.push_back(s.t);
  return t;
}

PeriodicField euler_rhs(SobolevOrder k, const PeriodicField& u) { return bilinear_b(k, u, u); }

PeriodicField mform_rhs(SobolevOrder k, const PeriodicField& m) {
  const PeriodicField u = invert_inertia(k, m);
  PeriodicField out = multiply(derivative(u), m);
  out *= 2.0;
  out += multiply(u, derivative(m));
  return -std::move(out);
}

double energy(SobolevOrder k, const PeriodicField& u) { return inner_k(k, u, u); }

PeriodicField momentum(SobolevOrder k, const GeodesicState& state) {
  const PeriodicField au = apply_inertia(k, state.u);
  const auto transported = evaluate_at(au, state.phi.lift_at_nodes());
  const PeriodicField jac = jacobian(state.phi);
  std::vector<double> m(transported.size());
  for (std::size_t j = 0; j < m.size(); ++j) {
    const double s = jac[static_cast<int>(j)];
    m[j] = transported[j] * s * s;
  }
  return PeriodicField(state.u.grid(), std::move(m));
}

namespace {

using Samples = std::vector<double>;

Samples combine(const Samples& a, double s, const Samples& b) {
  Samples out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[j] + s * b[j];
  return out;
}

// phi_t = u o phi on the displacement samples: f_t(x_j) = u(x_j + f_j).
Samples flow_rhs(const PeriodicField& u, const Samples& f) {
  const GridSpec& grid = u.grid();
  Samples points(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) points[j] = grid.node(static_cast<int>(j)) + f[j];
  return evaluate_at(u, points);
}

// Integrates either u or m (the "primary" variable) together with phi.
class GeodesicStepper {
 public:
  GeodesicStepper(const PeriodicField& u0, const SolverConfig& cfg)
      : cfg_(cfg),
        primary_(cfg.integrator == Integrator::rk4_mform ? apply_inertia(cfg.k, u0) : u0),
        f_(static_cast<std::size_t>(u0.size()), 0.0) {}

  double t() const { return t_; }

  PeriodicField velocity() const { return to_velocity(primary_); }

  GeodesicState state() const {
    return GeodesicState{t_, CircleDiffeo(PeriodicField(cfg_.grid, f_)), velocity()};
  }

  void step(double dt) {
    try {
      const auto [k1w, k1f] = rhs(primary_, f_);
      const auto [k2w, k2f] = rhs(axpy(primary_, 0.5 * dt, k1w), combine(f_, 0.5 * dt, k1f));
      const auto [k3w, k3f] = rhs(axpy(primary_, 0.5 * dt, k2w), combine(f_, 0.5 * dt, k2f));
      const auto [k4w, k4f] = rhs(axpy(primary_, dt, k3w), combine(f_, dt, k3f));
      PeriodicField incr = k2w + k3w;
      incr *= 2.0;
      incr += k1w;
      incr += k4w;
      primary_ = axpy(primary_, dt / 6.0, incr);
      for (std::size_t j = 0; j < f_.size(); ++j) {
        f_[j] += dt / 6.0 * (k1f[j] + 2.0 * k2f[j] + 2.0 * k3f[j] + k4f[j]);
      }
    } catch (const InvalidArgument&) {
      throw BlowUp(t_ + dt, "geodesic integration produced non-finite values near t = " +
                                std::to_string(t_ + dt));
    }
    t_ += dt;
    check();
  }

 private:
  PeriodicField to_velocity(const PeriodicField& w) const {
    return cfg_.integrator == Integrator::rk4_mform ? invert_inertia(cfg_.k, w) : w;
  }

  std::pair<PeriodicField, Samples> rhs(const PeriodicField& w, const Samples& f) const {
    if (cfg_.integrator == Integrator::rk4_mform) {
      return {mform_rhs(cfg_.k, w), flow_rhs(invert_inertia(cfg_.k, w), f)};
    }
    return {euler_rhs(cfg_.k, w), flow_rhs(w, f)};
  }

  void check() const {
    for (double v : f_) {
      if (!std::isfinite(v)) throw BlowUp(t_, "flow map became non-finite at t = " + fmt(t_));
    }
    const PeriodicField u = velocity();
    const double speed = u.sup_norm();
    if (!std::isfinite(speed) || speed > cfg_.velocity_cap) {
      throw BlowUp(t_, "sup|u| = " + fmt(speed) + " exceeds the velocity cap at t = " + fmt(t_));
    }
    const double slope = 1.0 + derivative(PeriodicField(cfg_.grid, f_)).min();
    if (slope < cfg_.blowup_slope_floor) {
      throw BlowUp(t_, "min phi_x = " + fmt(slope) + " fell below the slope floor at t = " +
                           fmt(t_));
    }
  }

  static std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
  }

  const SolverConfig& cfg_;
  double t_ = 0.0;
  PeriodicField primary_;
  Samples f_;
};

PeriodicField prepare_initial(const PeriodicField& u0, const SolverConfig& cfg) {
  cfg.validate();
  if (!(u0.grid() == cfg.grid)) {
    throw GridMismatch("integrate_geodesic: u0 is not on the solver grid");
  }
  return u0.truncated();
}

}  // namespace

Trajectory integrate_geodesic(const PeriodicField& u0_in, const SolverConfig& cfg) {
  const PeriodicField u0 = prepare_initial(u0_in, cfg);
  const int steps = cfg.steps();
  const double dt = cfg.t_end / steps;

  Trajectory traj{cfg.k, {}, {}, {}};
  const PeriodicField m0 = apply_inertia(cfg.k, u0);
  const double m0_scale = m0.sup_norm() > 0.0 ? m0.sup_norm() : 1.0;

  auto record = [&](GeodesicState s) {
    traj.energy.push_back(energy(cfg.k, s.u));
    const PeriodicField m = momentum(cfg.k, s);
    traj.momentum_deviation.push_back((m - m0).sup_norm() / m0_scale);
    traj.states.push_back(std::move(s));
  };

  GeodesicStepper stepper(u0, cfg);
  record(GeodesicState{0.0, CircleDiffeo::identity(cfg.grid), u0});
  for (int n = 1; n <= steps; ++n) {
    stepper.step(dt);
    if (n % cfg.record_every == 0 || n == steps) {
      GeodesicState s = stepper.state();
      if (n == steps) s.t = cfg.t_end;
      record(std::move(s));
    }
  }
  return traj;
}

GeodesicState geodesic_endpoint(const PeriodicField& u0_in, const SolverConfig& cfg) {
  const PeriodicField u0 = prepare_initial(u0_in, cfg);
  const int steps = cfg.steps();
  const double dt = cfg.t_end / steps;
  GeodesicStepper stepper(u0, cfg);
  for (int n = 1; n <= steps; ++n) stepper.step(dt);
  GeodesicState s = stepper.state();
  s.t = cfg.t_end;
  return s;
}

CircleDiffeo lie_exponential(const PeriodicField& v, double t, int steps) {
  if (steps < 1) throw InvalidArgument("lie_exponential: steps must be >= 1");
  if (!std::isfinite(t)) throw InvalidArgument("lie_exponential: non-finite time");
  const double h = t / steps;
  Samples f(static_cast<std::size_t>(v.size()), 0.0);
  for (int n = 0; n < steps; ++n) {
    const Samples k1 = flow_rhs(v, f);
    const Samples k2 = flow_rhs(v, combine(f, 0.5 * h, k1));
    const Samples k3 = flow_rhs(v, combine(f, 0.5 * h, k2));
    const Samples k4 = flow_rhs(v, combine(f, h, k3));
    for (std::size_t j = 0; j < f.size(); ++j) {
      f[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    }
  }
  return CircleDiffeo(PeriodicField(v.grid(), std::move(f)));
}

}  // namespace geoflow
