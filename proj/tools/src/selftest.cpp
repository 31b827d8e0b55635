#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>

#include "geoflow/io.hpp"
#include "geoflow_cli/runner.hpp"

namespace geoflow::cli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Row {
  std::string module;
  std::string check;
  double value;
  double tolerance;
  bool pass;
  std::string note;
};

class Table {
 public:
  explicit Table(std::ostream& log) : log_(log) {}

  // fn returns a nonnegative error measure compared against tolerance.
  void add(const std::string& module, const std::string& check, double tolerance,
           const std::function<double()>& fn) {
    Row r{module, check, std::nan(""), tolerance, false, ""};
    try {
      r.value = fn();
      r.pass = r.value <= tolerance;
    } catch (const std::exception& e) {
      r.note = e.what();
    }
    log_ << (r.pass ? "  pass  " : "  FAIL  ") << module << '.' << check << "  "
         << io::format_number(r.value) << " <= " << io::format_number(tolerance)
         << (r.note.empty() ? "" : "  (" + r.note + ")") << '\n';
    rows_.push_back(std::move(r));
  }

  const std::vector<Row>& rows() const { return rows_; }

 private:
  std::ostream& log_;
  std::vector<Row> rows_;
};

SolverConfig solver(int n, int k, double dt, double t_end) {
  SolverConfig s{GridSpec(n), SobolevOrder(k)};
  s.dt = dt;
  s.t_end = t_end;
  return s;
}

PeriodicField mix(const GridSpec& g, double a) {
  return PeriodicField::sample(
      g, [a](double x) { return a * (std::sin(kTwoPi * x) + 0.5 * std::cos(2 * kTwoPi * x)); });
}

PeriodicField sin1(const GridSpec& g, double a) {
  return PeriodicField::sample(g, [a](double x) { return a * std::sin(kTwoPi * x); });
}

}  // namespace

json run_selftest(const json& config, CommandContext& ctx) {
  Fields f(config, "");
  const std::uint64_t seed = f.seed("seed", ctx.inputs.seed);
  f.finish();

  Table t(ctx.log);
  const GridSpec g128(128);
  const GridSpec g64(64);
  const GridSpec g32(32);

  t.add("spectral_core", "inertia_round_trip", 1e-12, [&] {
    double worst = 0.0;
    for (int k = 0; k <= SobolevOrder::kMax; ++k) {
      const auto u = random_band_limited(g128, seed + k, g128.max_mode(), 1.0);
      worst = std::max(worst, (invert_inertia(SobolevOrder(k), apply_inertia(SobolevOrder(k), u)) - u).sup_norm());
    }
    return worst;
  });
  t.add("spectral_core", "derivative_of_sin", 1e-12, [&] {
    const auto c = PeriodicField::sample(g64, [](double x) { return kTwoPi * std::cos(kTwoPi * x); });
    return (derivative(sin1(g64, 1.0)) - c).sup_norm();
  });

  t.add("diffeo_group", "compose_with_inverse", 1e-11, [&] {
    double worst = 0.0;
    for (std::uint64_t i = 0; i < 5; ++i) {
      const CircleDiffeo phi(random_band_limited(g128, seed + 10 + i, 4, 0.05));
      worst = std::max(worst, compose(phi, invert(phi)).displacement().sup_norm());
    }
    return worst;
  });

  t.add("metric_operators", "adjoint_identity", 1e-10, [&] {
    double worst = 0.0;
    for (int k = 1; k <= 2; ++k) {
      for (std::uint64_t i = 0; i < 10; ++i) {
        const auto u = random_band_limited(g128, seed + 3 * i, 16, 1.0);
        const auto v = random_band_limited(g128, seed + 3 * i + 1, 16, 1.0);
        const auto w = random_band_limited(g128, seed + 3 * i + 2, 16, 1.0);
        const double lhs = inner_k(SobolevOrder(k), bilinear_b(SobolevOrder(k), u, v), w);
        const double rhs = inner_k(SobolevOrder(k), u, lie_bracket(v, w));
        worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
      }
    }
    return worst;
  });
  t.add("metric_operators", "bracket_antisymmetry", 1e-12, [&] {
    const auto u = random_band_limited(g64, seed + 40, 8, 1.0);
    const auto v = random_band_limited(g64, seed + 41, 8, 1.0);
    return (lie_bracket(u, v) + lie_bracket(v, u)).sup_norm();
  });
  t.add("metric_operators", "transport_forms_agree", 1e-10, [&] {
    const auto u = random_band_limited(g64, seed + 42, 8, 1.0);
    const auto v = random_band_limited(g64, seed + 43, 8, 1.0);
    return (transport_rhs(SobolevOrder(1), u, v) - transport_rhs_symmetric(SobolevOrder(1), u, v))
        .sup_norm();
  });
  t.add("metric_operators", "mform_matches_euler", 1e-10, [&] {
    const SobolevOrder k(1);
    const auto u = random_band_limited(g64, seed + 44, 8, 1.0);
    const auto from_m = invert_inertia(k, mform_rhs(k, apply_inertia(k, u)));
    return (from_m - euler_rhs(k, u)).sup_norm();
  });

  const auto s = solver(128, 1, 1e-3, 0.5);
  Trajectory traj{SobolevOrder(1), {}, {}, {}};
  t.add("geodesic_flow", "energy_drift", 1e-9, [&] {
    auto c = s;
    c.record_every = 50;
    traj = integrate_geodesic(mix(g128, 0.05), c);
    double worst = 0.0;
    for (double e : traj.energy) worst = std::max(worst, std::abs(e - traj.energy.front()) / traj.energy.front());
    return worst;
  });
  t.add("geodesic_flow", "momentum_deviation", 1e-7, [&] {
    double worst = 0.0;
    for (double d : traj.momentum_deviation) worst = std::max(worst, d);
    return traj.states.empty() ? std::nan("") : worst;
  });
  t.add("geodesic_flow", "integrators_agree", 1e-9, [&] {
    auto a = s;
    a.integrator = Integrator::rk4;
    const auto u0 = mix(g128, 0.05);
    return (geodesic_endpoint(u0, a).u - geodesic_endpoint(u0, s).u).sup_norm();
  });
  t.add("geodesic_flow", "constant_field_rotates", 1e-14, [&] {
    const auto fin = geodesic_endpoint(PeriodicField::constant(g32, 0.25), solver(32, 2, 0.1, 1.0));
    return (fin.phi.displacement() - PeriodicField::constant(g32, 0.25)).sup_norm();
  });

  ExpConfig e32(solver(32, 1, 0.01, 1.0));
  t.add("exp_log", "d_exp_at_zero_is_identity", 1e-6, [&] {
    double worst = 0.0;
    for (int i = 0; i < 8; ++i) {
      const auto w = shooting_basis(g32, i);
      const auto d = d_exp(SobolevOrder(1), PeriodicField::zero(g32), w, e32);
      worst = std::max(worst, (d - w).sup_norm() / w.sup_norm());
    }
    return worst;
  });
  t.add("exp_log", "log_exp_round_trip", 1e-6, [&] {
    const auto u0 = random_band_limited(g32, seed + 50, 4, 0.05);
    const auto u = riemann_log(SobolevOrder(1), riemann_exp(SobolevOrder(1), u0, e32), e32);
    return norm_k(SobolevOrder(1), u - u0.truncated()) / norm_k(SobolevOrder(1), u0.truncated());
  });
  t.add("exp_log", "homogeneity", 1e-8, [&] {
    const auto u0 = sin1(g64, 0.1);
    ExpConfig e(solver(64, 1, 1e-3, 1.0));
    return (riemann_exp(SobolevOrder(1), u0 * 0.5, e).displacement() -
            geodesic_endpoint(u0, solver(64, 1, 1e-3, 0.5)).phi.displacement())
        .sup_norm();
  });

  {
    auto c = solver(128, 1, 1e-3, 1.0);
    c.record_every = 5;
    std::optional<PathOnGroup> path;
    std::vector<std::vector<PeriodicField>> v;
    t.add("transport_geometry", "isometry_drift", 1e-6, [&] {
      path = PathOnGroup::from_trajectory(integrate_geodesic(random_band_limited(g128, seed + 60, 4, 0.1), c));
      v.push_back(parallel_transport(SobolevOrder(1), *path, random_band_limited(g128, seed + 61, 6, 1.0)));
      v.push_back(parallel_transport(SobolevOrder(1), *path, random_band_limited(g128, seed + 62, 6, 1.0)));
      const double ref = inner_k(SobolevOrder(1), v[0][0], v[1][0]);
      double worst = 0.0;
      for (std::size_t i = 0; i < path->size(); ++i) {
        worst = std::max(worst, std::abs(inner_k(SobolevOrder(1), v[0][i], v[1][i]) - ref) / (1.0 + std::abs(ref)));
      }
      return worst;
    });
    t.add("transport_geometry", "self_parallel_velocity", 1e-5, [&] {
      if (!path) return std::nan("");
      std::vector<PeriodicField> lift;
      for (std::size_t i = 0; i < path->size(); ++i) {
        lift.push_back(right_translate(path->velocities()[i], path->diffeos()[i]));
      }
      double worst = 0.0;
      for (const auto& d : derivation_along_curve(SobolevOrder(1), *path, lift)) {
        worst = std::max(worst, d.sup_norm());
      }
      return worst;
    });
    t.add("transport_geometry", "geodesic_length_equals_norm", 1e-7, [&] {
      if (!path) return std::nan("");
      const double r = norm_k(SobolevOrder(1), path->velocities().front());
      return std::abs(curve_length(SobolevOrder(1), *path) - r) / r;
    });
  }
  t.add("transport_geometry", "perturbed_paths_not_shorter", 1e-6, [&] {
    MinimizationOptions opts;
    opts.perturbations = 4;
    opts.samples = 41;
    opts.seed = seed;
    ExpConfig e(solver(32, 1, 0.02, 1.0));
    const auto rep = minimization_experiment(SobolevOrder(1), sin1(g32, 0.05), opts, e);
    double worst = 0.0;
    for (const auto& smp : rep.samples) {
      if (smp.in_chart) worst = std::max(worst, rep.r - smp.length);
    }
    return worst;
  });

  const double tstar = 1.0 / (6.0 * std::numbers::pi);
  t.add("burgers_k0", "blowup_formula", 1e-12, [&] {
    return std::abs(blowup_time(sin1(g64, 1.0)) - tstar) / tstar;
  });
  t.add("burgers_k0", "blowup_detected", 0.02, [&] {
    return std::abs(detect_blowup(sin1(g64, 1.0)) - tstar) / tstar;
  });
  t.add("burgers_k0", "characteristics_vs_spectral", 1e-6, [&] {
    const auto u0 = sin1(g128, 1.0);
    const auto u = geodesic_endpoint(u0, solver(128, 0, 1e-5, 0.5 * tstar)).u;
    return (characteristics_solve(u0, 0.5 * tstar).field() - u).sup_norm();
  });
  t.add("burgers_k0", "l2_energy", 1e-8, [&] {
    const GridSpec g(256);
    const auto u0 = sin1(g, 1.0);
    const auto u = characteristics_solve(u0, 0.5 * tstar).field();
    const double e0 = inner_k(SobolevOrder(0), u0, u0);
    return std::abs(inner_k(SobolevOrder(0), u, u) - e0) / e0;
  });
  t.add("burgers_k0", "flow_slope_decreasing", 0.0, [&] {
    double prev = 2.0;
    double violations = 0.0;
    for (double frac : {0.2, 0.5, 0.8}) {
      const double sl = flow_map_k0(sin1(g64, 1.0), frac * tstar).min_slope();
      if (!(sl < prev)) violations += 1.0;
      prev = sl;
    }
    return violations;
  });

  std::ofstream out(ctx.output("selftest.csv"));
  io::CsvWriter csv(out, {"module", "check", "value", "tolerance", "pass"});
  int failed = 0;
  json table = json::array();
  for (const auto& r : t.rows()) {
    csv.row({r.module, r.check, io::format_number(r.value), io::format_number(r.tolerance),
             r.pass ? "1" : "0"});
    failed += r.pass ? 0 : 1;
    json row{{"module", r.module}, {"check", r.check}, {"pass", r.pass}};
    if (!r.note.empty()) row["note"] = r.note;
    table.push_back(std::move(row));
  }
  if (failed > 0) {
    throw SelfTestFailure(std::to_string(failed) + " of " + std::to_string(t.rows().size()) +
                          " self-test checks failed");
  }
  return json{{"checks", t.rows().size()}, {"failed", failed}, {"table", table}};
}

}  // namespace geoflow::cli
