#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>

#include "geoflow/io.hpp"
#include "geoflow_cli/runner.hpp"

namespace geoflow::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

PeriodicField read_u0(Fields& f, const SolverConfig& s, const CommandContext& ctx,
                      const std::string& key = "u0", const char* fallback = nullptr) {
  const json* spec = f.child(key);
  if (!spec) {
    if (!fallback) f.fail(key, "required initial condition is missing");
    return read_initial_condition(json(fallback), f.where(key), s.grid, ctx.inputs);
  }
  return read_initial_condition(*spec, f.where(key), s.grid, ctx.inputs);
}

ExpConfig read_exp(Fields& f, const SolverConfig& s) {
  ExpConfig e(s);
  e.fd_step = f.number("fd_step", e.fd_step, 1e-6, 1e-2);
  e.newton_tol = f.positive("newton_tol", e.newton_tol, 1.0);
  e.newton_max_iter = f.integer("newton_max_iter", e.newton_max_iter, 1, 1000);
  e.shooting_modes = f.integer("shooting_modes", 0, 0, 2 * s.grid.max_mode() + 1);
  e.trust_radius = f.positive("trust_radius", e.trust_radius, 0.5);
  e.validate();
  return e;
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

std::filesystem::path CommandContext::output(const std::string& name) {
  outputs.push_back(name);
  return out_dir / name;
}

void CommandContext::write_json(const std::string& name, const json& j) {
  io::write_json(output(name).string(), j);
}

json run_geodesic(const json& config, CommandContext& ctx) {
  Fields f(config, "");
  const SolverConfig s = read_solver(f, 256, 1);
  const PeriodicField u0 = read_u0(f, s, ctx);
  f.seed("seed", 0);
  f.finish();

  const Trajectory traj = integrate_geodesic(u0, s);
  ctx.write_json("trajectory.json", io::to_json(traj));
  std::ofstream csv(ctx.output("trajectory.csv"));
  io::write_trajectory_csv(csv, traj);

  const double e0 = traj.energy.front();
  double drift = 0.0;
  for (double e : traj.energy) drift = std::max(drift, std::abs(e - e0) / e0);
  const auto& fin = traj.final_state();
  return json{{"states", traj.states.size()},
              {"steps", s.steps()},
              {"energy0", e0},
              {"max_energy_drift", e0 > 0 ? drift : 0.0},
              {"final_momentum_dev", traj.momentum_deviation.back()},
              {"max_momentum_dev",
               *std::max_element(traj.momentum_deviation.begin(), traj.momentum_deviation.end())},
              {"final_min_slope", fin.phi.min_slope()}};
}

json run_exp(const json& config, CommandContext& ctx) {
  Fields f(config, "");
  const SolverConfig s = read_solver(f, 128, 1);
  if (s.t_end != 1.0) f.fail("t_end", "the exponential is the time-one map; omit t_end or set 1");
  const ExpConfig e = read_exp(f, s);
  const PeriodicField u0 = read_u0(f, s, ctx);
  f.seed("seed", 0);
  f.finish();

  const CircleDiffeo phi = riemann_exp(s.k, u0, e);
  ctx.write_json("exp.json", io::to_json(phi));
  return json{{"norm_k", norm_k(s.k, u0.truncated())},
              {"sup_displacement", phi.displacement().sup_norm()},
              {"min_slope", phi.min_slope()}};
}

json run_log(const json& config, CommandContext& ctx) {
  Fields f(config, "");
  const SolverConfig s = read_solver(f, 64, 1);
  if (s.t_end != 1.0) f.fail("t_end", "the logarithm inverts the time-one map; omit t_end or set 1");
  const ExpConfig e = read_exp(f, s);

  Fields target(f.required("target"), "target");
  const auto kind = target.text("kind", std::nullopt, {"exp", "file", "displacement"});
  std::optional<PeriodicField> truth;
  CircleDiffeo psi = identity_diffeo(s.grid);
  if (kind == "exp") {
    truth = read_u0(target, s, ctx).truncated();
  } else if (kind == "file") {
    std::filesystem::path p = target.text("path", std::nullopt);
    if (p.is_relative()) p = ctx.inputs.base_dir / p;
    try {
      std::ifstream in(p);
      if (!in) throw InvalidArgument("cannot open '" + p.string() + "'");
      psi = io::diffeo_from_json(json::parse(in), s.grid.max_mode());
    } catch (const NumericalError&) {
      throw;
    } catch (const std::exception& ex) {
      target.fail("path", ex.what());
    }
    if (!(psi.grid() == s.grid)) target.fail("path", "diffeo grid differs from n_points/max_mode");
  } else {
    psi = CircleDiffeo(read_initial_condition(target.required("field"), target.where("field"),
                                              s.grid, ctx.inputs));
  }
  target.finish();
  f.seed("seed", 0);
  f.finish();
  if (truth) psi = riemann_exp(s.k, *truth, e);

  LogTrace trace;
  const PeriodicField u = riemann_log(s.k, psi, e, &trace);
  ctx.write_json("log.json", io::to_json(u));
  std::ofstream csv(ctx.output("log_trace.csv"));
  io::write_log_trace_csv(csv, trace);

  json results{{"iterations", trace.iterations},
               {"final_residual", trace.residuals.back()},
               {"norm_k", norm_k(s.k, u)}};
  if (truth) {
    const double ref = norm_k(s.k, *truth);
    results["h_k_error"] = norm_k(s.k, u - *truth);
    results["relative_h_k_error"] = ref > 0 ? norm_k(s.k, u - *truth) / ref : kNaN;
  }
  return results;
}

json run_transport(const json& config, CommandContext& ctx) {
  Fields f(config, "");
  SolverConfig s = read_solver(f, 128, 1);
  if (!f.has("record_every")) s.record_every = std::max(1, s.steps() / 200);
  const PeriodicField u0 = read_u0(f, s, ctx);
  TransportOptions opts;
  opts.substeps = f.integer("substeps", opts.substeps, 1, 1000);
  opts.consistency_tolerance = f.positive("consistency_tolerance", opts.consistency_tolerance);
  std::vector<PeriodicField> lifts;
  if (const json* l = f.child("lifts")) {
    if (!l->is_array() || l->empty()) f.fail("lifts", "expected a non-empty array of fields");
    for (std::size_t i = 0; i < l->size(); ++i) {
      lifts.push_back(read_initial_condition(l->at(i), f.where("lifts") + "[" + std::to_string(i) + "]",
                                             s.grid, ctx.inputs));
    }
  } else {
    lifts.push_back(u0);
  }
  f.seed("seed", 0);
  f.finish();

  const Trajectory traj = integrate_geodesic(u0, s);
  const PathOnGroup path = PathOnGroup::from_trajectory(traj);
  std::vector<std::vector<PeriodicField>> v;
  for (const auto& l : lifts) v.push_back(parallel_transport(s.k, path, l, opts));

  std::ofstream pairs(ctx.output("transport.csv"));
  io::CsvWriter csv(pairs, {"t", "i", "j", "inner", "drift"});
  double max_drift = 0.0;
  for (std::size_t a = 0; a < v.size(); ++a) {
    for (std::size_t b = a; b < v.size(); ++b) {
      const double ref = inner_k(s.k, v[a].front(), v[b].front());
      for (std::size_t i = 0; i < path.size(); ++i) {
        const double ip = inner_k(s.k, v[a][i], v[b][i]);
        const double drift = std::abs(ip - ref) / (1.0 + std::abs(ref));
        max_drift = std::max(max_drift, drift);
        csv.row({io::format_number(path.times()[i]), std::to_string(a), std::to_string(b),
                 io::format_number(ip), io::format_number(drift)});
      }
    }
  }

  std::ofstream dcsv(ctx.output("derivation.csv"));
  io::CsvWriter dw(dcsv, {"t", "lift_id", "residual"});
  double max_residual = 0.0;
  auto derivation = [&](const std::vector<PeriodicField>& eulerian, const std::string& id) {
    std::vector<PeriodicField> lagrangian;
    for (std::size_t i = 0; i < path.size(); ++i) {
      lagrangian.push_back(right_translate(eulerian[i], path.diffeos()[i]));
    }
    const auto d = derivation_along_curve(s.k, path, lagrangian);
    double worst = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      worst = std::max(worst, d[i].sup_norm());
      dw.row({io::format_number(path.times()[i]), id, io::format_number(d[i].sup_norm())});
    }
    return worst;
  };
  for (std::size_t a = 0; a < v.size(); ++a) {
    max_residual = std::max(max_residual, derivation(v[a], std::to_string(a)));
  }
  const double velocity_residual = derivation(path.velocities(), "velocity");

  json lift_json = json::array();
  for (const auto& series : v) {
    json one = json::array();
    for (const auto& x : series) one.push_back(io::to_json(x));
    lift_json.push_back(std::move(one));
  }
  ctx.write_json("transport.json", json{{"k", s.k.value()}, {"times", path.times()}, {"lifts", lift_json}});

  return json{{"samples", path.size()},
              {"consistency_residual", path.consistency_residual()},
              {"max_inner_drift", max_drift},
              {"max_derivation_residual", max_residual},
              {"velocity_derivation_residual", velocity_residual},
              {"length", curve_length(s.k, path)},
              {"norm_u0", norm_k(s.k, u0.truncated())}};
}

json run_minimize(const json& config, CommandContext& ctx) {
  Fields f(config, "");
  const SolverConfig s = read_solver(f, 32, 1);
  if (s.t_end != 1.0) f.fail("t_end", "paths run over [0, 1]; omit t_end or set 1");
  const ExpConfig e = read_exp(f, s);
  const PeriodicField u0 = read_u0(f, s, ctx);
  MinimizationOptions opts;
  opts.perturbations = f.integer("perturbations", opts.perturbations, 0, 10000);
  opts.seed = f.seed("seed", ctx.inputs.seed);
  opts.epsilon = f.number("epsilon", opts.epsilon, 0.0, 100.0);
  opts.direction_modes = f.integer("direction_modes", opts.direction_modes, 1, s.grid.max_mode());
  opts.samples = f.integer("samples", opts.samples, 3, 100000);
  opts.tolerance = f.number("tolerance", opts.tolerance, 0.0, 1.0);
  f.finish();

  const MinimizationReport rep = minimization_experiment(s.k, u0, opts, e);
  std::ofstream csv(ctx.output("minimization.csv"));
  io::write_minimization_csv(csv, rep);

  double min_excess = std::numeric_limits<double>::infinity();
  int excluded = 0;
  json notes = json::array();
  for (const auto& smp : rep.samples) {
    if (smp.in_chart) {
      min_excess = std::min(min_excess, smp.excess);
    } else {
      ++excluded;
      notes.push_back(json{{"sample_id", smp.id}, {"note", smp.note}});
    }
  }
  return json{{"r", rep.r},
              {"geodesic_length", rep.geodesic_length},
              {"geodesic_length_rel_error", std::abs(rep.geodesic_length - rep.r) / rep.r},
              {"min_excess", finite_or_null(min_excess)},
              {"excluded", excluded},
              {"excluded_notes", notes},
              {"minimizing", rep.minimizing}};
}

json run_burgers(const json& config, CommandContext& ctx) {
  Fields f(config, "");
  const int n = f.integer("n_points", 128, 8, 1 << 16);
  if (n % 2 != 0) f.fail("n_points", "must be even");
  const GridSpec grid(n, f.integer("max_mode", 0, 0, n / 3));
  SolverConfig s{grid, SobolevOrder(0)};
  const PeriodicField u0 = read_u0(f, s, ctx, "u0", "sin1");
  const double fraction = f.number("fraction", 0.5, 0.0, 0.999);
  const double spectral_dt = f.positive("spectral_dt", 1e-5, 1.0);
  BlowupDetectorOptions det;
  if (const json* d = f.child("detector")) {
    Fields df(*d, "detector");
    det.t_max = df.positive("t_max", det.t_max);
    det.coarse_steps = df.integer("coarse_steps", det.coarse_steps, 1, 1 << 24);
    det.xi_samples = df.integer("xi_samples", det.xi_samples, 8, 1 << 24);
    det.time_tolerance = df.positive("time_tolerance", det.time_tolerance);
    df.finish();
  }
  struct Probe {
    ExpConfig control;
    PeriodicField u0;
    std::vector<PeriodicField> directions;
    std::vector<double> h;
    int k0_steps;
  };
  std::optional<Probe> probe;
  if (const json* pj = f.child("probe")) {
    Fields pf(*pj, "probe");
    SolverConfig cs{grid, SobolevOrder(pf.integer("control_k", 1, 1, SobolevOrder::kMax))};
    cs.dt = pf.positive("control_dt", 1e-2, 1.0);
    Probe p{ExpConfig(cs), read_u0(pf, s, ctx, "u0", "zero"), {}, {1e-2, 1e-3, 1e-4}, 400};
    const json& dj = pf.required("directions");
    if (!dj.is_array() || dj.empty()) pf.fail("directions", "expected a non-empty array of fields");
    for (std::size_t i = 0; i < dj.size(); ++i) {
      p.directions.push_back(read_initial_condition(
          dj[i], "probe.directions[" + std::to_string(i) + "]", grid, ctx.inputs));
    }
    if (const json* h = pf.child("h")) {
      p.h.clear();
      if (!h->is_array() || h->empty()) pf.fail("h", "expected a non-empty array of step sizes");
      for (const auto& x : *h) {
        if (!x.is_number() || !(x.get<double>() > 0.0)) pf.fail("h", "step sizes must be positive");
        p.h.push_back(x.get<double>());
      }
    }
    p.k0_steps = pf.integer("k0_steps", p.k0_steps, 1, 1 << 20);
    pf.finish();
    probe = std::move(p);
  }
  f.seed("seed", 0);
  f.finish();

  const double tstar = blowup_time(u0);
  const double detected = detect_blowup(u0, det);
  json results{{"blowup_time", finite_or_null(tstar)},
               {"blowup_time_detected", finite_or_null(detected)},
               {"blowup_rel_difference",
                std::isfinite(tstar) ? json(std::abs(detected - tstar) / tstar) : json(nullptr)}};

  // A finite horizon is needed to place the comparison time.
  const double t = std::isfinite(tstar) ? fraction * tstar : fraction;
  results["t"] = t;
  const CharacteristicSolution sol = characteristics_solve(u0, t);
  ctx.write_json("characteristics.json", io::to_json(sol.field()));
  if (t > 0.0) {
    s.dt = std::min(spectral_dt, t);
    s.t_end = t;
    const PeriodicField spectral = geodesic_endpoint(u0, s).u;
    std::ofstream csv(ctx.output("burgers.csv"));
    io::CsvWriter w(csv, {"x", "foot_point", "u_characteristics", "u_spectral"});
    for (int j = 0; j < n; ++j) {
      const auto jj = static_cast<std::size_t>(j);
      w.row({grid.node(j), sol.foot_points[jj], sol.u_values[jj], spectral[j]});
    }
    results["spectral_sup_difference"] = (sol.field() - spectral).sup_norm();
  }

  if (probe) {
    const ProbeReport rep = exp_c1_failure_probe(probe->u0, probe->directions, probe->h,
                                                 probe->control, probe->k0_steps);
    std::ofstream a(ctx.output("probe_k0.csv"));
    io::write_probe_csv(a, rep.k0);
    std::ofstream b(ctx.output("probe_control.csv"));
    io::write_probe_csv(b, rep.control);
    int invalid = 0;
    for (const auto& r : rep.k0) invalid += r.valid ? 0 : 1;
    results["probe_k0_invalid_rows"] = invalid;
  }
  return results;
}

}  // namespace geoflow::cli
