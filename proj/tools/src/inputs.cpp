#include "geoflow_cli/inputs.hpp"

#include <cmath>
#include <numbers>

#include "geoflow/io.hpp"

namespace geoflow::cli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

const std::vector<std::string> kNames{"sin1", "cos2", "mix", "zero"};

std::vector<double> coefficient_list(Fields& f, const std::string& key) {
  const json* c = f.child(key);
  if (!c) return {};
  if (!c->is_array()) f.fail(key, "expected an array of numbers");
  std::vector<double> out;
  for (const auto& v : *c) {
    if (!v.is_number()) f.fail(key, "expected an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

PeriodicField named_field(const GridSpec& grid, const std::string& name) {
  if (name == "sin1") {
    return PeriodicField::sample(grid, [](double x) { return std::sin(kTwoPi * x); });
  }
  if (name == "cos2") {
    return PeriodicField::sample(grid, [](double x) { return std::cos(2 * kTwoPi * x); });
  }
  if (name == "mix") {
    return PeriodicField::sample(
        grid, [](double x) { return std::sin(kTwoPi * x) + 0.5 * std::cos(2 * kTwoPi * x); });
  }
  if (name == "zero") return PeriodicField::zero(grid);
  throw InvalidArgument("unknown named field '" + name + "'");
}

PeriodicField read_initial_condition(const json& spec, const std::string& where,
                                     const GridSpec& grid, const InputContext& ctx) {
  if (spec.is_string()) {
    const auto name = spec.get<std::string>();
    if (std::find(kNames.begin(), kNames.end(), name) == kNames.end()) {
      throw ConfigError("config field '" + where + "': unknown named field '" + name +
                        "' (expected sin1, cos2, mix or zero)");
    }
    return named_field(grid, name);
  }
  Fields f(spec, where);
  const auto kind = f.text("kind", std::nullopt, {"named", "fourier", "file", "random"});
  PeriodicField u = PeriodicField::zero(grid);
  if (kind == "named") {
    u = named_field(grid, f.text("name", std::nullopt, kNames));
    u *= f.number("amplitude", 1.0, -1e6, 1e6);
  } else if (kind == "fourier") {
    const double mean = f.number("mean", 0.0, -1e6, 1e6);
    const auto a = coefficient_list(f, "cos");
    const auto b = coefficient_list(f, "sin");
    const auto modes = static_cast<int>(std::max(a.size(), b.size()));
    if (modes > grid.max_mode()) {
      f.fail(a.size() >= b.size() ? "cos" : "sin",
             std::to_string(modes) + " modes exceed max_mode " + std::to_string(grid.max_mode()));
    }
    u = PeriodicField::sample(grid, [&](double x) {
      double s = mean;
      for (std::size_t m = 0; m < a.size(); ++m) s += a[m] * std::cos(kTwoPi * double(m + 1) * x);
      for (std::size_t m = 0; m < b.size(); ++m) s += b[m] * std::sin(kTwoPi * double(m + 1) * x);
      return s;
    });
    u *= f.number("amplitude", 1.0, -1e6, 1e6);
  } else if (kind == "file") {
    std::filesystem::path p = f.text("path", std::nullopt);
    if (p.is_relative()) p = ctx.base_dir / p;
    PeriodicField loaded = PeriodicField::zero(grid);
    try {
      loaded = io::read_field(p.string(), grid.max_mode());
    } catch (const std::exception& e) {
      f.fail("path", e.what());
    }
    if (!(loaded.grid() == grid)) {
      f.fail("path", "field has " + std::to_string(loaded.size()) + " points, expected n_points = " +
                         std::to_string(grid.n_points()));
    }
    u = loaded * f.number("amplitude", 1.0, -1e6, 1e6);
  } else {
    const auto seed = f.seed("seed", ctx.seed);
    const int modes = f.integer("modes", std::min(4, grid.max_mode()), 1, grid.max_mode());
    const double amp = f.number("amplitude", 1.0, 0.0, 1e6);
    u = random_band_limited(grid, seed, modes, amp);
  }
  f.finish();
  return u;
}

SolverConfig read_solver(Fields& f, int default_n, int default_k) {
  const int n = f.integer("n_points", default_n, 8, 1 << 16);
  if (n % 2 != 0) f.fail("n_points", "must be even");
  const int max_mode = f.integer("max_mode", 0, 0, n / 3);
  SolverConfig c{GridSpec(n, max_mode), SobolevOrder(f.integer("k", default_k, 0, SobolevOrder::kMax))};
  c.dt = f.positive("dt", c.dt, 1.0);
  c.t_end = f.positive("t_end", c.t_end, 1e6);
  if (c.dt > c.t_end) f.fail("dt", "must not exceed t_end");
  c.integrator = integrator_from_string(f.text("integrator", std::string(to_string(c.integrator)),
                                               {"rk4", "rk4_mform"}));
  c.record_every = f.integer("record_every", c.record_every, 1, 1 << 30);
  c.blowup_slope_floor = f.number("slope_floor", c.blowup_slope_floor, 1e-12, 0.999);
  c.velocity_cap = f.positive("velocity_cap", c.velocity_cap);
  c.validate();
  return c;
}

}  // namespace geoflow::cli
