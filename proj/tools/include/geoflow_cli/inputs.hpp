#pragma once

#include <filesystem>

#include "geoflow_cli/config.hpp"

namespace geoflow::cli {

// Defaults shared by every command that reads an initial condition.
struct InputContext {
  std::filesystem::path base_dir;  // relative file paths resolve here
  std::uint64_t seed = 0;
};

// Named fields sin1 = sin 2 pi x, cos2 = cos 4 pi x, mix = sin1 + cos2 / 2, zero.
PeriodicField named_field(const GridSpec& grid, const std::string& name);

// An initial-condition spec is either a name ("sin1") or an object
//   {"kind": "named",   "name": "mix", "amplitude": 0.1}
//   {"kind": "fourier", "mean": 0, "cos": [a1, a2, ...], "sin": [b1, ...]}
//   {"kind": "file",    "path": "u0.json"}
//   {"kind": "random",  "seed": 7, "modes": 4, "amplitude": 0.1}
// Every kind accepts "amplitude" as an overall factor (random: sup bound).
PeriodicField read_initial_condition(const json& spec, const std::string& where,
                                     const GridSpec& grid, const InputContext& ctx);

// Grid and integrator settings: n_points, max_mode, k, dt, t_end, integrator,
// record_every, slope_floor, velocity_cap.
SolverConfig read_solver(Fields& f, int default_n = 128, int default_k = 1);

}  // namespace geoflow::cli
