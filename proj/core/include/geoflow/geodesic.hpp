#pragma once

#include <string_view>
#include <vector>

#include "geoflow/diffeo.hpp"
#include "geoflow/spectral.hpp"

namespace geoflow {

enum class Integrator {
  rk4,        // u_t = B_k(u,u)
  rk4_mform,  // m_t = -(2 u_x m + u m_x), u = A_k^{-1} m
};

std::string_view to_string(Integrator integrator);
Integrator integrator_from_string(std::string_view name);

struct SolverConfig {
  SolverConfig(GridSpec grid, SobolevOrder k) : grid(grid), k(k) {}

  GridSpec grid;
  SobolevOrder k;
  double dt = 1e-3;
  double t_end = 1.0;
  Integrator integrator = Integrator::rk4_mform;
  // Integration stops with BlowUp once min phi_x drops below this floor...
  double blowup_slope_floor = 1e-3;
  // ...or once sup|u| exceeds this cap.
  double velocity_cap = 1e6;
  int record_every = 1;

  // Throws InvalidArgument on inconsistent settings.
  void validate() const;
  // Number of fixed RK4 steps; the effective step is t_end / steps() <= dt.
  int steps() const;
};

struct GeodesicState {
  double t;
  CircleDiffeo phi;
  PeriodicField u;  // Eulerian velocity phi_t o phi^{-1}
};

struct Trajectory {
  SobolevOrder k;
  std::vector<GeodesicState> states;
  std::vector<double> energy;               // <u,u>_k per state
  std::vector<double> momentum_deviation;   // sup|m(t)-m(0)| / sup|m(0)|

  std::vector<double> times() const;
  const GeodesicState& final_state() const { return states.back(); }
};

PeriodicField euler_rhs(SobolevOrder k, const PeriodicField& u);
PeriodicField mform_rhs(SobolevOrder k, const PeriodicField& m);

// Fixed-step RK4 on the coupled system (u or m, phi) with phi_t = u o phi,
// starting from (Id, u0). u0 is projected onto the retained modes first.
// Throws BlowUp when the flow map degenerates or u explodes.
Trajectory integrate_geodesic(const PeriodicField& u0, const SolverConfig& cfg);

// Same integration, keeping only the final state and skipping diagnostics.
GeodesicState geodesic_endpoint(const PeriodicField& u0, const SolverConfig& cfg);

// m_k = A_k(u) o phi * phi_x^2, constant in time along a geodesic.
PeriodicField momentum(SobolevOrder k, const GeodesicState& state);

double energy(SobolevOrder k, const PeriodicField& u);

// Flow of the autonomous field v up to time t (one-parameter subgroup).
CircleDiffeo lie_exponential(const PeriodicField& v, double t, int steps = 200);

}  // namespace geoflow
