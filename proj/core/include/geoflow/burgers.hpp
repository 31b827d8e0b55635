#pragma once

#include <limits>
#include <vector>

#include "geoflow/exp_log.hpp"

namespace geoflow {

// For the L^2 metric (k = 0) the geodesic equation is u_t + 3 u u_x = 0 and
// is solved exactly along the characteristics x = xi + 3 u0(xi) t.

// Gradient-catastrophe time -1 / (3 min u0'), +infinity when u0' >= 0.
double blowup_time(const PeriodicField& u0);

struct CharacteristicSolution {
  PeriodicField u0;
  double t;
  std::vector<double> foot_points;  // xi_j with xi_j + 3 u0(xi_j) t = x_j (lift)
  std::vector<double> u_values;     // u(t, x_j) = u0(xi_j)

  PeriodicField field() const { return PeriodicField(u0.grid(), u_values); }
};

// Throws PastBlowUp when t >= blowup_time(u0).
CharacteristicSolution characteristics_solve(const PeriodicField& u0, double t);

// u(t, x) at arbitrary points via the characteristic foot points.
std::vector<double> characteristic_velocity(const PeriodicField& u0, double t,
                                            std::span<const double> points);

struct BlowupDetectorOptions {
  double t_max = 10.0;
  int coarse_steps = 400;    // uniform scan of (0, t_max]
  int xi_samples = 4096;     // resolution of the monotonicity test
  double time_tolerance = 1e-10;
};

// First time at which the sampled characteristic map xi -> xi + 3 u0(xi) t
// stops being strictly increasing, found by a uniform scan refined by
// bisection. Independent of the min-slope formula. +infinity if none up to t_max.
double detect_blowup(const PeriodicField& u0, BlowupDetectorOptions opts = {});

// phi(t) for the k = 0 geodesic: RK4 on phi_t = u(t, phi) with u from the
// characteristics. Throws PastBlowUp when t >= blowup_time(u0).
CircleDiffeo flow_map_k0(const PeriodicField& u0, double t, int steps = 400);

struct ProbeRow {
  int direction_id;
  double h;
  double fd_norm;  // sup|(exp(u0 + h d) - exp(u0 - h d)) / 2h|, NaN if invalid
  double ratio;    // fd_norm / fd_norm at the previous h, NaN on the first row
  bool valid;      // both perturbed data stay below blow-up at t = 1
};

struct ProbeReport {
  std::vector<ProbeRow> k0;       // L^2 exponential via characteristics
  std::vector<ProbeRow> control;  // same probe for the H^k exponential of cfg
};

// Finite-difference directional derivatives of the k = 0 exponential over a
// decreasing sequence of h, next to the same probe at cfg.solver.k (k >= 1).
// Diagnostic only: no pass/fail verdict.
ProbeReport exp_c1_failure_probe(const PeriodicField& u0, const std::vector<PeriodicField>& directions,
                                 const std::vector<double>& h_values, const ExpConfig& control_cfg,
                                 int k0_steps = 400);

}  // namespace geoflow
