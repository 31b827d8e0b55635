#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geoflow/exp_log.hpp"

namespace geoflow {

// Samples of a C^1 curve alpha on the group together with its Eulerian
// velocity u(t) = alpha_t o alpha^{-1}.
class PathOnGroup {
 public:
  PathOnGroup(std::vector<double> times, std::vector<CircleDiffeo> diffeos,
              std::vector<PeriodicField> velocities);

  // Samples of a recorded geodesic trajectory.
  static PathOnGroup from_trajectory(const Trajectory& traj);

  std::size_t size() const noexcept { return times_.size(); }
  const std::vector<double>& times() const noexcept { return times_; }
  const std::vector<CircleDiffeo>& diffeos() const noexcept { return diffeos_; }
  const std::vector<PeriodicField>& velocities() const noexcept { return velocities_; }
  const GridSpec& grid() const { return diffeos_.front().grid(); }

  // max_i sup|alpha_t(t_i) - u_i o alpha_i| with alpha_t from second-order
  // finite differences of the displacements (0 for fewer than 3 samples).
  double consistency_residual() const;

 private:
  std::vector<double> times_;
  std::vector<CircleDiffeo> diffeos_;
  std::vector<PeriodicField> velocities_;
};

struct TransportOptions {
  int substeps = 1;                  // RK4 steps per sample interval
  double consistency_tolerance = 1e-4;
};

// Solves v_t + u v_x + Theta_k(u,v) = 0 with v(t_0) = V0 and u linearly
// interpolated in time. Returns the Eulerian representative v(t_i); the
// parallel lift is v(t_i) o alpha(t_i). Throws ResolutionError when the
// path samples are inconsistent with its velocities.
std::vector<PeriodicField> parallel_transport(SobolevOrder k, const PathOnGroup& path,
                                              const PeriodicField& v0,
                                              TransportOptions opts = {});

// D_{alpha_t} gamma = gamma_t - Q_k(u, gamma o alpha^{-1}) o alpha for a lift
// gamma sampled at the path times (Lagrangian representation).
std::vector<PeriodicField> derivation_along_curve(SobolevOrder k, const PathOnGroup& path,
                                                  const std::vector<PeriodicField>& lift);

// Trapezoid rule on ||u(t)||_k.
double curve_length(SobolevOrder k, const PathOnGroup& path);

struct PolarCoordinates {
  double r;
  PeriodicField w;  // unit H^k direction; zero field when r == 0
};
PolarCoordinates polar_coordinates(SobolevOrder k, const CircleDiffeo& phi, const ExpConfig& cfg);

// The curve t -> exp(c(t)) for a control curve c in the Lie algebra, with
// velocities from d_exp along c'(t).
PathOnGroup path_from_controls(SobolevOrder k, const std::vector<double>& times,
                               const std::vector<PeriodicField>& controls,
                               const std::vector<PeriodicField>& control_rates,
                               const ExpConfig& cfg);

struct MinimizationOptions {
  int perturbations = 20;
  std::uint64_t seed = 1;
  double epsilon = 0.5;     // variation amplitude relative to ||u0||_k
  int direction_modes = 4;  // band of the random variation fields
  int samples = 200;        // time samples per path on [0,1]
  double tolerance = 1e-6;  // slack in length >= r
};

struct PathSample {
  int id;          // 0 is the unperturbed geodesic
  double length;
  double r;        // polar radius of the endpoint
  double excess;   // length - r
  bool in_chart;
  std::string note;
};

struct MinimizationReport {
  double r;
  double geodesic_length;  // from the integrated geodesic's own velocities
  std::vector<PathSample> samples;
  bool minimizing;         // every in-chart sample has length >= r - tolerance
};

// Samples curves Id -> exp(u0) with controls c(t) = t u0 + eps sin(pi t) eta_j
// and compares their lengths with the geodesic's.
MinimizationReport minimization_experiment(SobolevOrder k, const PeriodicField& u0,
                                           const MinimizationOptions& opts,
                                           const ExpConfig& cfg);

}  // namespace geoflow
