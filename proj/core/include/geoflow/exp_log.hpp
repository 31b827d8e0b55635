#pragma once

#include <vector>

#include "geoflow/diffeo.hpp"
#include "geoflow/geodesic.hpp"

namespace geoflow {

struct ExpConfig {
  explicit ExpConfig(SolverConfig solver) : solver(std::move(solver)) { this->solver.t_end = 1.0; }

  SolverConfig solver;  // t_end is forced to 1
  double fd_step = 1e-4;
  double newton_tol = 1e-10;
  int newton_max_iter = 30;
  // Size of the real Fourier basis {1, cos 2pi x, sin 2pi x, cos 4pi x, ...}
  // parameterizing the unknown initial velocity; 0 means 2*max_mode + 1.
  int shooting_modes = 0;
  // Largest sup|psi - Id| accepted by the logarithm.
  double trust_radius = 0.1;

  void validate() const;
  int basis_size() const;
};

// Time-one map of the geodesic flow from the identity.
CircleDiffeo riemann_exp(SobolevOrder k, const PeriodicField& u0, const ExpConfig& cfg);

// Central difference (exp(u0 + h w) - exp(u0 - h w)) / 2h of the displacement.
PeriodicField d_exp(SobolevOrder k, const PeriodicField& u0, const PeriodicField& w,
                    const ExpConfig& cfg);

// i-th element of the real Fourier shooting basis on `grid`.
PeriodicField shooting_basis(const GridSpec& grid, int index);

struct LogTrace {
  std::vector<double> residuals;  // sup-norm residual before each Newton step
  int iterations = 0;             // Jacobian solves performed
};

// Inverse of riemann_exp near the identity by damped Newton shooting.
// Throws OutOfNeighborhood when psi is outside the trust region or Newton
// does not converge within newton_max_iter.
PeriodicField riemann_log(SobolevOrder k, const CircleDiffeo& psi, const ExpConfig& cfg,
                          LogTrace* trace = nullptr);

}  // namespace geoflow
