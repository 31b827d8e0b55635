#include "geoflow/exp_log.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <string>

#include "geoflow/errors.hpp"
#include "geoflow/parallel.hpp"

namespace geoflow {

void ExpConfig::validate() const {
  solver.validate();
  if (!(fd_step >= 1e-6 && fd_step <= 1e-2)) {
    throw InvalidArgument("fd_step must lie in [1e-6, 1e-2]");
  }
  if (!(newton_tol > 0.0)) throw InvalidArgument("newton_tol must be positive");
  if (newton_max_iter < 1) throw InvalidArgument("newton_max_iter must be >= 1");
  if (shooting_modes < 0 || shooting_modes > 2 * solver.grid.max_mode() + 1) {
    throw InvalidArgument("shooting_modes must lie in [1, 2*max_mode+1] (0 = default)");
  }
  if (!(trust_radius > 0.0)) throw InvalidArgument("trust_radius must be positive");
}

int ExpConfig::basis_size() const {
  return shooting_modes > 0 ? shooting_modes : 2 * solver.grid.max_mode() + 1;
}

namespace {

SolverConfig time_one(SobolevOrder k, const ExpConfig& cfg) {
  SolverConfig s = cfg.solver;
  s.k = k;
  s.t_end = 1.0;
  return s;
}

Eigen::VectorXd as_vector(const PeriodicField& f) {
  Eigen::VectorXd v(f.size());
  for (int j = 0; j < f.size(); ++j) v[j] = f[j];
  return v;
}

PeriodicField combination(const GridSpec& grid, const Eigen::VectorXd& coeffs) {
  std::vector<Complex> spec(static_cast<std::size_t>(grid.n_points() / 2 + 1));
  spec[0] = coeffs[0];
  for (Eigen::Index i = 1; i < coeffs.size(); ++i) {
    const auto m = static_cast<std::size_t>((i + 1) / 2);
    if (i % 2 == 1) {
      spec[m] += Complex(0.5 * coeffs[i], 0.0);  // cos
    } else {
      spec[m] += Complex(0.0, -0.5 * coeffs[i]);  // sin
    }
  }
  return PeriodicField::from_spectrum(grid, std::move(spec));
}

Eigen::VectorXd project(const PeriodicField& f, int basis_size) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(basis_size);
  c[0] = f.coefficient(0).real();
  for (int i = 1; i < basis_size; ++i) {
    const Complex cm = f.coefficient((i + 1) / 2);
    c[i] = (i % 2 == 1) ? 2.0 * cm.real() : -2.0 * cm.imag();
  }
  return c;
}

}  // namespace

CircleDiffeo riemann_exp(SobolevOrder k, const PeriodicField& u0, const ExpConfig& cfg) {
  return geodesic_endpoint(u0, time_one(k, cfg)).phi;
}

PeriodicField d_exp(SobolevOrder k, const PeriodicField& u0, const PeriodicField& w,
                    const ExpConfig& cfg) {
  require_same_grid(u0, w, "d_exp");
  const double h = cfg.fd_step;
  const CircleDiffeo plus = riemann_exp(k, axpy(u0, h, w), cfg);
  const CircleDiffeo minus = riemann_exp(k, axpy(u0, -h, w), cfg);
  return (plus.displacement() - minus.displacement()) * (0.5 / h);
}

PeriodicField shooting_basis(const GridSpec& grid, int index) {
  if (index < 0 || index > 2 * grid.max_mode()) {
    throw InvalidArgument("shooting_basis: index out of range");
  }
  Eigen::VectorXd c = Eigen::VectorXd::Zero(index + 1);
  c[index] = 1.0;
  return combination(grid, c);
}

PeriodicField riemann_log(SobolevOrder k, const CircleDiffeo& psi, const ExpConfig& cfg,
                          LogTrace* trace) {
  cfg.validate();
  const GridSpec& grid = cfg.solver.grid;
  if (!(psi.grid() == grid)) throw GridMismatch("riemann_log: psi is not on the solver grid");
  const double distance = psi.displacement().sup_norm();
  if (distance > cfg.trust_radius) {
    throw OutOfNeighborhood("riemann_log: sup|psi - Id| = " + std::to_string(distance) +
                            " exceeds the trust radius " + std::to_string(cfg.trust_radius));
  }

  const int p = cfg.basis_size();
  const CircleDiffeo psi_inv = invert(psi);
  std::vector<PeriodicField> basis;
  basis.reserve(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) basis.push_back(shooting_basis(grid, i));

  // Residual: displacement of exp(u0) o psi^{-1}, zero exactly at the solution.
  auto residual = [&](const Eigen::VectorXd& c) {
    return as_vector(compose(riemann_exp(k, combination(grid, c), cfg), psi_inv).displacement());
  };

  // D exp_0 = Id, so the displacement of psi is a first-order guess.
  Eigen::VectorXd coeffs = project(psi.displacement(), p);
  Eigen::VectorXd r = residual(coeffs);
  double r_norm = r.lpNorm<Eigen::Infinity>();
  LogTrace local;
  LogTrace& tr = trace ? *trace : local;
  tr = LogTrace{};

  for (int iter = 0;; ++iter) {
    tr.residuals.push_back(r_norm);
    if (r_norm <= cfg.newton_tol) return combination(grid, coeffs);
    if (iter >= cfg.newton_max_iter) break;

    const PeriodicField u0 = combination(grid, coeffs);
    Eigen::MatrixXd jac(grid.n_points(), p);
    parallel_for(p, [&](int i) {
      jac.col(i) = as_vector(right_translate(d_exp(k, u0, basis[static_cast<std::size_t>(i)], cfg),
                                             psi_inv));
    });
    const Eigen::VectorXd step = jac.colPivHouseholderQr().solve(-r);
    ++tr.iterations;

    double lambda = 1.0;
    bool accepted = false;
    for (int halving = 0; halving < 12; ++halving, lambda *= 0.5) {
      try {
        const Eigen::VectorXd trial = coeffs + lambda * step;
        const Eigen::VectorXd r_trial = residual(trial);
        const double n_trial = r_trial.lpNorm<Eigen::Infinity>();
        if (n_trial < r_norm) {
          coeffs = trial;
          r = r_trial;
          r_norm = n_trial;
          accepted = true;
          break;
        }
      } catch (const NumericalError&) {
        // Trial left the domain of exp; shrink the step.
      }
    }
    if (!accepted) break;
  }
  throw OutOfNeighborhood("riemann_log: Newton shooting stalled at residual " +
                          std::to_string(r_norm) + " after " + std::to_string(tr.iterations) +
                          " iterations");
}

}  // namespace geoflow
