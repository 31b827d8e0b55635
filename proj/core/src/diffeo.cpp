#include "geoflow/diffeo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "geoflow/errors.hpp"

namespace geoflow {

CircleDiffeo::CircleDiffeo(PeriodicField displacement) : displacement_(std::move(displacement)) {
  const double slope = min_slope();
  if (!(slope > 0.0)) {
    throw DegenerateDiffeo("CircleDiffeo: min slope " + std::to_string(slope) +
                           " is not positive");
  }
}

CircleDiffeo CircleDiffeo::identity(const GridSpec& grid) {
  return CircleDiffeo(PeriodicField::zero(grid));
}

CircleDiffeo CircleDiffeo::rotation(const GridSpec& grid, double angle) {
  return CircleDiffeo(PeriodicField::constant(grid, angle));
}

std::vector<double> CircleDiffeo::lift_at_nodes() const {
  std::vector<double> out(static_cast<std::size_t>(displacement_.size()));
  for (int j = 0; j < displacement_.size(); ++j) {
    out[static_cast<std::size_t>(j)] = grid().node(j) + displacement_[j];
  }
  return out;
}

std::vector<double> CircleDiffeo::operator()(std::span<const double> points) const {
  auto f = evaluate_at(displacement_, points);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] += points[i];
  return f;
}

double CircleDiffeo::min_slope() const { return 1.0 + derivative(displacement_, 1).min(); }

CircleDiffeo identity_diffeo(const GridSpec& grid) { return CircleDiffeo::identity(grid); }

CircleDiffeo compose(const CircleDiffeo& phi, const CircleDiffeo& psi) {
  require_same_grid(phi.displacement(), psi.displacement(), "compose");
  const auto inner = psi.lift_at_nodes();
  auto g = evaluate_at(phi.displacement(), inner);
  for (int j = 0; j < psi.displacement().size(); ++j) {
    g[static_cast<std::size_t>(j)] += psi.displacement()[j];
  }
  PeriodicField disp(phi.grid(), std::move(g));
  const double slope = 1.0 + derivative(disp, 1).min();
  if (!(slope > 0.0)) {
    throw DegenerateDiffeo("compose: resampled composition has min slope " +
                           std::to_string(slope));
  }
  return CircleDiffeo(std::move(disp));
}

CircleDiffeo invert(const CircleDiffeo& phi, InversionOptions opts) {
  const PeriodicField& f = phi.displacement();
  const double fmin = f.min();
  const double fmax = f.max();
  // The grid extrema of f underestimate the interpolant's range a little.
  const double pad = 0.5 * (fmax - fmin) + 1e-3;
  std::vector<double> g(static_cast<std::size_t>(f.size()));
  for (int j = 0; j < f.size(); ++j) {
    const double x = phi.grid().node(j);
    // Solve y + f(y) = x; the root lies in [x - max f, x - min f].
    double lo = x - fmax - pad;
    double hi = x - fmin + pad;
    double y = x - f[j];
    bool converged = false;
    for (int it = 0; it < opts.max_iterations; ++it) {
      const auto [fy, dfy] = evaluate_with_derivative(f, y);
      const double residual = y + fy - x;
      if (std::abs(residual) <= opts.tolerance) {
        converged = true;
        break;
      }
      if (residual > 0.0) {
        hi = std::min(hi, y);
      } else {
        lo = std::max(lo, y);
      }
      const double slope = 1.0 + dfy;
      double next = slope > 0.0 ? y - residual / slope : 0.5 * (lo + hi);
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      if (hi - lo <= opts.tolerance * 1e-3) {
        y = next;
        converged = true;
        break;
      }
      y = next;
    }
    if (!converged) {
      throw InversionFailure("invert: no convergence at node " + std::to_string(j) +
                             " (near-degenerate slope?)");
    }
    g[static_cast<std::size_t>(j)] = y - x;
  }
  return CircleDiffeo(PeriodicField(phi.grid(), std::move(g)));
}

PeriodicField right_translate(const PeriodicField& u, const CircleDiffeo& eta) {
  require_same_grid(u, eta.displacement(), "right_translate");
  return PeriodicField(u.grid(), evaluate_at(u, eta.lift_at_nodes()));
}

PeriodicField jacobian(const CircleDiffeo& phi) {
  auto d = derivative(phi.displacement(), 1);
  return d + PeriodicField::constant(phi.grid(), 1.0);
}

}  // namespace geoflow
