#pragma once

#include "geoflow/spectral.hpp"

namespace geoflow {

// Orientation-preserving circle diffeomorphism phi(x) = x + f(x) (mod 1),
// stored through its periodic displacement f. The lift F(x) = x + f(x)
// satisfies F(x+1) = F(x) + 1; construction rejects min(1 + f_x) <= 0.
class CircleDiffeo {
 public:
  explicit CircleDiffeo(PeriodicField displacement);

  static CircleDiffeo identity(const GridSpec& grid);
  static CircleDiffeo rotation(const GridSpec& grid, double angle);

  const PeriodicField& displacement() const noexcept { return displacement_; }
  const GridSpec& grid() const noexcept { return displacement_.grid(); }
  // Lift values x_j + f(x_j) at the grid nodes.
  std::vector<double> lift_at_nodes() const;
  // phi at arbitrary points (lift, not reduced mod 1).
  std::vector<double> operator()(std::span<const double> points) const;
  double min_slope() const;

 private:
  PeriodicField displacement_;
};

CircleDiffeo identity_diffeo(const GridSpec& grid);

// phi o psi. Throws DegenerateDiffeo when the resampled result loses
// positive slope.
CircleDiffeo compose(const CircleDiffeo& phi, const CircleDiffeo& psi);

// Per-node safeguarded Newton on the monotone lift, bisection fallback.
struct InversionOptions {
  double tolerance = 1e-12;
  int max_iterations = 50;
};
CircleDiffeo invert(const CircleDiffeo& phi, InversionOptions opts = {});

// u o eta.
PeriodicField right_translate(const PeriodicField& u, const CircleDiffeo& eta);

// phi_x = 1 + f_x.
PeriodicField jacobian(const CircleDiffeo& phi);

}  // namespace geoflow
