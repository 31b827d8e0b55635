#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace geoflow {

using Complex = std::complex<double>;

// Uniform sampling of [0,1) together with the 2/3-rule truncation band.
class GridSpec {
 public:
  // max_mode == 0 selects floor(n_points / 3).
  explicit GridSpec(int n_points, int max_mode = 0);

  int n_points() const noexcept { return n_; }
  int max_mode() const noexcept { return max_mode_; }
  double spacing() const noexcept { return 1.0 / n_; }
  double node(int j) const noexcept { return static_cast<double>(j) / n_; }
  std::vector<double> nodes() const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  int n_;
  int max_mode_;
};

// H^k order; only 0..4 are supported, larger orders lose too much precision
// in the apply/invert round trip.
class SobolevOrder {
 public:
  static constexpr int kMax = 4;
  explicit SobolevOrder(int k);
  int value() const noexcept { return k_; }
  friend bool operator==(SobolevOrder, SobolevOrder) = default;

 private:
  int k_;
};

// Real periodic function on the unit circle, stored by its samples at
// x_j = j/N and by the normalized half spectrum c_m = (1/N) sum_j u_j e^{-2 pi i m x_j},
// m = 0..N/2. Both views are computed at construction; the value is immutable.
class PeriodicField {
 public:
  PeriodicField(GridSpec grid, std::vector<double> values);

  static PeriodicField zero(const GridSpec& grid);
  static PeriodicField constant(const GridSpec& grid, double c);
  // Samples f(x_j).
  template <class F>
  static PeriodicField sample(const GridSpec& grid, F&& f) {
    std::vector<double> v(static_cast<std::size_t>(grid.n_points()));
    for (int j = 0; j < grid.n_points(); ++j) v[static_cast<std::size_t>(j)] = f(grid.node(j));
    return PeriodicField(grid, std::move(v));
  }
  // Build from a half spectrum of length N/2+1. The imaginary parts of the
  // m = 0 and Nyquist coefficients are discarded.
  static PeriodicField from_spectrum(const GridSpec& grid, std::vector<Complex> half_spectrum);

  const GridSpec& grid() const noexcept { return grid_; }
  int size() const noexcept { return grid_.n_points(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](int j) const noexcept { return values_[static_cast<std::size_t>(j)]; }
  std::span<const Complex> spectrum() const noexcept { return spectrum_; }
  // Coefficient for any integer mode in [-N/2, N/2].
  Complex coefficient(int m) const;
  // Highest mode with a nonzero coefficient (0 for constants).
  int band() const noexcept { return band_; }

  double sup_norm() const;
  double min() const;
  double max() const;
  double mean() const noexcept { return spectrum_[0].real(); }

  // Spectrum restricted to |m| <= max_mode.
  PeriodicField truncated() const;
  PeriodicField truncated(int max_mode) const;

  PeriodicField& operator+=(const PeriodicField& other);
  PeriodicField& operator-=(const PeriodicField& other);
  PeriodicField& operator*=(double s);

 private:
  PeriodicField(GridSpec grid, std::vector<double> values, std::vector<Complex> spectrum);
  void compute_band();

  GridSpec grid_;
  std::vector<double> values_;
  std::vector<Complex> spectrum_;
  int band_ = 0;
};

PeriodicField operator+(PeriodicField a, const PeriodicField& b);
PeriodicField operator-(PeriodicField a, const PeriodicField& b);
PeriodicField operator*(double s, PeriodicField a);
PeriodicField operator*(PeriodicField a, double s);
PeriodicField operator-(PeriodicField a);

// Throws GridMismatch unless both fields live on the same grid.
void require_same_grid(const PeriodicField& a, const PeriodicField& b, const char* op);

// a + s*b without an intermediate temporary for s*b.
PeriodicField axpy(const PeriodicField& a, double s, const PeriodicField& b);

// Spectral d^order/dx^order. Odd orders drop the Nyquist mode.
PeriodicField derivative(const PeriodicField& u, int order = 1);

// Pointwise product, truncated to the grid's max_mode.
PeriodicField multiply(const PeriodicField& u, const PeriodicField& v);

// Multiplier a_k(m) = sum_{i=0..k} (2 pi m)^{2i} of the inertia operator.
double inertia_multiplier(SobolevOrder k, int m);
PeriodicField apply_inertia(SobolevOrder k, const PeriodicField& u);
PeriodicField invert_inertia(SobolevOrder k, const PeriodicField& f);

// <u,v>_k = sum_m a_k(m) u_m conj(v_m).
double inner_k(SobolevOrder k, const PeriodicField& u, const PeriodicField& v);
double norm_k(SobolevOrder k, const PeriodicField& u);

// Trigonometric interpolant of u at arbitrary points (taken mod 1).
std::vector<double> evaluate_at(const PeriodicField& u, std::span<const double> points);
double evaluate_at(const PeriodicField& u, double point);
// Interpolant and its first derivative at one point.
std::pair<double, double> evaluate_with_derivative(const PeriodicField& u, double point);

// Deterministic smooth random field: modes |m| <= max_mode with 1/(1+m)^2
// decay, rescaled so that sup|u| <= amplitude.
PeriodicField random_band_limited(const GridSpec& grid, std::uint64_t seed, int max_mode,
                                  double amplitude);

}  // namespace geoflow
