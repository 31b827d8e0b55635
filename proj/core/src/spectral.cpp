#include "geoflow/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "fft.hpp"
#include "geoflow/errors.hpp"

namespace geoflow {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::size_t idx(int i) { return static_cast<std::size_t>(i); }
}  // namespace

GridSpec::GridSpec(int n_points, int max_mode) : n_(n_points), max_mode_(max_mode) {
  if (n_points < 8 || n_points % 2 != 0) {
    throw InvalidArgument("GridSpec: n_points must be even and >= 8, got " +
                          std::to_string(n_points));
  }
  if (max_mode_ == 0) max_mode_ = n_points / 3;
  if (max_mode_ < 1 || max_mode_ > n_points / 3) {
    throw InvalidArgument("GridSpec: max_mode must lie in [1, n_points/3], got " +
                          std::to_string(max_mode));
  }
}

std::vector<double> GridSpec::nodes() const {
  std::vector<double> x(idx(n_));
  for (int j = 0; j < n_; ++j) x[idx(j)] = node(j);
  return x;
}

SobolevOrder::SobolevOrder(int k) : k_(k) {
  if (k < 0 || k > kMax) {
    throw InvalidArgument("SobolevOrder: k must lie in [0, 4], got " + std::to_string(k));
  }
}

// ---------------------------------------------------------------------------

PeriodicField::PeriodicField(GridSpec grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != grid_.n_points()) {
    throw InvalidArgument("PeriodicField: expected " + std::to_string(grid_.n_points()) +
                          " samples, got " + std::to_string(values_.size()));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw InvalidArgument("PeriodicField: non-finite sample");
  }
  spectrum_ = detail::forward_fft(values_);
  compute_band();
}

PeriodicField::PeriodicField(GridSpec grid, std::vector<double> values,
                             std::vector<Complex> spectrum)
    : grid_(grid), values_(std::move(values)), spectrum_(std::move(spectrum)) {
  compute_band();
}

PeriodicField PeriodicField::zero(const GridSpec& grid) {
  return PeriodicField(grid, std::vector<double>(idx(grid.n_points()), 0.0),
                       std::vector<Complex>(idx(grid.n_points() / 2 + 1)));
}

PeriodicField PeriodicField::constant(const GridSpec& grid, double c) {
  std::vector<Complex> spec(idx(grid.n_points() / 2 + 1));
  spec[0] = c;
  return PeriodicField(grid, std::vector<double>(idx(grid.n_points()), c), std::move(spec));
}

PeriodicField PeriodicField::from_spectrum(const GridSpec& grid,
                                           std::vector<Complex> half_spectrum) {
  const int n = grid.n_points();
  if (static_cast<int>(half_spectrum.size()) != n / 2 + 1) {
    throw InvalidArgument("PeriodicField::from_spectrum: wrong spectrum length");
  }
  half_spectrum.front().imag(0.0);
  half_spectrum.back().imag(0.0);
  auto values = detail::inverse_fft(half_spectrum, n);
  for (double v : values) {
    if (!std::isfinite(v)) throw InvalidArgument("PeriodicField: non-finite sample");
  }
  return PeriodicField(grid, std::move(values), std::move(half_spectrum));
}

void PeriodicField::compute_band() {
  band_ = 0;
  for (int m = static_cast<int>(spectrum_.size()) - 1; m > 0; --m) {
    if (spectrum_[idx(m)] != Complex{}) {
      band_ = m;
      break;
    }
  }
}

Complex PeriodicField::coefficient(int m) const {
  const int half = grid_.n_points() / 2;
  if (m > half || m < -half) return {};
  if (m >= 0) return spectrum_[idx(m)];
  return std::conj(spectrum_[idx(-m)]);
}

double PeriodicField::sup_norm() const {
  double s = 0.0;
  for (double v : values_) s = std::max(s, std::abs(v));
  return s;
}

double PeriodicField::min() const { return *std::min_element(values_.begin(), values_.end()); }
double PeriodicField::max() const { return *std::max_element(values_.begin(), values_.end()); }

PeriodicField PeriodicField::truncated() const { return truncated(grid_.max_mode()); }

PeriodicField PeriodicField::truncated(int max_mode) const {
  if (band_ <= max_mode) return *this;
  auto spec = spectrum_;
  for (std::size_t m = idx(max_mode) + 1; m < spec.size(); ++m) spec[m] = {};
  return from_spectrum(grid_, std::move(spec));
}

PeriodicField& PeriodicField::operator+=(const PeriodicField& other) {
  require_same_grid(*this, other, "add");
  for (std::size_t j = 0; j < values_.size(); ++j) values_[j] += other.values_[j];
  for (std::size_t m = 0; m < spectrum_.size(); ++m) spectrum_[m] += other.spectrum_[m];
  band_ = std::max(band_, other.band_);
  return *this;
}

PeriodicField& PeriodicField::operator-=(const PeriodicField& other) {
  require_same_grid(*this, other, "subtract");
  for (std::size_t j = 0; j < values_.size(); ++j) values_[j] -= other.values_[j];
  for (std::size_t m = 0; m < spectrum_.size(); ++m) spectrum_[m] -= other.spectrum_[m];
  band_ = std::max(band_, other.band_);
  return *this;
}

PeriodicField& PeriodicField::operator*=(double s) {
  for (double& v : values_) v *= s;
  for (Complex& c : spectrum_) c *= s;
  if (s == 0.0) band_ = 0;
  return *this;
}

PeriodicField operator+(PeriodicField a, const PeriodicField& b) { return a += b; }
PeriodicField operator-(PeriodicField a, const PeriodicField& b) { return a -= b; }
PeriodicField operator*(double s, PeriodicField a) { return a *= s; }
PeriodicField operator*(PeriodicField a, double s) { return a *= s; }
PeriodicField operator-(PeriodicField a) { return a *= -1.0; }

PeriodicField axpy(const PeriodicField& a, double s, const PeriodicField& b) {
  PeriodicField out = b;
  out *= s;
  out += a;
  return out;
}

void require_same_grid(const PeriodicField& a, const PeriodicField& b, const char* op) {
  if (!(a.grid() == b.grid())) {
    throw GridMismatch(std::string(op) + ": fields live on different grids (" +
                       std::to_string(a.grid().n_points()) + " vs " +
                       std::to_string(b.grid().n_points()) + " points)");
  }
}

// ---------------------------------------------------------------------------

PeriodicField derivative(const PeriodicField& u, int order) {
  if (order < 0) throw InvalidArgument("derivative: negative order");
  if (order == 0) return u;
  const int n = u.size();
  const int half = n / 2;
  std::vector<Complex> spec(u.spectrum().begin(), u.spectrum().end());
  for (int m = 0; m < half; ++m) {
    spec[idx(m)] *= std::pow(Complex(0.0, kTwoPi * m), order);
  }
  if (order % 2 == 1) {
    spec[idx(half)] = {};
  } else {
    const double nyq = std::pow(kTwoPi * half, order) * ((order / 2) % 2 == 0 ? 1.0 : -1.0);
    spec[idx(half)] *= nyq;
  }
  return PeriodicField::from_spectrum(u.grid(), std::move(spec));
}

PeriodicField multiply(const PeriodicField& u, const PeriodicField& v) {
  require_same_grid(u, v, "multiply");
  std::vector<double> prod(idx(u.size()));
  for (int j = 0; j < u.size(); ++j) prod[idx(j)] = u[j] * v[j];
  auto spec = detail::forward_fft(prod);
  for (std::size_t m = idx(u.grid().max_mode()) + 1; m < spec.size(); ++m) spec[m] = {};
  return PeriodicField::from_spectrum(u.grid(), std::move(spec));
}

double inertia_multiplier(SobolevOrder k, int m) {
  const double w2 = (kTwoPi * m) * (kTwoPi * m);
  double term = 1.0;
  double sum = 1.0;
  for (int i = 1; i <= k.value(); ++i) {
    term *= w2;
    sum += term;
  }
  return sum;
}

namespace {
template <class Op>
PeriodicField scale_modes(const PeriodicField& u, Op op) {
  std::vector<Complex> spec(u.spectrum().begin(), u.spectrum().end());
  for (std::size_t m = 0; m < spec.size(); ++m) spec[m] = op(spec[m], static_cast<int>(m));
  return PeriodicField::from_spectrum(u.grid(), std::move(spec));
}
}  // namespace

PeriodicField apply_inertia(SobolevOrder k, const PeriodicField& u) {
  if (k.value() == 0) return u;
  return scale_modes(u, [k](Complex c, int m) { return c * inertia_multiplier(k, m); });
}

PeriodicField invert_inertia(SobolevOrder k, const PeriodicField& f) {
  if (k.value() == 0) return f;
  return scale_modes(f, [k](Complex c, int m) { return c / inertia_multiplier(k, m); });
}

double inner_k(SobolevOrder k, const PeriodicField& u, const PeriodicField& v) {
  require_same_grid(u, v, "inner_k");
  const auto cu = u.spectrum();
  const auto cv = v.spectrum();
  const int half = u.size() / 2;
  double sum = 0.0;
  for (int m = 0; m <= half; ++m) {
    const double weight = (m == 0 || m == half) ? 1.0 : 2.0;
    sum += weight * inertia_multiplier(k, m) * (cu[idx(m)] * std::conj(cv[idx(m)])).real();
  }
  return sum;
}

double norm_k(SobolevOrder k, const PeriodicField& u) { return std::sqrt(inner_k(k, u, u)); }

// ---------------------------------------------------------------------------

namespace {

// Value and derivative of the trigonometric interpolant at x.
std::pair<double, double> interpolate(const PeriodicField& u, double x) {
  const auto c = u.spectrum();
  const int half = u.size() / 2;
  const int top = std::min(u.band(), half - 1);
  x -= std::floor(x);
  const Complex z = std::polar(1.0, kTwoPi * x);
  Complex zm = 1.0;
  double value = c[0].real();
  double slope = 0.0;
  for (int m = 1; m <= top; ++m) {
    zm *= z;
    const Complex term = c[idx(m)] * zm;
    value += 2.0 * term.real();
    slope -= 2.0 * kTwoPi * m * term.imag();
  }
  if (u.band() == half) {
    const double nyq = c[idx(half)].real();
    const double arg = std::numbers::pi * u.size() * x;
    value += nyq * std::cos(arg);
    slope -= nyq * std::numbers::pi * u.size() * std::sin(arg);
  }
  return {value, slope};
}

}  // namespace

std::vector<double> evaluate_at(const PeriodicField& u, std::span<const double> points) {
  std::vector<double> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(points[i])) throw InvalidArgument("evaluate_at: non-finite point");
    out[i] = interpolate(u, points[i]).first;
  }
  return out;
}

double evaluate_at(const PeriodicField& u, double point) {
  if (!std::isfinite(point)) throw InvalidArgument("evaluate_at: non-finite point");
  return interpolate(u, point).first;
}

std::pair<double, double> evaluate_with_derivative(const PeriodicField& u, double point) {
  if (!std::isfinite(point)) throw InvalidArgument("evaluate_at: non-finite point");
  return interpolate(u, point);
}

PeriodicField random_band_limited(const GridSpec& grid, std::uint64_t seed, int max_mode,
                                  double amplitude) {
  if (max_mode < 0 || max_mode > grid.max_mode()) {
    throw InvalidArgument("random_band_limited: max_mode outside [0, grid max_mode]");
  }
  if (amplitude < 0.0) throw InvalidArgument("random_band_limited: negative amplitude");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<Complex> spec(idx(grid.n_points() / 2 + 1));
  double bound = 0.0;
  const double a0 = unit(rng);
  spec[0] = a0;
  bound += std::abs(a0);
  for (int m = 1; m <= max_mode; ++m) {
    const double w = 1.0 / ((1.0 + m) * (1.0 + m));
    const double a = w * unit(rng);  // cosine coefficient
    const double b = w * unit(rng);  // sine coefficient
    spec[idx(m)] = Complex(0.5 * a, -0.5 * b);
    bound += std::abs(a) + std::abs(b);
  }
  const double scale = bound > 0.0 ? amplitude / bound : 0.0;
  for (auto& c : spec) c *= scale;
  return PeriodicField::from_spectrum(grid, std::move(spec));
}

}  // namespace geoflow
