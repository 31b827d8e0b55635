#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>

namespace geoflow::detail {
namespace {

struct PlanPair {
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;
  ~PlanPair() {
    if (r2c) fftw_destroy_plan(r2c);
    if (c2r) fftw_destroy_plan(c2r);
  }
};

// Planning is not thread-safe in FFTW; execution through the new-array
// interface is, so plans are created once under a lock and then shared.
const PlanPair& plans_for(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<PlanPair>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    slot = std::make_unique<PlanPair>();
    std::vector<double> real(static_cast<std::size_t>(n));
    std::vector<fftw_complex> cplx(static_cast<std::size_t>(n / 2 + 1));
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    slot->r2c = fftw_plan_dft_r2c_1d(n, real.data(), cplx.data(), flags);
    slot->c2r = fftw_plan_dft_c2r_1d(n, cplx.data(), real.data(), flags);
  }
  return *slot;
}

}  // namespace

std::vector<std::complex<double>> forward_fft(std::span<const double> values) {
  const int n = static_cast<int>(values.size());
  const PlanPair& p = plans_for(n);
  std::vector<double> in(values.begin(), values.end());
  std::vector<std::complex<double>> out(static_cast<std::size_t>(n / 2 + 1));
  fftw_execute_dft_r2c(p.r2c, in.data(), reinterpret_cast<fftw_complex*>(out.data()));
  const double scale = 1.0 / n;
  for (auto& c : out) c *= scale;
  return out;
}

std::vector<double> inverse_fft(std::span<const std::complex<double>> half_spectrum, int n) {
  const PlanPair& p = plans_for(n);
  std::vector<std::complex<double>> in(half_spectrum.begin(), half_spectrum.end());
  std::vector<double> out(static_cast<std::size_t>(n));
  fftw_execute_dft_c2r(p.c2r, reinterpret_cast<fftw_complex*>(in.data()), out.data());
  return out;
}

}  // namespace geoflow::detail
