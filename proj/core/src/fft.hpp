#pragma once

#include <complex>
#include <span>
#include <vector>

namespace geoflow::detail {

// Normalized real FFT: c_m = (1/N) sum_j u_j e^{-2 pi i m j / N}, m = 0..N/2.
std::vector<std::complex<double>> forward_fft(std::span<const double> values);

// Inverse of forward_fft. The input is copied; FFTW's c2r destroys its input.
std::vector<double> inverse_fft(std::span<const std::complex<double>> half_spectrum, int n);

}  // namespace geoflow::detail
