#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace fraclat::transforms {

// Above this total size the direct O(N^2) summation hands over to FFTW.
inline constexpr std::int64_t kDirectLimit = 4096;

// In-place multi-dimensional DFT of complex data (row-major dims).
// sign = -1: forward, out[k] = sum_p in[p] exp(-2 pi i k.p); sign = +1: inverse
// without normalization. Direct summation for total sizes <= kDirectLimit,
// FFTW above (identical result contract).
void dft(std::vector<std::complex<double>>& data, const std::vector<std::int64_t>& dims,
         int sign);

// DFT of real even-symmetric data (symbol of a symmetric Toeplitz operator):
// out[k] = sum_p in[p] cos(2 pi k.p), real by symmetry. Used for whole-row
// assembly; r2c FFT above kDirectLimit, long double direct sums below.
std::vector<double> real_even_dft(const std::vector<double>& data,
                                  const std::vector<std::int64_t>& dims);

// Test hook: force one of the two paths regardless of size.
std::vector<double> real_even_dft_direct(const std::vector<double>& data,
                                         const std::vector<std::int64_t>& dims);
std::vector<double> real_even_dft_fft(const std::vector<double>& data,
                                      const std::vector<std::int64_t>& dims);

} // namespace fraclat::transforms
