#pragma once

#include <complex>
#include <span>
#include <vector>

namespace slice_radon {

using cplx = std::complex<double>;

bool is_power_of_two(std::size_t n) noexcept;
std::size_t next_power_of_two(std::size_t n) noexcept;

// In-place iterative radix-2 transform. Forward is unnormalized with kernel
// e^{-2 pi i k n / N}; inverse applies 1/N. Length must be a power of two.
void fft(std::span<cplx> data, bool inverse = false);

// 2D transform of an n x n row-major buffer, rows then columns.
void fft2(std::span<cplx> data, std::size_t n, bool inverse = false);

// Swap halves so index 0 moves to n/2 (fftshift) or back (ifftshift).
// Identical for even n, which is the only case the library uses.
template <typename T>
void fftshift(std::span<T> data) {
  const std::size_t half = data.size() / 2;
  for (std::size_t i = 0; i < half; ++i) std::swap(data[i], data[i + half]);
}

// Orthonormal DCT-II and its inverse (DCT-III). Power-of-two lengths go
// through a length-N complex FFT; other lengths use the defining sum.
std::vector<double> dct_ii(std::span<const double> x);
std::vector<double> dct_iii(std::span<const double> coeffs);

}  // namespace slice_radon
