#include "slice_radon/fft.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

#include "slice_radon/error.hpp"

namespace slice_radon {

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) noexcept {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

void fft(std::span<cplx> data, bool inverse) {
  const std::size_t n = data.size();
  if (!is_power_of_two(n)) throw Error(Errc::invalid_argument, "FFT length must be a power of two");
  if (n == 1) return;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }

  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double theta = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    const std::size_t half = len / 2;
    // Twiddles computed directly rather than by recurrence to keep the
    // rounding error flat in n.
    std::vector<cplx> w(half);
    for (std::size_t k = 0; k < half; ++k) {
      w[k] = std::polar(1.0, theta * static_cast<double>(k));
    }
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const cplx u = data[start + k];
        const cplx v = data[start + k + half] * w[k];
        data[start + k] = u + v;
        data[start + k + half] = u - v;
      }
    }
  }
  if (inverse) {
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& v : data) v *= scale;
  }
}

void fft2(std::span<cplx> data, std::size_t n, bool inverse) {
  assert(data.size() == n * n);
  for (std::size_t r = 0; r < n; ++r) fft(data.subspan(r * n, n), inverse);
  std::vector<cplx> column(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) column[r] = data[r * n + c];
    fft(column, inverse);
    for (std::size_t r = 0; r < n; ++r) data[r * n + c] = column[r];
  }
}

namespace {

double dct_scale(std::size_t k, std::size_t n) {
  return k == 0 ? std::sqrt(1.0 / static_cast<double>(n)) : std::sqrt(2.0 / static_cast<double>(n));
}

}  // namespace

std::vector<double> dct_ii(std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<double> out(n, 0.0);
  if (n == 0) return out;
  const double pi = std::numbers::pi;

  if (!is_power_of_two(n)) {
    for (std::size_t k = 0; k < n; ++k) {
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        acc += x[i] * std::cos(pi * static_cast<double>(k) * (2.0 * i + 1.0) / (2.0 * n));
      }
      out[k] = dct_scale(k, n) * acc;
    }
    return out;
  }

  // Even samples in order, odd samples reversed; one complex FFT of length n.
  std::vector<cplx> v(n);
  for (std::size_t i = 0; i < n / 2; ++i) {
    v[i] = x[2 * i];
    v[n - 1 - i] = x[2 * i + 1];
  }
  if (n == 1) v[0] = x[0];
  fft(v);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx twiddle = std::polar(1.0, -pi * static_cast<double>(k) / (2.0 * n));
    out[k] = dct_scale(k, n) * (twiddle * v[k]).real();
  }
  return out;
}

std::vector<double> dct_iii(std::span<const double> coeffs) {
  const std::size_t n = coeffs.size();
  std::vector<double> out(n, 0.0);
  if (n == 0) return out;
  const double pi = std::numbers::pi;

  if (!is_power_of_two(n)) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        acc += dct_scale(k, n) * coeffs[k] *
               std::cos(pi * static_cast<double>(k) * (2.0 * i + 1.0) / (2.0 * n));
      }
      out[i] = acc;
    }
    return out;
  }

  // Undo the orthonormal scaling, rebuild the FFT of the reordered sequence
  // from Y[k] - i Y[n-k], then invert.
  std::vector<double> y(n + 1, 0.0);
  for (std::size_t k = 0; k < n; ++k) y[k] = coeffs[k] / dct_scale(k, n);
  std::vector<cplx> v(n);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx twiddle = std::polar(1.0, pi * static_cast<double>(k) / (2.0 * n));
    v[k] = twiddle * cplx(y[k], -y[n - k]);
  }
  fft(v, true);
  for (std::size_t i = 0; i < n / 2; ++i) {
    out[2 * i] = v[i].real();
    out[2 * i + 1] = v[n - 1 - i].real();
  }
  if (n == 1) out[0] = v[0].real();
  return out;
}

}  // namespace slice_radon
