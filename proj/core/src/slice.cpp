#include "slice_radon/slice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "slice_radon/error.hpp"

namespace slice_radon {

std::size_t SpectrumSlice::length() const noexcept {
  return std::visit([](const auto& v) { return v.size(); }, values);
}

void check_angle(double angle_deg) {
  if (!(angle_deg >= 0.0 && angle_deg < 180.0)) {
    throw Error(Errc::angle_out_of_range,
                "angle " + std::to_string(angle_deg) + " outside [0, 180)");
  }
}

Direction direction(double angle_deg) {
  if (angle_deg == 0.0) return {1.0, 0.0};
  if (angle_deg == 90.0) return {0.0, 1.0};
  if (angle_deg == 180.0) return {-1.0, 0.0};
  const double rad = angle_deg * std::numbers::pi / 180.0;
  return {std::cos(rad), std::sin(rad)};
}

namespace {

template <typename Sample, typename Fetch>
Sample interpolate(double fx, double fy, Interp interp, Fetch fetch) {
  if (interp == Interp::nearest) {
    return fetch(static_cast<int>(std::lround(fx)), static_cast<int>(std::lround(fy)));
  }
  const double x0 = std::floor(fx), y0 = std::floor(fy);
  const double ax = fx - x0, ay = fy - y0;
  const int ix = static_cast<int>(x0), iy = static_cast<int>(y0);
  // Skipping zero-weight corners keeps axis-aligned samples exact and never
  // touches neighbours outside a finite support.
  Sample acc{};
  if (ax < 1.0 && ay < 1.0) acc += (1.0 - ax) * (1.0 - ay) * fetch(ix, iy);
  if (ax > 0.0 && ay < 1.0) acc += ax * (1.0 - ay) * fetch(ix + 1, iy);
  if (ax < 1.0 && ay > 0.0) acc += (1.0 - ax) * ay * fetch(ix, iy + 1);
  if (ax > 0.0 && ay > 0.0) acc += ax * ay * fetch(ix + 1, iy + 1);
  return acc;
}

}  // namespace

SpectrumSlice extract_slice(const ComplexSpectrum2D& spectrum, double angle_deg, Interp interp) {
  check_angle(angle_deg);
  const auto [c, s] = direction(angle_deg);
  const int n = spectrum.size();
  std::vector<cplx> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double t = k - n / 2;
    // The DFT is periodic, so samples past the Nyquist edge wrap.
    out[static_cast<std::size_t>(k)] = interpolate<cplx>(
        t * c, t * s, interp, [&](int kx, int ky) { return spectrum.at(kx, ky); });
  }
  SpectrumSlice slice;
  slice.backend = Backend::dft;
  slice.angle = angle_deg;
  slice.frame = n;
  slice.origin = n / 2;
  slice.values = std::move(out);
  return slice;
}

SpectrumSlice extract_slice(const DctSpectrum2D& spectrum, double angle_deg, Interp interp) {
  check_angle(angle_deg);
  auto [c, s] = direction(angle_deg);
  c = std::abs(c);
  const int n = spectrum.size();
  const auto fetch = [&](int kx, int ky) {
    return (kx < n && ky < n) ? spectrum.at(kx, ky) : 0.0;
  };
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = interpolate<double>(k * c, k * s, interp, fetch);

  SpectrumSlice slice;
  slice.backend = Backend::dct;
  slice.angle = angle_deg;
  slice.frame = n;
  // DCT-III sample i sits at distance i + 0.5 from the frame corner along
  // (|cos|, sin); the image's origin pixel center fixes R = 0.
  slice.origin = (spectrum.origin_x() + 0.5) * c + (spectrum.origin_y() + 0.5) * s - 0.5;
  slice.values = std::move(out);
  return slice;
}

namespace {

std::vector<double> frequency_weights(const SpectrumSlice& slice, int power) {
  const std::size_t len = slice.length();
  std::vector<double> w(len, 0.0);
  if (len < 2) return w;
  const bool centered = slice.backend == Backend::dft;
  const double half = static_cast<double>(len / 2);
  const double fmax = centered ? half : static_cast<double>(len - 1);
  for (std::size_t k = 0; k < len; ++k) {
    const double f = centered ? std::abs(static_cast<double>(k) - half) : static_cast<double>(k);
    w[k] = std::pow(f / fmax, power);
  }
  return w;
}

}  // namespace

SpectrumSlice weight_by_frequency(const SpectrumSlice& slice, int power) {
  const auto w = frequency_weights(slice, power);
  SpectrumSlice out = slice;
  std::visit(
      [&](auto& v) {
        for (std::size_t k = 0; k < v.size(); ++k) v[k] *= w[k];
      },
      out.values);
  return out;
}

SpectrumSlice ramp_filter(const SpectrumSlice& slice) { return weight_by_frequency(slice, 1); }

std::vector<double> symmetric_extension(const SpectrumSlice& slice) {
  if (slice.backend == Backend::dct) {
    const auto& v = slice.real_values();
    std::vector<double> out(v.rbegin(), v.rend());
    out.insert(out.end(), v.begin() + (v.empty() ? 0 : 1), v.end());
    return out;
  }
  std::vector<double> out;
  for (const auto& z : slice.complex_values()) out.push_back(z.real());
  return out;
}

SliceInverse inverse_slice(const SpectrumSlice& slice) {
  SliceInverse inv;
  inv.origin = slice.origin;
  if (slice.backend == Backend::dct) {
    inv.values = dct_iii(slice.real_values());
    return inv;
  }
  std::vector<cplx> buf = slice.complex_values();
  if (!is_power_of_two(buf.size())) {
    throw Error(Errc::invalid_argument, "DFT slice length must be a power of two");
  }
  fftshift(std::span<cplx>(buf));
  fft(buf, true);
  fftshift(std::span<cplx>(buf));
  inv.values.resize(buf.size());
  for (std::size_t i = 0; i < buf.size(); ++i) {
    inv.values[i] = buf[i].real();
    inv.max_imag = std::max(inv.max_imag, std::abs(buf[i].imag()));
  }
  return inv;
}

}  // namespace slice_radon
