#include "slice_radon/spectrum.hpp"

#include <algorithm>
#include <string>

#include "slice_radon/error.hpp"

namespace slice_radon {

std::string_view to_string(Backend b) noexcept {
  switch (b) {
    case Backend::dft: return "dft";
    case Backend::dct: return "dct";
    case Backend::direct: return "direct";
  }
  return "unknown";
}

Backend parse_backend(std::string_view name) {
  if (name == "dft") return Backend::dft;
  if (name == "dct") return Backend::dct;
  if (name == "direct") return Backend::direct;
  throw Error(Errc::invalid_argument, "unknown backend '" + std::string(name) + "'");
}

std::string_view to_string(PadMode m) noexcept {
  switch (m) {
    case PadMode::edge: return "edge";
    case PadMode::zero: return "zero";
    case PadMode::dark: return "dark";
  }
  return "unknown";
}

PadMode parse_pad_mode(std::string_view name) {
  for (auto m : {PadMode::edge, PadMode::zero, PadMode::dark}) {
    if (name == to_string(m)) return m;
  }
  throw Error(Errc::invalid_argument, "unknown pad mode '" + std::string(name) + "'");
}

ComplexSpectrum2D::ComplexSpectrum2D(int size, std::vector<cplx> bins)
    : size_(size), bins_(std::move(bins)) {
  if (size < 1 || bins_.size() != static_cast<std::size_t>(size) * size) {
    throw Error(Errc::invalid_argument, "spectrum size mismatch");
  }
}

cplx ComplexSpectrum2D::at(int kx, int ky) const noexcept {
  const auto wrap = [n = size_](int k) { return ((k % n) + n) % n; };
  const int col = wrap(kx + size_ / 2);
  const int row = wrap(ky + size_ / 2);
  return bins_[static_cast<std::size_t>(row) * size_ + col];
}

DctSpectrum2D::DctSpectrum2D(int size, std::vector<double> coeffs, int origin_x, int origin_y)
    : size_(size), coeffs_(std::move(coeffs)), origin_x_(origin_x), origin_y_(origin_y) {
  if (size < 1 || coeffs_.size() != static_cast<std::size_t>(size) * size) {
    throw Error(Errc::invalid_argument, "spectrum size mismatch");
  }
}

namespace {

void check_pad(int pad_factor) {
  if (pad_factor < 1) throw Error(Errc::invalid_argument, "pad factor must be >= 1");
}

}  // namespace

ComplexSpectrum2D dft2(const GrayImage& img, int pad_factor) {
  check_pad(pad_factor);
  const auto side = static_cast<int>(
      pad_factor * next_power_of_two(static_cast<std::size_t>(std::max(img.width(), img.height()))));
  const auto n = static_cast<std::size_t>(side);
  std::vector<cplx> buf(n * n, cplx{});
  const auto wrap = [side](int k) { return static_cast<std::size_t>(((k % side) + side) % side); };
  // Place the origin pixel at index (0, 0) so the transform's phase
  // reference is the image center.
  for (int row = 0; row < img.height(); ++row) {
    const auto y = static_cast<int>(centered_y(row, img.height()));
    for (int col = 0; col < img.width(); ++col) {
      const auto x = static_cast<int>(centered_x(col, img.width()));
      buf[wrap(y) * n + wrap(x)] = img(col, row);
    }
  }
  fft2(buf, n);
  std::vector<cplx> centered(n * n);
  const std::size_t half = n / 2;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      centered[((r + half) % n) * n + (c + half) % n] = buf[r * n + c];
    }
  }
  return ComplexSpectrum2D(side, std::move(centered));
}

DctSpectrum2D dct2(const GrayImage& img, int pad_factor, PadMode mode) {
  check_pad(pad_factor);
  const int side = pad_factor * std::max(img.width(), img.height());
  const int off_x = (side - img.width()) / 2;
  const int off_y = (side - img.height()) / 2;
  const auto n = static_cast<std::size_t>(side);

  // Frame in y-up order (row 0 is the bottom).
  double fill = 0.0;
  if (mode == PadMode::dark) {
    const auto [lo, hi] = std::minmax_element(img.pixels().begin(), img.pixels().end());
    fill = *lo - (*hi - *lo);
  }
  std::vector<double> frame(n * n, fill);
  for (int y = 0; y < side; ++y) {
    const int yi = y - off_y;
    if (mode != PadMode::edge && (yi < 0 || yi >= img.height())) continue;
    const int row = img.height() - 1 - std::clamp(yi, 0, img.height() - 1);
    for (int x = 0; x < side; ++x) {
      const int xi = x - off_x;
      if (mode != PadMode::edge && (xi < 0 || xi >= img.width())) continue;
      const int col = std::clamp(xi, 0, img.width() - 1);
      frame[static_cast<std::size_t>(y) * n + x] = img(col, row);
    }
  }

  std::vector<double> line(n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto out = dct_ii(std::span<const double>(frame).subspan(r * n, n));
    std::copy(out.begin(), out.end(), frame.begin() + static_cast<std::ptrdiff_t>(r * n));
  }
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) line[r] = frame[r * n + c];
    const auto out = dct_ii(line);
    for (std::size_t r = 0; r < n; ++r) frame[r * n + c] = out[r];
  }
  return DctSpectrum2D(side, std::move(frame), off_x + img.width() / 2, off_y + img.height() / 2);
}

std::vector<double> idct2(const DctSpectrum2D& spectrum) {
  const auto n = static_cast<std::size_t>(spectrum.size());
  std::vector<double> frame(spectrum.coeffs().begin(), spectrum.coeffs().end());
  std::vector<double> line(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) line[r] = frame[r * n + c];
    const auto out = dct_iii(line);
    for (std::size_t r = 0; r < n; ++r) frame[r * n + c] = out[r];
  }
  for (std::size_t r = 0; r < n; ++r) {
    const auto out = dct_iii(std::span<const double>(frame).subspan(r * n, n));
    std::copy(out.begin(), out.end(), frame.begin() + static_cast<std::ptrdiff_t>(r * n));
  }
  // Back to top-row-first raster order.
  std::vector<double> raster(n * n);
  for (std::size_t y = 0; y < n; ++y) {
    std::copy_n(frame.begin() + static_cast<std::ptrdiff_t>(y * n), n,
                raster.begin() + static_cast<std::ptrdiff_t>((n - 1 - y) * n));
  }
  return raster;
}

}  // namespace slice_radon
