#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "slice_radon/fft.hpp"
#include "slice_radon/image.hpp"

namespace slice_radon {

enum class Backend { dft, dct, direct };

std::string_view to_string(Backend b) noexcept;
Backend parse_backend(std::string_view name);

// Centered 2D DFT of an image zero-padded to a square frame. The phase
// origin is the image's origin pixel (see origin_col/origin_row), so bin
// (kx, ky) holds sum u(x, y) exp(-2 pi i (kx x + ky y) / size) with (x, y)
// the y-up centered pixel coordinates.
class ComplexSpectrum2D {
 public:
  ComplexSpectrum2D(int size, std::vector<cplx> bins);

  int size() const noexcept { return size_; }
  int width() const noexcept { return size_; }
  int height() const noexcept { return size_; }

  // Signed frequencies; indices wrap with period size().
  cplx at(int kx, int ky) const noexcept;
  // Row-major storage, row = ky + size/2, column = kx + size/2.
  std::span<const cplx> bins() const noexcept { return bins_; }

 private:
  int size_;
  std::vector<cplx> bins_;
};

// How the margin around the image is filled when a frame is padded:
// replicated edge pixels, zeros, or a constant one intensity range below the
// darkest pixel (2 min - max). The last one follows affine intensity maps of
// the image, so it leaves normalized projections unchanged under them.
enum class PadMode { edge, zero, dark };

std::string_view to_string(PadMode m) noexcept;
PadMode parse_pad_mode(std::string_view name);

// Orthonormal 2D DCT-II of an image placed in a centered square frame. Coefficient (0, 0) sits at the low-frequency corner; `at(kx, ky)`
// follows the y-up frame, so ky runs along +y.
class DctSpectrum2D {
 public:
  DctSpectrum2D(int size, std::vector<double> coeffs, int origin_x, int origin_y);

  int size() const noexcept { return size_; }
  int width() const noexcept { return size_; }
  int height() const noexcept { return size_; }

  double at(int kx, int ky) const noexcept {
    return coeffs_[static_cast<std::size_t>(ky) * size_ + kx];
  }
  std::span<const double> coeffs() const noexcept { return coeffs_; }

  // Position of the image's origin pixel inside the padded y-up frame.
  int origin_x() const noexcept { return origin_x_; }
  int origin_y() const noexcept { return origin_y_; }

 private:
  int size_;
  std::vector<double> coeffs_;
  int origin_x_;
  int origin_y_;
};

// Frame side is pad_factor * next_power_of_two(max(width, height)).
ComplexSpectrum2D dft2(const GrayImage& img, int pad_factor = 1);

// Frame side is pad_factor * max(width, height); the margin is filled per `mode`.
DctSpectrum2D dct2(const GrayImage& img, int pad_factor = 1, PadMode mode = PadMode::edge);

// Inverse of dct2 over the whole padded frame, returned top row first.
std::vector<double> idct2(const DctSpectrum2D& spectrum);

}  // namespace slice_radon
