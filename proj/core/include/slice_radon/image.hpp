#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace slice_radon {

// Grayscale raster, row-major, top row first. Intensities are normalized to
// [0, 1]; the constructor rejects anything else so every GrayImage in flight
// satisfies the invariant.
class GrayImage {
 public:
  GrayImage(int width, int height, double fill = 0.0);
  GrayImage(int width, int height, std::vector<double> pixels);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }

  double operator()(int col, int row) const noexcept {
    return pixels_[static_cast<std::size_t>(row) * width_ + col];
  }
  std::span<const double> pixels() const noexcept { return pixels_; }

  double sum() const noexcept;
  double mean() const noexcept;

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  int width_;
  int height_;
  std::vector<double> pixels_;
};

// Geometry shared by every projection routine. Angles are measured in a
// y-up frame whose origin is the pixel (width/2, height/2) counted from the
// bottom-left corner; this is the only place the top-left raster order is
// translated.
inline int origin_col(int width) noexcept { return width / 2; }
inline int origin_row(int height) noexcept { return height - 1 - height / 2; }
inline double centered_x(int col, int width) noexcept { return col - width / 2; }
inline double centered_y(int row, int height) noexcept {
  return (height - 1 - row) - height / 2;
}

// Affine intensity map a*img + b; throws if the result leaves [0, 1].
GrayImage affine(const GrayImage& img, double scale, double offset);

// Sub-image [col0, col0 + width) x [row0, row0 + height), clamped to bounds.
GrayImage crop(const GrayImage& img, int col0, int row0, int width, int height);

}  // namespace slice_radon
