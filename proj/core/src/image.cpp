#include "slice_radon/image.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "slice_radon/error.hpp"

namespace slice_radon {

namespace {

void check_dims(int width, int height) {
  if (width < 1 || height < 1) {
    throw Error(Errc::bad_header, "image dimensions must be positive, got " +
                                      std::to_string(width) + "x" + std::to_string(height));
  }
}

}  // namespace

GrayImage::GrayImage(int width, int height, double fill)
    : width_(width), height_(height) {
  check_dims(width, height);
  if (!(fill >= 0.0 && fill <= 1.0)) {
    throw Error(Errc::invalid_argument, "fill intensity outside [0,1]");
  }
  pixels_.assign(static_cast<std::size_t>(width) * height, fill);
}

GrayImage::GrayImage(int width, int height, std::vector<double> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  check_dims(width, height);
  if (pixels_.size() != static_cast<std::size_t>(width) * height) {
    throw Error(Errc::invalid_argument, "pixel count does not match dimensions");
  }
  for (double v : pixels_) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(Errc::invalid_argument, "intensity outside [0,1]");
    }
  }
}

double GrayImage::sum() const noexcept {
  return std::accumulate(pixels_.begin(), pixels_.end(), 0.0);
}

double GrayImage::mean() const noexcept { return sum() / static_cast<double>(pixels_.size()); }

GrayImage affine(const GrayImage& img, double scale, double offset) {
  std::vector<double> out(img.pixels().begin(), img.pixels().end());
  for (double& v : out) v = scale * v + offset;
  return GrayImage(img.width(), img.height(), std::move(out));
}

GrayImage crop(const GrayImage& img, int col0, int row0, int width, int height) {
  const int c0 = std::clamp(col0, 0, img.width() - 1);
  const int r0 = std::clamp(row0, 0, img.height() - 1);
  const int c1 = std::clamp(col0 + width, c0 + 1, img.width());
  const int r1 = std::clamp(row0 + height, r0 + 1, img.height());
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(c1 - c0) * (r1 - r0));
  for (int r = r0; r < r1; ++r) {
    for (int c = c0; c < c1; ++c) out.push_back(img(c, r));
  }
  return GrayImage(c1 - c0, r1 - r0, std::move(out));
}

}  // namespace slice_radon
