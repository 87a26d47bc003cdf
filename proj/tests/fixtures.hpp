#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "slice_radon/image.hpp"
#include "slice_radon/synth.hpp"

namespace fixture {

using slice_radon::GrayImage;

// The five-stripe 45 degree sign: default SignSpec, optionally without the
// rim.
inline GrayImage five_stripes(double stripe_angle = 45.0, bool ring = false) {
  slice_radon::SignSpec spec;
  spec.stripe_angle = stripe_angle;
  spec.circle_border = ring;
  return slice_radon::synth_sign(spec);
}

// Anti-aliased dark ring of the given width on a flat background; the center
// is in pixel (col, row) coordinates.
inline GrayImage ring(int w, int h, double cx, double cy, double radius, double contrast,
                      double background = 0.8, double width = 2.0) {
  constexpr int kSub = 4;
  std::vector<double> px(static_cast<std::size_t>(w) * h, background);
  for (int row = 0; row < h; ++row) {
    for (int col = 0; col < w; ++col) {
      int hits = 0;
      for (int sy = 0; sy < kSub; ++sy) {
        for (int sx = 0; sx < kSub; ++sx) {
          const double x = col - 0.5 + (sx + 0.5) / kSub;
          const double y = row - 0.5 + (sy + 0.5) / kSub;
          if (std::abs(std::hypot(x - cx, y - cy) - radius) <= width / 2.0) ++hits;
        }
      }
      px[static_cast<std::size_t>(row) * w + col] -= contrast * hits / (kSub * kSub);
    }
  }
  return GrayImage(w, h, std::move(px));
}

// Darkens every pixel whose signed distance along `angle` falls in [lo, hi].
inline GrayImage band(int size, double angle_deg, double lo, double hi) {
  const double a = angle_deg * 3.14159265358979323846 / 180.0;
  std::vector<double> px(static_cast<std::size_t>(size) * size, 0.9);
  for (int row = 0; row < size; ++row) {
    for (int col = 0; col < size; ++col) {
      const double r = slice_radon::centered_x(col, size) * std::cos(a) +
                       slice_radon::centered_y(row, size) * std::sin(a);
      if (r >= lo && r <= hi) px[static_cast<std::size_t>(row) * size + col] = 0.1;
    }
  }
  return GrayImage(size, size, std::move(px));
}

}  // namespace fixture
