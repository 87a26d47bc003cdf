#include "slice_radon/hough.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "slice_radon/error.hpp"

namespace slice_radon {

std::vector<EdgePoint> edge_points(const GrayImage& img) {
  const int w = img.width(), h = img.height();
  std::vector<EdgePoint> points;
  if (w < 3 || h < 3) return points;

  std::vector<double> gx, gy, mag;
  std::vector<std::pair<int, int>> where;
  for (int r = 1; r < h - 1; ++r) {
    for (int c = 1; c < w - 1; ++c) {
      // Central differences, averaged [1 2 1] across the derivative axis.
      const double dx = 0.125 * ((img(c + 1, r - 1) - img(c - 1, r - 1)) +
                                 2.0 * (img(c + 1, r) - img(c - 1, r)) +
                                 (img(c + 1, r + 1) - img(c - 1, r + 1)));
      const double dy = 0.125 * ((img(c - 1, r + 1) - img(c - 1, r - 1)) +
                                 2.0 * (img(c, r + 1) - img(c, r - 1)) +
                                 (img(c + 1, r + 1) - img(c + 1, r - 1)));
      gx.push_back(dx);
      gy.push_back(dy);
      mag.push_back(std::hypot(dx, dy));
      where.emplace_back(c, r);
    }
  }
  double mean = 0.0;
  for (double m : mag) mean += m;
  mean /= static_cast<double>(mag.size());
  double var = 0.0;
  for (double m : mag) var += (m - mean) * (m - mean);
  const double threshold = mean + std::sqrt(var / static_cast<double>(mag.size()));

  for (std::size_t i = 0; i < mag.size(); ++i) {
    if (mag[i] > threshold && mag[i] > 0.0) {
      points.push_back({where[i].first, where[i].second, gx[i] / mag[i], gy[i] / mag[i]});
    }
  }
  return points;
}

namespace {

void check_radii(const GrayImage& img, int r_min, int r_max) {
  const int limit = std::min(img.width(), img.height()) / 2;
  if (r_min < 1 || r_min > r_max || r_max > limit) {
    throw Error(Errc::bad_radius_range, "need 1 <= r_min <= r_max <= " + std::to_string(limit) +
                                            ", got [" + std::to_string(r_min) + ", " +
                                            std::to_string(r_max) + "]");
  }
}

}  // namespace

HoughAccumulator hough_accumulate(const GrayImage& img, int r_min, int r_max) {
  check_radii(img, r_min, r_max);
  HoughAccumulator acc;
  acc.width = img.width();
  acc.height = img.height();
  acc.r_min = r_min;
  acc.r_max = r_max;
  acc.votes.assign(static_cast<std::size_t>(r_max - r_min + 1) * acc.width * acc.height, 0.0);

  for (const auto& p : edge_points(img)) {
    for (int r = r_min; r <= r_max; ++r) {
      for (const double sign : {1.0, -1.0}) {
        const auto c = std::lround(p.col + sign * r * p.ux);
        const auto row = std::lround(p.row + sign * r * p.uy);
        if (c < 0 || c >= acc.width || row < 0 || row >= acc.height) continue;
        acc.votes[(static_cast<std::size_t>(r - r_min) * acc.height + row) * acc.width + c] += 1.0;
      }
    }
  }
  return acc;
}

double HoughAccumulator::window_votes(int col, int row, int r) const noexcept {
  double total = 0.0;
  for (int dr = -1; dr <= 1; ++dr) {
    const int y = row + dr;
    if (y < 0 || y >= height) continue;
    for (int dc = -1; dc <= 1; ++dc) {
      const int x = col + dc;
      if (x < 0 || x >= width) continue;
      total += at(x, y, r);
    }
  }
  return total;
}

double circle_support(double votes, int radius) noexcept {
  return votes / (2.0 * std::numbers::pi * radius);
}

std::optional<Circle> best_circle(const HoughAccumulator& acc) {
  std::optional<Circle> best;
  double best_support = 0.0;
  // Scan order (row, col, r) makes the first maximum the lexicographically
  // smallest (cy, cx, r).
  for (int row = 0; row < acc.height; ++row) {
    for (int col = 0; col < acc.width; ++col) {
      for (int r = acc.r_min; r <= acc.r_max; ++r) {
        const double v = acc.window_votes(col, row, r);
        const double support = circle_support(v, r);
        if (v > 0.0 && support > best_support) {
          best_support = support;
          best = Circle{col, row, r, v};
        }
      }
    }
  }
  if (!best || best_support <= 0.5) return std::nullopt;
  return best;
}

std::optional<Circle> locate_circle(const GrayImage& img, int r_min, int r_max) {
  return best_circle(hough_accumulate(img, r_min, r_max));
}

}  // namespace slice_radon
