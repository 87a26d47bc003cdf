#pragma once

#include <optional>
#include <vector>

#include "slice_radon/image.hpp"

namespace slice_radon {

struct Circle {
  int cx = 0;  // column
  int cy = 0;  // row
  int radius = 0;
  double score = 0.0;  // accumulated votes
};

// Edge pixels used for voting: central-difference gradients on interior
// pixels whose magnitude exceeds mean + 1 std of all interior magnitudes.
struct EdgePoint {
  int col;
  int row;
  double ux;  // unit gradient, columns
  double uy;  // unit gradient, rows
};
std::vector<EdgePoint> edge_points(const GrayImage& img);

// Dense (radius, row, col) vote counts for radii [r_min, r_max].
struct HoughAccumulator {
  int width = 0;
  int height = 0;
  int r_min = 0;
  int r_max = 0;
  std::vector<double> votes;

  double at(int col, int row, int r) const noexcept {
    return votes[(static_cast<std::size_t>(r - r_min) * height + row) * width + col];
  }

  // Votes landing in the 3x3 neighbourhood of (col, row) at radius r. A rim
  // whose center falls between pixels, or whose two edges sit a pixel either
  // side of r, still concentrates here. Each edge point contributes at most
  // two votes per radius, one per ray direction.
  double window_votes(int col, int row, int r) const noexcept;
};

// Each edge point votes at p + r*u and p - r*u for every radius (dark or
// bright rims alike), so the cost is O(edges * radii) rather than one vote
// per cell per edge.
HoughAccumulator hough_accumulate(const GrayImage& img, int r_min, int r_max);

// Votes normalized by the perfect-circle count 2*pi*r so radii compete
// fairly.
double circle_support(double votes, int radius) noexcept;

// Cell with the highest window_votes support (ties to the lowest
// (cy, cx, r)), or none if its window votes do not exceed half of 2*pi*r.
std::optional<Circle> best_circle(const HoughAccumulator& acc);

std::optional<Circle> locate_circle(const GrayImage& img, int r_min, int r_max);

}  // namespace slice_radon
