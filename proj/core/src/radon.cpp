#include "slice_radon/radon.hpp"

#include <cmath>

#include "slice_radon/error.hpp"
#include "slice_radon/slice.hpp"

namespace slice_radon {

std::vector<double> radon_direct(const GrayImage& img, double angle_deg, int num_bins) {
  check_angle(angle_deg);
  if (num_bins < 1) throw Error(Errc::invalid_argument, "num_bins must be >= 1");
  const auto [c, s] = direction(angle_deg);
  const double shift = num_bins / 2 + 0.5;
  std::vector<double> bins(static_cast<std::size_t>(num_bins), 0.0);
  for (int row = 0; row < img.height(); ++row) {
    const double ys = centered_y(row, img.height()) * s + shift;
    for (int col = 0; col < img.width(); ++col) {
      const auto b = static_cast<long>(std::floor(centered_x(col, img.width()) * c + ys));
      if (b >= 0 && b < num_bins) bins[static_cast<std::size_t>(b)] += img(col, row);
    }
  }
  return bins;
}

std::vector<std::vector<double>> sinogram_direct(const GrayImage& img,
                                                 std::span<const double> angles_deg,
                                                 int num_bins) {
  std::vector<std::vector<double>> rows;
  rows.reserve(angles_deg.size());
  for (double a : angles_deg) rows.push_back(radon_direct(img, a, num_bins));
  return rows;
}

int covering_bins(const GrayImage& img) {
  const double half_diag = std::hypot(img.width() / 2 + 1.0, img.height() / 2 + 1.0);
  return 2 * static_cast<int>(std::ceil(half_diag)) + 2;
}

}  // namespace slice_radon
