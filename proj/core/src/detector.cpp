#include "slice_radon/detector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "slice_radon/error.hpp"

namespace slice_radon {

std::string_view to_string(HoughMode m) noexcept {
  switch (m) {
    case HoughMode::off: return "off";
    case HoughMode::on: return "on";
    case HoughMode::automatic: return "auto";
  }
  return "unknown";
}

HoughMode parse_hough_mode(std::string_view name) {
  for (auto m : {HoughMode::off, HoughMode::on, HoughMode::automatic}) {
    if (name == to_string(m)) return m;
  }
  throw Error(Errc::invalid_argument, "unknown hough mode '" + std::string(name) + "'");
}

namespace {

bool wants_hough(const GrayImage& img, const DetectorSettings& s) {
  switch (s.hough) {
    case HoughMode::off: return false;
    case HoughMode::on: return true;
    case HoughMode::automatic: return std::min(img.width(), img.height()) > s.hough_min_side;
  }
  return false;
}

}  // namespace

DetectionResult detect_end_of_restriction(const GrayImage& img, const DetectorSettings& settings) {
  if (img.width() < 8 || img.height() < 8) {
    throw Error(Errc::image_too_small, "detector needs at least 8x8, got " +
                                           std::to_string(img.width()) + "x" +
                                           std::to_string(img.height()));
  }
  if (!(settings.right_fraction > 0.0 && settings.right_fraction <= 1.0)) {
    throw Error(Errc::invalid_argument, "right_fraction must be in (0, 1]");
  }

  DetectionResult result;
  const GrayImage* region = &img;
  std::optional<GrayImage> cropped;
  if (wants_hough(img, settings)) {
    const int half = std::min(img.width(), img.height()) / 2;
    const int r_min = std::max(1, static_cast<int>(std::lround(settings.hough_r_min_fraction * half)));
    const int r_max = std::max(r_min, static_cast<int>(std::lround(settings.hough_r_max_fraction * half)));
    result.circle = locate_circle(img, r_min, r_max);
    if (result.circle) {
      const auto& c = *result.circle;
      const int h = static_cast<int>(std::lround(settings.hough_crop_scale * c.radius));
      cropped = crop(img, c.cx - h, c.cy - h, 2 * h + 1, 2 * h + 1);
      if (cropped->width() >= 8 && cropped->height() >= 8) region = &*cropped;
    }
  }

  ProjectionOptions options;
  options.pad_factor = settings.pad_factor;
  options.dct_padding = settings.dct_padding;
  result.profile = normalize_profile(
      project_cst(*region, settings.angle, settings.backend, settings.apply_ramp, options));
  result.minima = minima_only(find_extrema(result.profile, settings.min_prominence));

  const auto n = static_cast<double>(result.profile.size());
  const double right_start = (1.0 - settings.right_fraction) * n;
  for (const auto& m : result.minima) {
    if (m.index >= right_start) {
      result.decision_score = std::max(result.decision_score, m.prominence);
    }
  }
  result.positive = result.decision_score >= settings.min_prominence && result.decision_score > 0.0;
  return result;
}

}  // namespace slice_radon
