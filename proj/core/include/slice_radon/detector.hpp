#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "slice_radon/extrema.hpp"
#include "slice_radon/hough.hpp"
#include "slice_radon/image.hpp"
#include "slice_radon/projection.hpp"

namespace slice_radon {

enum class HoughMode {
  off,
  on,
  // On when the shorter image side exceeds DetectorSettings::hough_min_side,
  // i.e. for full frames but not for pre-cropped sign patches.
  automatic,
};

std::string_view to_string(HoughMode m) noexcept;
HoughMode parse_hough_mode(std::string_view name);

// Defaults are calibrated on the seeded 20x20 corpus (see the acceptance
// suite) and on the 64x64 striped fixtures.
struct DetectorSettings {
  double angle = 45.0;
  double min_prominence = 0.5;
  Backend backend = Backend::dct;
  bool apply_ramp = true;
  double right_fraction = 0.5;
  int pad_factor = 2;
  PadMode dct_padding = PadMode::dark;
  HoughMode hough = HoughMode::automatic;
  int hough_min_side = 32;
  // Radius search range as fractions of min(width, height) / 2.
  double hough_r_min_fraction = 0.25;
  double hough_r_max_fraction = 1.0;
  // Half-side of the square cropped around a found circle, as a fraction of
  // its radius. 1 keeps the rim; about 0.7 keeps only the face interior.
  double hough_crop_scale = 0.7;
};

struct DetectionResult {
  bool positive = false;
  ProjectionProfile profile;
  std::vector<Extremum> minima;
  std::optional<Circle> circle;
  double decision_score = 0.0;
};

// Optional Hough crop, projection at settings.angle, normalization, minima
// search. Positive iff a minimum of prominence >= min_prominence lies in the
// last right_fraction of the profile (largest signed distances);
// decision_score is the largest such prominence.
DetectionResult detect_end_of_restriction(const GrayImage& img,
                                          const DetectorSettings& settings = {});

}  // namespace slice_radon
