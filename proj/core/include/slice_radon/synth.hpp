#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "slice_radon/image.hpp"

namespace slice_radon {

// Striped "end of restriction" sign. `stripe_angle` is the direction across
// the stripes (their common normal), counterclockwise from +x in the y-up
// frame, so a projection at the same angle resolves every stripe. Stripes are
// centered on the sign and clipped to the sign face (radius size/2 - 3).
struct SignSpec {
  int size = 64;
  int num_stripes = 5;
  double stripe_angle = 45.0;
  double stripe_width = 4.0;
  double duty = 0.5;
  double foreground = 0.1;
  double background = 0.9;
  bool circle_border = true;

  double period() const noexcept { return stripe_width / duty; }
  double face_radius() const noexcept { return size / 2.0 - 3.0; }
};

// Speed-limit-like negative: a ring plus seven-segment digit strokes.
// A nonzero `slant` (degrees) shears the digits into italics, which turns
// the vertical strokes into diagonals.
struct SpeedLimitSpec {
  int size = 64;
  std::string digits = "60";
  double foreground = 0.1;
  double background = 0.9;
  double ring_intensity = 0.35;
  double ring_width = 3.0;
  double stroke_width = 4.0;
  double slant = 0.0;
};

struct Degradation {
  double blur_sigma = 0.0;
  double noise_sigma = 0.0;
  std::optional<int> target_size;
  std::uint64_t seed = 0;
};

GrayImage synth_sign(const SignSpec& spec);
GrayImage synth_speed_limit(const SpeedLimitSpec& spec);

// Gaussian blur (kernel truncated at 3 sigma, edges clamped), then clipped
// additive Gaussian noise, then area-average downscale to target x target.
GrayImage degrade(const GrayImage& img, const Degradation& d);

}  // namespace slice_radon
