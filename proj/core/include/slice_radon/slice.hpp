#pragma once

#include <variant>
#include <vector>

#include "slice_radon/spectrum.hpp"

namespace slice_radon {

enum class Interp { nearest, bilinear };

// One line of a 2D spectrum through its origin.
//
// DFT backend: complex samples at unit bin spacing, centered indexing
// (sample k is frequency k - length/2 cycles per frame).
// DCT backend: real samples starting at the (0, 0) coefficient and moving
// outward, sample k is DCT index k. The full slice is the even reflection of
// these samples (see symmetric_extension); the inverse DCT-III of the
// one-sided half is the inverse of that even sequence.
struct SpectrumSlice {
  Backend backend = Backend::dft;
  double angle = 0.0;
  int frame = 1;                // padded frame side in pixels
  double sample_spacing = 1.0;  // spectral bins per sample
  double origin = 0.0;          // profile index of R = 0 after inversion
  std::variant<std::vector<cplx>, std::vector<double>> values;

  std::size_t length() const noexcept;
  const std::vector<cplx>& complex_values() const { return std::get<std::vector<cplx>>(values); }
  const std::vector<double>& real_values() const { return std::get<std::vector<double>>(values); }
};

// Unit vector (cos, sin) with exact components at multiples of 90 degrees.
struct Direction {
  double c;
  double s;
};
Direction direction(double angle_deg);

// Throws AngleOutOfRange unless 0 <= angle < 180.
void check_angle(double angle_deg);

SpectrumSlice extract_slice(const ComplexSpectrum2D& spectrum, double angle_deg,
                            Interp interp = Interp::bilinear);

// DCT coefficients index non-negative frequencies only and are even in each
// axis, so angles past 90 degrees sample the mirrored quadrant (|cos|, sin).
SpectrumSlice extract_slice(const DctSpectrum2D& spectrum, double angle_deg,
                            Interp interp = Interp::bilinear);

// Weights sample k by |f_k| scaled so the largest weight is 1; DC becomes 0.
SpectrumSlice ramp_filter(const SpectrumSlice& slice);

// Weights by |f_k|^power (normalized), used to check ramp composition.
SpectrumSlice weight_by_frequency(const SpectrumSlice& slice, int power);

std::vector<double> symmetric_extension(const SpectrumSlice& slice);

struct SliceInverse {
  std::vector<double> values;  // index i holds signed distance R = i - origin
  double origin = 0.0;
  double max_imag = 0.0;  // DFT backend diagnostic; 0 for DCT
};

// DFT backend: inverse DFT with 1/N, real part kept. DCT backend: DCT-III.
SliceInverse inverse_slice(const SpectrumSlice& slice);

}  // namespace slice_radon
