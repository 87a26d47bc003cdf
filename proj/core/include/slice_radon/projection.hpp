#pragma once

#include <span>
#include <vector>

#include "slice_radon/image.hpp"
#include "slice_radon/slice.hpp"
#include "slice_radon/spectrum.hpp"

namespace slice_radon {

// Projection u_p(R, angle): values[i] holds the line integral at signed
// distance R = i - origin from the image origin pixel.
struct ProjectionProfile {
  std::vector<double> values;
  double origin = 0.0;
  double angle = 0.0;
  Backend backend = Backend::dft;
  bool filtered = false;
  bool normalized = false;

  std::size_t size() const noexcept { return values.size(); }
};

struct ProjectionOptions {
  int pad_factor = 2;
  Interp interp = Interp::bilinear;
  // Margin fill for the DCT frame; the DFT frame is always zero-padded.
  PadMode dct_padding = PadMode::edge;
};

// Spectrum -> central slice -> optional ramp -> 1D inverse. Axis-aligned DFT
// and DCT projections come out in pixel-mass units (column or row sums).
ProjectionProfile project_cst(const GrayImage& img, double angle_deg, Backend backend,
                              bool apply_ramp, const ProjectionOptions& options = {});

// project_cst for many angles, transforming the image once.
std::vector<ProjectionProfile> sinogram_cst(const GrayImage& img, std::span<const double> angles_deg,
                                            Backend backend, bool apply_ramp,
                                            const ProjectionOptions& options = {});

// The direct-Radon profile in the same container, for side-by-side output.
ProjectionProfile project_direct(const GrayImage& img, double angle_deg, int num_bins);

// Profiles whose range is below this (in pixel-mass units) count as flat.
inline constexpr double kFlatProfileRange = 1e-9;

// Min-max rescale to [0, 1]; a flat profile becomes all 0.5.
ProjectionProfile normalize_profile(const ProjectionProfile& profile);

}  // namespace slice_radon
