#include "slice_radon/projection.hpp"

#include <algorithm>
#include <cmath>

#include "slice_radon/error.hpp"
#include "slice_radon/radon.hpp"

namespace slice_radon {

namespace {

ProjectionProfile profile_from_slice(SpectrumSlice slice, double angle_deg, Backend backend,
                                     bool apply_ramp, double scale) {
  if (apply_ramp) slice = ramp_filter(slice);
  auto inv = inverse_slice(slice);
  if (scale != 1.0) {
    for (double& v : inv.values) v *= scale;
  }
  ProjectionProfile p;
  p.values = std::move(inv.values);
  p.origin = inv.origin;
  p.angle = angle_deg;
  p.backend = backend;
  p.filtered = apply_ramp;
  return p;
}

// The ramp weight is zero at DC, but bilinear sampling near the origin would
// still pick up part of the DC bin, so it is removed before slicing.
ComplexSpectrum2D without_dc(const ComplexSpectrum2D& spectrum) {
  std::vector<cplx> bins(spectrum.bins().begin(), spectrum.bins().end());
  const auto center = static_cast<std::size_t>(spectrum.size() / 2);
  bins[center * spectrum.size() + center] = 0.0;
  return ComplexSpectrum2D(spectrum.size(), std::move(bins));
}

DctSpectrum2D without_dc(const DctSpectrum2D& spectrum) {
  std::vector<double> coeffs(spectrum.coeffs().begin(), spectrum.coeffs().end());
  coeffs[0] = 0.0;
  return DctSpectrum2D(spectrum.size(), std::move(coeffs), spectrum.origin_x(), spectrum.origin_y());
}

}  // namespace

std::vector<ProjectionProfile> sinogram_cst(const GrayImage& img, std::span<const double> angles_deg,
                                            Backend backend, bool apply_ramp,
                                            const ProjectionOptions& options) {
  for (double a : angles_deg) check_angle(a);
  std::vector<ProjectionProfile> rows;
  rows.reserve(angles_deg.size());
  switch (backend) {
    case Backend::dft: {
      auto spectrum = dft2(img, options.pad_factor);
      if (apply_ramp) spectrum = without_dc(spectrum);
      for (double a : angles_deg) {
        rows.push_back(profile_from_slice(extract_slice(spectrum, a, options.interp), a, backend,
                                          apply_ramp, 1.0));
      }
      break;
    }
    case Backend::dct: {
      auto spectrum = dct2(img, options.pad_factor, options.dct_padding);
      if (apply_ramp) spectrum = without_dc(spectrum);
      // The orthonormal DC basis along the summed axis carries 1/sqrt(n).
      const double scale = std::sqrt(static_cast<double>(spectrum.size()));
      for (double a : angles_deg) {
        rows.push_back(profile_from_slice(extract_slice(spectrum, a, options.interp), a, backend,
                                          apply_ramp, scale));
      }
      break;
    }
    case Backend::direct:
      throw Error(Errc::invalid_argument, "project_cst needs a spectral backend");
  }
  return rows;
}

ProjectionProfile project_cst(const GrayImage& img, double angle_deg, Backend backend,
                              bool apply_ramp, const ProjectionOptions& options) {
  const double angles[] = {angle_deg};
  return std::move(sinogram_cst(img, angles, backend, apply_ramp, options).front());
}

ProjectionProfile project_direct(const GrayImage& img, double angle_deg, int num_bins) {
  ProjectionProfile p;
  p.values = radon_direct(img, angle_deg, num_bins);
  p.origin = num_bins / 2;
  p.angle = angle_deg;
  p.backend = Backend::direct;
  return p;
}

ProjectionProfile normalize_profile(const ProjectionProfile& profile) {
  ProjectionProfile out = profile;
  out.normalized = true;
  if (out.values.empty()) return out;
  const auto [lo_it, hi_it] = std::minmax_element(out.values.begin(), out.values.end());
  const double lo = *lo_it, hi = *hi_it;
  const double range = hi - lo;
  // Spectral round-off leaves ~1e-16 relative ripple on flat profiles, and a
  // ramp-filtered flat profile is nothing but that ripple around zero.
  const double magnitude = std::max(std::abs(lo), std::abs(hi));
  if (!(range > 1e-12 * magnitude) || range < kFlatProfileRange) {
    std::fill(out.values.begin(), out.values.end(), 0.5);
    return out;
  }
  for (double& v : out.values) v = (v - lo) / range;
  return out;
}

}  // namespace slice_radon
