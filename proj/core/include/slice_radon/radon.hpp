#pragma once

#include <span>
#include <vector>

#include "slice_radon/image.hpp"

namespace slice_radon {

// Brute-force discrete Radon transform, the reference the spectral path is
// checked against. Each pixel's signed distance
//   R = x cos(angle) + y sin(angle)
// (centered y-up coordinates) lands it in bin floor(R + num_bins/2 + 0.5),
// num_bins/2 using integer division. Pixels falling outside [0, num_bins)
// are dropped, so mass is conserved whenever num_bins covers the image
// diagonal.
std::vector<double> radon_direct(const GrayImage& img, double angle_deg, int num_bins);

// Sinogram rows, one per angle.
std::vector<std::vector<double>> sinogram_direct(const GrayImage& img,
                                                 std::span<const double> angles_deg,
                                                 int num_bins);

// Smallest bin count that holds every pixel at any angle.
int covering_bins(const GrayImage& img);

}  // namespace slice_radon
