#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "slice_radon/spectrum.hpp"

namespace slice_radon {

struct BenchRow {
  int n = 0;
  int num_angles = 0;
  double direct_seconds = 0.0;
  double cst_seconds = 0.0;
  // Largest per-angle relative L2 distance between the two sinograms.
  double max_rel_error = 0.0;
};

struct BenchReport {
  Backend backend = Backend::dft;
  int pad_factor = 1;
  std::vector<BenchRow> rows;
};

// Evenly spaced angles k * 180 / count for k in [0, count).
std::vector<double> even_angles(int count);

// Times a full sinogram of a seeded random n x n image computed by
// radon_direct and by sinogram_cst (unfiltered, zero-padded frame). The
// direct sinogram uses as many bins as the CST profiles have samples, with
// the same origin, so the rows line up bin for bin.
BenchRow bench_sinogram(int n, std::span<const double> angles_deg, Backend backend,
                        int pad_factor = 1, std::uint64_t seed = 1);

// One row per size; sizes must be powers of two in [32, 1024].
BenchReport run_bench(std::span<const int> sizes, int num_angles, Backend backend,
                      int pad_factor = 1, std::uint64_t seed = 1);

}  // namespace slice_radon
