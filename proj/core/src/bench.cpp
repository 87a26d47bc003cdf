#include "slice_radon/bench.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <string>

#include "slice_radon/error.hpp"
#include "slice_radon/projection.hpp"
#include "slice_radon/radon.hpp"

namespace slice_radon {

namespace {

GrayImage random_image(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> px(static_cast<std::size_t>(n) * n);
  for (double& v : px) v = unit(rng);
  return GrayImage(n, n, std::move(px));
}

double relative_l2(const std::vector<double>& got, const std::vector<double>& want) {
  double diff = 0.0, norm = 0.0;
  for (std::size_t i = 0; i < want.size(); ++i) {
    const double g = i < got.size() ? got[i] : 0.0;
    diff += (g - want[i]) * (g - want[i]);
    norm += want[i] * want[i];
  }
  return norm > 0.0 ? std::sqrt(diff / norm) : std::sqrt(diff);
}

}  // namespace

std::vector<double> even_angles(int count) {
  if (count < 1) throw Error(Errc::invalid_argument, "need at least one angle");
  std::vector<double> angles(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) angles[static_cast<std::size_t>(k)] = 180.0 * k / count;
  return angles;
}

BenchRow bench_sinogram(int n, std::span<const double> angles_deg, Backend backend, int pad_factor,
                        std::uint64_t seed) {
  using clock = std::chrono::steady_clock;
  const GrayImage img = random_image(n, seed);

  ProjectionOptions options;
  options.pad_factor = pad_factor;
  options.dct_padding = PadMode::zero;
  const auto t0 = clock::now();
  const auto cst = sinogram_cst(img, angles_deg, backend, false, options);
  const auto t1 = clock::now();
  const int bins = static_cast<int>(cst.front().size());
  const auto direct = sinogram_direct(img, angles_deg, bins);
  const auto t2 = clock::now();

  BenchRow row;
  row.n = n;
  row.num_angles = static_cast<int>(angles_deg.size());
  row.cst_seconds = std::chrono::duration<double>(t1 - t0).count();
  row.direct_seconds = std::chrono::duration<double>(t2 - t1).count();
  for (std::size_t a = 0; a < angles_deg.size(); ++a) {
    row.max_rel_error = std::max(row.max_rel_error, relative_l2(cst[a].values, direct[a]));
  }
  return row;
}

BenchReport run_bench(std::span<const int> sizes, int num_angles, Backend backend, int pad_factor,
                      std::uint64_t seed) {
  if (backend == Backend::direct) throw Error(Errc::invalid_argument, "bench needs a spectral backend");
  for (int n : sizes) {
    if (n < 32 || n > 1024 || !is_power_of_two(static_cast<std::size_t>(n))) {
      throw Error(Errc::invalid_argument,
                  "bench size " + std::to_string(n) + " is not a power of two in [32, 1024]");
    }
  }
  const auto angles = even_angles(num_angles);
  BenchReport report;
  report.backend = backend;
  report.pad_factor = pad_factor;
  for (int n : sizes) report.rows.push_back(bench_sinogram(n, angles, backend, pad_factor, seed));
  return report;
}

}  // namespace slice_radon
