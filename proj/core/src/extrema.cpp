#include "slice_radon/extrema.hpp"

#include <algorithm>

#include "slice_radon/error.hpp"

namespace slice_radon {

double peak_prominence(std::span<const double> signal, int index) {
  const double peak = signal[static_cast<std::size_t>(index)];
  const int n = static_cast<int>(signal.size());
  double left_min = peak;
  for (int i = index - 1; i >= 0; --i) {
    const double v = signal[static_cast<std::size_t>(i)];
    if (v > peak) break;
    left_min = std::min(left_min, v);
  }
  double right_min = peak;
  for (int i = index + 1; i < n; ++i) {
    const double v = signal[static_cast<std::size_t>(i)];
    if (v > peak) break;
    right_min = std::min(right_min, v);
  }
  return peak - std::max(left_min, right_min);
}

namespace {

void collect_peaks(std::span<const double> signal, bool negate, double min_prominence,
                   std::vector<Extremum>& out) {
  const int n = static_cast<int>(signal.size());
  std::vector<double> work(signal.begin(), signal.end());
  if (negate) {
    for (double& v : work) v = -v;
  }
  int i = 1;
  while (i < n - 1) {
    if (work[static_cast<std::size_t>(i - 1)] < work[static_cast<std::size_t>(i)]) {
      int end = i;
      while (end + 1 < n && work[static_cast<std::size_t>(end + 1)] == work[static_cast<std::size_t>(i)]) ++end;
      if (end + 1 < n && work[static_cast<std::size_t>(end + 1)] < work[static_cast<std::size_t>(i)]) {
        const int center = (i + end) / 2;
        const double prom = peak_prominence(work, center);
        if (prom > 0.0 && prom >= min_prominence) {
          out.push_back({center, signal[static_cast<std::size_t>(center)],
                         negate ? ExtremumKind::min : ExtremumKind::max, prom});
        }
      }
      i = end + 1;
    } else {
      ++i;
    }
  }
}

}  // namespace

std::vector<Extremum> find_extrema(const ProjectionProfile& profile, double min_prominence) {
  if (profile.values.size() < 3) {
    throw Error(Errc::profile_too_short, "need at least 3 samples, got " +
                                             std::to_string(profile.values.size()));
  }
  if (!(min_prominence > 0.0 && min_prominence <= 1.0)) {
    throw Error(Errc::invalid_argument, "min_prominence must be in (0, 1]");
  }
  std::vector<Extremum> out;
  collect_peaks(profile.values, false, min_prominence, out);
  collect_peaks(profile.values, true, min_prominence, out);
  std::sort(out.begin(), out.end(), [](const Extremum& a, const Extremum& b) {
    return a.index < b.index;
  });
  return out;
}

std::vector<Extremum> minima_only(const std::vector<Extremum>& extrema) {
  std::vector<Extremum> out;
  std::copy_if(extrema.begin(), extrema.end(), std::back_inserter(out),
               [](const Extremum& e) { return e.kind == ExtremumKind::min; });
  return out;
}

}  // namespace slice_radon
