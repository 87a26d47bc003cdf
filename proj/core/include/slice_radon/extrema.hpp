#pragma once

#include <span>
#include <vector>

#include "slice_radon/projection.hpp"

namespace slice_radon {

enum class ExtremumKind { min, max };

struct Extremum {
  int index = 0;
  double value = 0.0;
  ExtremumKind kind = ExtremumKind::max;
  double prominence = 0.0;
};

// Topographic prominence of the peak at `index` (a strict local maximum or
// the center of a plateau): height above the higher of the two lowest points
// reached before the signal climbs above the peak on either side.
double peak_prominence(std::span<const double> signal, int index);

// Strict local maxima and minima (plateaus reported at their center; runs
// touching either end are not extrema) whose prominence reaches
// min_prominence. Minima are peaks of the negated signal. Sorted by index.
std::vector<Extremum> find_extrema(const ProjectionProfile& profile, double min_prominence);

std::vector<Extremum> minima_only(const std::vector<Extremum>& extrema);

}  // namespace slice_radon
