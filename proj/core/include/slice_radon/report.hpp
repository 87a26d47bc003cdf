#pragma once

#include <string>
#include <string_view>

#include "slice_radon/bench.hpp"
#include "slice_radon/detector.hpp"
#include "slice_radon/evaluation.hpp"
#include "slice_radon/projection.hpp"
#include "slice_radon/slice.hpp"

namespace slice_radon {

// {"positive", "score", "minima": [{"index", "prominence"}],
//  "circle": {"cx", "cy", "r"} | null, "backend"}
std::string to_json(const DetectionResult& result, int indent = -1);

std::string to_json(const DetectorSettings& settings, int indent = -1);
DetectorSettings settings_from_json(std::string_view text);

// Per-image verdicts are included only when `with_verdicts` is set.
std::string to_json(const CorpusReport& report, int indent = -1, bool with_verdicts = false);
CorpusReport corpus_report_from_json(std::string_view text);

std::string to_json(const BenchReport& report, int indent = -1);
BenchReport bench_report_from_json(std::string_view text);

// "index,value" header plus one line per sample.
std::string profile_to_csv(const ProjectionProfile& profile);
// "index,re,im" for complex slices, "index,value" for real ones.
std::string slice_to_csv(const SpectrumSlice& slice);

// Fixed-width tables for terminals.
std::string format_table(const CorpusReport& report);
std::string format_table(const BenchReport& report);

}  // namespace slice_radon
