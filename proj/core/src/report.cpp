#include "slice_radon/report.hpp"

#include <cstdio>

#include "json.hpp"
#include "slice_radon/error.hpp"

namespace slice_radon {

using nlohmann::json;

namespace {

json settings_json(const DetectorSettings& s) {
  return {
      {"angle", s.angle},
      {"min_prominence", s.min_prominence},
      {"backend", to_string(s.backend)},
      {"apply_ramp", s.apply_ramp},
      {"right_fraction", s.right_fraction},
      {"pad_factor", s.pad_factor},
      {"dct_padding", to_string(s.dct_padding)},
      {"hough", to_string(s.hough)},
      {"hough_min_side", s.hough_min_side},
      {"hough_r_min_fraction", s.hough_r_min_fraction},
      {"hough_r_max_fraction", s.hough_r_max_fraction},
      {"hough_crop_scale", s.hough_crop_scale},
  };
}

// Missing keys keep their defaults so older or hand-written configs load.
DetectorSettings settings_from(const json& j) {
  DetectorSettings s;
  s.angle = j.value("angle", s.angle);
  s.min_prominence = j.value("min_prominence", s.min_prominence);
  if (j.contains("backend")) s.backend = parse_backend(j.at("backend").get<std::string>());
  s.apply_ramp = j.value("apply_ramp", s.apply_ramp);
  s.right_fraction = j.value("right_fraction", s.right_fraction);
  s.pad_factor = j.value("pad_factor", s.pad_factor);
  if (j.contains("dct_padding")) s.dct_padding = parse_pad_mode(j.at("dct_padding").get<std::string>());
  if (j.contains("hough")) s.hough = parse_hough_mode(j.at("hough").get<std::string>());
  s.hough_min_side = j.value("hough_min_side", s.hough_min_side);
  s.hough_r_min_fraction = j.value("hough_r_min_fraction", s.hough_r_min_fraction);
  s.hough_r_max_fraction = j.value("hough_r_max_fraction", s.hough_r_max_fraction);
  s.hough_crop_scale = j.value("hough_crop_scale", s.hough_crop_scale);
  return s;
}

template <typename F>
auto parse_with(std::string_view text, std::string_view what, F&& build) {
  try {
    return build(json::parse(text));
  } catch (const json::exception& e) {
    throw Error(Errc::invalid_argument, "malformed " + std::string(what) + " JSON: " + e.what());
  }
}

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::string to_json(const DetectionResult& result, int indent) {
  json minima = json::array();
  for (const auto& m : result.minima) {
    minima.push_back({{"index", m.index}, {"prominence", m.prominence}});
  }
  json circle = nullptr;
  if (result.circle) {
    circle = {{"cx", result.circle->cx}, {"cy", result.circle->cy}, {"r", result.circle->radius}};
  }
  const json j = {
      {"positive", result.positive},
      {"score", result.decision_score},
      {"minima", minima},
      {"circle", circle},
      {"backend", to_string(result.profile.backend)},
  };
  return j.dump(indent);
}

std::string to_json(const DetectorSettings& settings, int indent) {
  return settings_json(settings).dump(indent);
}

DetectorSettings settings_from_json(std::string_view text) {
  return parse_with(text, "settings", [](const json& j) { return settings_from(j); });
}

std::string to_json(const CorpusReport& report, int indent, bool with_verdicts) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"class_label", to_string(r.label)},
                    {"positives_detected", r.positives_detected},
                    {"total", r.total},
                    {"rate", r.rate}});
  }
  json j = {
      {"rows", rows},
      {"false_positive_rate", report.false_positive_rate},
      {"wall_time", report.wall_time},
      {"config", settings_json(report.config)},
      {"warnings", report.warnings},
  };
  if (with_verdicts) {
    json verdicts = json::array();
    for (const auto& v : report.verdicts) {
      verdicts.push_back({{"filename", v.filename},
                          {"class_label", to_string(v.label)},
                          {"positive", v.positive},
                          {"score", v.score}});
    }
    j["verdicts"] = verdicts;
  }
  return j.dump(indent);
}

CorpusReport corpus_report_from_json(std::string_view text) {
  return parse_with(text, "corpus report", [](const json& j) {
    CorpusReport report;
    for (const auto& r : j.at("rows")) {
      report.rows.push_back({parse_sign_class(r.at("class_label").get<std::string>()),
                             r.at("positives_detected").get<std::size_t>(),
                             r.at("total").get<std::size_t>(), r.at("rate").get<double>()});
    }
    report.false_positive_rate = j.at("false_positive_rate").get<double>();
    report.wall_time = j.at("wall_time").get<double>();
    report.config = settings_from(j.at("config"));
    report.warnings = j.value("warnings", std::vector<std::string>{});
    if (j.contains("verdicts")) {
      for (const auto& v : j.at("verdicts")) {
        report.verdicts.push_back({v.at("filename").get<std::string>(),
                                   parse_sign_class(v.at("class_label").get<std::string>()),
                                   v.at("positive").get<bool>(), v.at("score").get<double>()});
      }
    }
    return report;
  });
}

std::string to_json(const BenchReport& report, int indent) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"n", r.n},
                    {"num_angles", r.num_angles},
                    {"direct_seconds", r.direct_seconds},
                    {"cst_seconds", r.cst_seconds},
                    {"max_rel_error", r.max_rel_error}});
  }
  const json j = {
      {"backend", to_string(report.backend)},
      {"pad_factor", report.pad_factor},
      {"rows", rows},
  };
  return j.dump(indent);
}

BenchReport bench_report_from_json(std::string_view text) {
  return parse_with(text, "bench report", [](const json& j) {
    BenchReport report;
    report.backend = parse_backend(j.at("backend").get<std::string>());
    report.pad_factor = j.at("pad_factor").get<int>();
    for (const auto& r : j.at("rows")) {
      report.rows.push_back({r.at("n").get<int>(), r.at("num_angles").get<int>(),
                             r.at("direct_seconds").get<double>(), r.at("cst_seconds").get<double>(),
                             r.at("max_rel_error").get<double>()});
    }
    return report;
  });
}

std::string profile_to_csv(const ProjectionProfile& profile) {
  std::string out = "index,value\n";
  for (std::size_t i = 0; i < profile.values.size(); ++i) {
    out += std::to_string(i) + ',' + number(profile.values[i]) + '\n';
  }
  return out;
}

std::string slice_to_csv(const SpectrumSlice& slice) {
  std::string out;
  if (std::holds_alternative<std::vector<cplx>>(slice.values)) {
    out = "index,re,im\n";
    const auto& v = slice.complex_values();
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += std::to_string(i) + ',' + number(v[i].real()) + ',' + number(v[i].imag()) + '\n';
    }
  } else {
    out = "index,value\n";
    const auto& v = slice.real_values();
    for (std::size_t i = 0; i < v.size(); ++i) out += std::to_string(i) + ',' + number(v[i]) + '\n';
  }
  return out;
}

std::string format_table(const CorpusReport& report) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "%-18s %10s %22s\n", "Class", "Examples", "Detected as positive");
  out += line;
  for (const auto& r : report.rows) {
    std::snprintf(line, sizeof line, "%-18s %10zu %14zu (%5.1f%%)\n",
                  std::string(to_string(r.label)).c_str(), r.total, r.positives_detected,
                  100.0 * r.rate);
    out += line;
  }
  std::snprintf(line, sizeof line, "False-positive rate: %.2f%%\nWall time: %.3f s\n",
                100.0 * report.false_positive_rate, report.wall_time);
  out += line;
  if (!report.warnings.empty()) {
    out += "Warnings: " + std::to_string(report.warnings.size()) + "\n";
  }
  return out;
}

std::string format_table(const BenchReport& report) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "%6s %8s %12s %12s %9s %14s\n", "N", "angles", "direct [s]",
                "cst [s]", "speedup", "max rel err");
  out += line;
  for (const auto& r : report.rows) {
    const double speedup = r.cst_seconds > 0.0 ? r.direct_seconds / r.cst_seconds : 0.0;
    std::snprintf(line, sizeof line, "%6d %8d %12.6f %12.6f %8.2fx %14.3e\n", r.n, r.num_angles,
                  r.direct_seconds, r.cst_seconds, speedup, r.max_rel_error);
    out += line;
  }
  return out;
}

}  // namespace slice_radon
