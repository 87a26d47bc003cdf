// Command-line front end: synth | project | detect | eval | bench.
//
// Exit codes: detect returns 10 for a positive verdict and 0 for a negative
// one; every command returns 1 on error.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "slice_radon/bench.hpp"
#include "slice_radon/corpus.hpp"
#include "slice_radon/detector.hpp"
#include "slice_radon/error.hpp"
#include "slice_radon/evaluation.hpp"
#include "slice_radon/pgm.hpp"
#include "slice_radon/projection.hpp"
#include "slice_radon/radon.hpp"
#include "slice_radon/report.hpp"
#include "slice_radon/synth.hpp"

namespace sr = slice_radon;
namespace fs = std::filesystem;

namespace {

constexpr int kExitNegative = 0;
constexpr int kExitPositive = 10;
constexpr int kExitError = 1;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("SLICE_RADON_SEED"); env && *env) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw sr::Error(sr::Errc::invalid_argument,
                      std::string("SLICE_RADON_SEED is not an integer: ") + env);
    }
  }
  return 1;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw sr::Error(sr::Errc::io_error, "cannot write " + path);
  out << text;
  if (!out) throw sr::Error(sr::Errc::io_error, "short write to " + path);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sr::Error(sr::Errc::io_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Detector flags shared by detect and eval. Unset flags keep the value from
// --config or the library default.
struct DetectorFlags {
  std::string config;
  std::optional<std::string> backend;
  std::optional<bool> ramp;
  std::optional<double> prominence;
  std::optional<double> angle;
  std::optional<std::string> hough;
  std::optional<double> right_fraction;
  std::optional<int> pad;

  void attach(CLI::App* cmd) {
    cmd->add_option("--config", config, "Detector settings JSON (as printed by eval --json)");
    cmd->add_option("--backend", backend, "Spectral backend")->check(CLI::IsMember({"dft", "dct"}));
    cmd->add_flag("--ramp,!--no-ramp", ramp, "Apply the ramp filter to the slice");
    cmd->add_option("--prominence", prominence, "Minimum prominence of a decisive minimum")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--angle", angle, "Projection angle in degrees");
    cmd->add_option("--hough", hough, "Circle crop before projecting")
        ->check(CLI::IsMember({"on", "off", "auto"}));
    cmd->add_option("--right-fraction", right_fraction, "Tail of the profile searched for minima");
    cmd->add_option("--pad", pad, "Zero-padding factor")->check(CLI::PositiveNumber);
  }

  sr::DetectorSettings settings() const {
    sr::DetectorSettings s = config.empty() ? sr::DetectorSettings{}
                                            : sr::settings_from_json(read_text(config));
    if (backend) s.backend = sr::parse_backend(*backend);
    if (ramp) s.apply_ramp = *ramp;
    if (prominence) s.min_prominence = *prominence;
    if (angle) s.angle = *angle;
    if (hough) s.hough = sr::parse_hough_mode(*hough);
    if (right_fraction) s.right_fraction = *right_fraction;
    if (pad) s.pad_factor = *pad;
    return s;
  }
};

struct SynthArgs {
  std::string out;
  std::size_t count = 10;
  std::vector<std::string> classes{"end_restriction", "speed_limit", "other_negative"};
  std::optional<std::uint64_t> seed;
  int render_size = 40;
  int target_size = 20;
  double max_blur = 1.0;
  double max_noise = 0.1;
  bool ascii = false;
  std::string fixture;
  int size = 64;
  double stripe_angle = 45.0;
  bool ring = true;
  std::string digits = "60";
};

int run_synth(const SynthArgs& a) {
  if (!a.fixture.empty()) {
    sr::GrayImage img(1, 1);
    if (a.fixture == "stripes") {
      sr::SignSpec spec;
      spec.size = a.size;
      spec.stripe_angle = a.stripe_angle;
      spec.circle_border = a.ring;
      img = sr::synth_sign(spec);
    } else if (a.fixture == "uniform") {
      img = sr::GrayImage(a.size, a.size, 0.5);
    } else {
      sr::SpeedLimitSpec spec;
      spec.size = a.size;
      spec.digits = a.digits;
      img = sr::synth_speed_limit(spec);
    }
    sr::write_pgm_file(a.out, img, !a.ascii);
    return 0;
  }

  sr::CorpusSpec spec;
  spec.seed = resolve_seed(a.seed);
  spec.render_size = a.render_size;
  spec.target_size = a.target_size;
  spec.max_blur = a.max_blur;
  spec.max_noise = a.max_noise;
  sr::CorpusPlan plan;
  for (const auto& c : a.classes) {
    switch (sr::parse_sign_class(c)) {
      case sr::SignClass::end_restriction: plan.positives = a.count; break;
      case sr::SignClass::speed_limit: plan.speed_limits = a.count; break;
      case sr::SignClass::other_negative: plan.other_negatives = a.count; break;
    }
  }
  const auto entries = sr::write_corpus(a.out, spec, plan, !a.ascii);
  if (entries.empty()) std::cerr << "warning: corpus is empty; wrote an empty labels.csv\n";
  std::cerr << "wrote " << entries.size() << " images to " << a.out << " (seed " << spec.seed << ")\n";
  return 0;
}

struct ProjectArgs {
  std::string image;
  double angle = 45.0;
  std::string backend = "dct";
  bool ramp = true;
  int pad = 2;
  bool raw = false;
  std::string out;
  std::string slice_out;
};

int run_project(const ProjectArgs& a) {
  const auto img = sr::read_pgm_file(a.image);
  const auto backend = sr::parse_backend(a.backend);
  sr::ProjectionProfile profile;
  if (backend == sr::Backend::direct) {
    profile = sr::project_direct(img, a.angle, sr::covering_bins(img));
  } else {
    sr::ProjectionOptions options;
    options.pad_factor = a.pad;
    options.dct_padding = sr::DetectorSettings{}.dct_padding;
    profile = sr::project_cst(img, a.angle, backend, a.ramp, options);
    if (!a.slice_out.empty()) {
      auto slice = backend == sr::Backend::dft
                       ? sr::extract_slice(sr::dft2(img, a.pad), a.angle)
                       : sr::extract_slice(sr::dct2(img, a.pad, options.dct_padding), a.angle);
      if (a.ramp) slice = sr::ramp_filter(slice);
      write_text(a.slice_out, sr::slice_to_csv(slice));
    }
  }
  if (!a.raw) profile = sr::normalize_profile(profile);
  write_text(a.out, sr::profile_to_csv(profile));
  return 0;
}

int run_detect(const std::string& image, const DetectorFlags& flags, bool pretty) {
  const auto result = sr::detect_end_of_restriction(sr::read_pgm_file(image), flags.settings());
  std::cout << sr::to_json(result, pretty ? 2 : -1) << '\n';
  return result.positive ? kExitPositive : kExitNegative;
}

int run_eval(const std::string& dir, const DetectorFlags& flags, unsigned jobs, bool json_stdout,
             bool verdicts, const std::string& out) {
  const auto report = sr::evaluate_corpus(dir, flags.settings(), jobs);
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
  const std::string json = sr::to_json(report, 2, verdicts) + "\n";
  if (!out.empty()) write_text(out, json);
  std::cout << (json_stdout ? json : sr::format_table(report));
  return 0;
}

struct BenchArgs {
  std::vector<int> sizes{64, 128, 256};
  int angles = 180;
  std::string backend = "dft";
  int pad = 1;
  std::optional<std::uint64_t> seed;
  bool json = false;
  std::string out;
};

int run_bench(const BenchArgs& a) {
  const auto report = sr::run_bench(a.sizes, a.angles, sr::parse_backend(a.backend), a.pad,
                                    resolve_seed(a.seed));
  const std::string json = sr::to_json(report, 2) + "\n";
  if (!a.out.empty()) write_text(a.out, json);
  std::cout << (a.json ? json : sr::format_table(report));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radon projections via the central slice theorem, and a 45-degree stripe detector"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "slice_radon 0.1.0");

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Write a seeded synthetic corpus or a single fixture");
  synth_cmd->add_option("--out", synth.out, "Corpus directory, or image path with --fixture")->required();
  synth_cmd->add_option("--count", synth.count, "Images per selected class");
  synth_cmd->add_option("--classes", synth.classes, "Classes to generate")
      ->delimiter(',')
      ->check(CLI::IsMember({"end_restriction", "speed_limit", "other_negative"}));
  synth_cmd->add_option("--seed", synth.seed, "Seed (falls back to $SLICE_RADON_SEED, then 1)");
  synth_cmd->add_option("--render-size", synth.render_size, "Side of the rendered sign")
      ->check(CLI::PositiveNumber);
  synth_cmd->add_option("--target-size", synth.target_size, "Side after downscaling")
      ->check(CLI::PositiveNumber);
  synth_cmd->add_option("--max-blur", synth.max_blur, "Largest blur sigma in pixels")
      ->check(CLI::NonNegativeNumber);
  synth_cmd->add_option("--max-noise", synth.max_noise, "Largest noise sigma")
      ->check(CLI::NonNegativeNumber);
  synth_cmd->add_flag("--ascii", synth.ascii, "Write P2 instead of P5");
  synth_cmd->add_option("--fixture", synth.fixture, "Write one undegraded image instead of a corpus")
      ->check(CLI::IsMember({"stripes", "uniform", "speed_limit"}));
  synth_cmd->add_option("--size", synth.size, "Fixture side")->check(CLI::Range(8, 4096));
  synth_cmd->add_option("--stripe-angle", synth.stripe_angle, "Stripe normal for --fixture stripes");
  synth_cmd->add_flag("--ring,!--no-ring", synth.ring, "Draw the sign rim on --fixture stripes");
  synth_cmd->add_option("--digits", synth.digits, "Digits for --fixture speed_limit");

  ProjectArgs project;
  auto* project_cmd = app.add_subcommand("project", "Write the normalized projection profile as CSV");
  project_cmd->add_option("image", project.image, "PGM image")->required();
  project_cmd->add_option("--angle", project.angle, "Projection angle in degrees");
  project_cmd->add_option("--backend", project.backend, "Projection backend")
      ->check(CLI::IsMember({"dft", "dct", "direct"}));
  project_cmd->add_flag("--ramp,!--no-ramp", project.ramp, "Apply the ramp filter to the slice");
  project_cmd->add_option("--pad", project.pad, "Zero-padding factor")->check(CLI::PositiveNumber);
  project_cmd->add_flag("--raw", project.raw, "Skip min-max normalization");
  project_cmd->add_option("--out", project.out, "CSV path (default stdout)");
  project_cmd->add_option("--slice-out", project.slice_out, "Also dump the spectral slice as CSV");

  std::string detect_image;
  bool detect_pretty = false;
  DetectorFlags detect_flags;
  auto* detect_cmd = app.add_subcommand("detect", "Classify one image; exit 10 if positive, 0 if not");
  detect_cmd->add_option("image", detect_image, "PGM image")->required();
  detect_cmd->add_flag("--pretty", detect_pretty, "Indent the JSON output");
  detect_flags.attach(detect_cmd);

  std::string eval_dir, eval_out;
  unsigned eval_jobs = 1;
  bool eval_json = false, eval_verdicts = false;
  DetectorFlags eval_flags;
  auto* eval_cmd = app.add_subcommand("eval", "Per-class detection rates over a corpus directory");
  eval_cmd->add_option("corpus", eval_dir, "Directory with labels.csv")->required();
  eval_cmd->add_option("--jobs", eval_jobs, "Worker threads (0 = all cores)");
  eval_cmd->add_flag("--json", eval_json, "Print the JSON report instead of the table");
  eval_cmd->add_flag("--verdicts", eval_verdicts, "Include per-image verdicts in the JSON report");
  eval_cmd->add_option("--out", eval_out, "Also write the JSON report here");
  eval_flags.attach(eval_cmd);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time direct and CST sinograms");
  bench_cmd->add_option("--sizes", bench.sizes, "Image sides")->delimiter(',');
  bench_cmd->add_option("--angles", bench.angles, "Angles in [0, 180)")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--backend", bench.backend, "Spectral backend")
      ->check(CLI::IsMember({"dft", "dct"}));
  bench_cmd->add_option("--pad", bench.pad, "Zero-padding factor")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed, "Seed (falls back to $SLICE_RADON_SEED, then 1)");
  bench_cmd->add_flag("--json", bench.json, "Print the JSON report instead of the table");
  bench_cmd->add_option("--out", bench.out, "Also write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitError;
  }

  try {
    if (*synth_cmd) return run_synth(synth);
    if (*project_cmd) return run_project(project);
    if (*detect_cmd) return run_detect(detect_image, detect_flags, detect_pretty);
    if (*eval_cmd) return run_eval(eval_dir, eval_flags, eval_jobs, eval_json, eval_verdicts, eval_out);
    if (*bench_cmd) return run_bench(bench);
  } catch (const sr::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
