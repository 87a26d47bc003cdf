#include "slice_radon/corpus.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "slice_radon/error.hpp"
#include "slice_radon/pgm.hpp"
#include "slice_radon/synth.hpp"

namespace slice_radon {

std::string_view to_string(SignClass c) noexcept {
  switch (c) {
    case SignClass::end_restriction: return "end_restriction";
    case SignClass::speed_limit: return "speed_limit";
    case SignClass::other_negative: return "other_negative";
  }
  return "unknown";
}

SignClass parse_sign_class(std::string_view label) {
  for (auto c : {SignClass::end_restriction, SignClass::speed_limit, SignClass::other_negative}) {
    if (label == to_string(c)) return c;
  }
  throw Error(Errc::invalid_argument, "unknown class label '" + std::string(label) + "'");
}

std::string_view to_string(Template t) noexcept {
  switch (t) {
    case Template::striped_sign: return "striped_sign";
    case Template::speed_limit: return "speed_limit";
    case Template::slanted_speed_limit: return "slanted_speed_limit";
    case Template::uniform: return "uniform";
    case Template::noise: return "noise";
  }
  return "unknown";
}

SignClass class_of(Template t) noexcept {
  switch (t) {
    case Template::striped_sign: return SignClass::end_restriction;
    case Template::speed_limit:
    case Template::slanted_speed_limit: return SignClass::speed_limit;
    case Template::uniform:
    case Template::noise: return SignClass::other_negative;
  }
  return SignClass::other_negative;
}

namespace {

std::mt19937_64 item_rng(std::uint64_t seed, unsigned stream, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), stream,
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Degradation draw_degradation(const CorpusSpec& spec, std::mt19937_64& rng) {
  Degradation d;
  d.blur_sigma = uniform(rng, 0.0, spec.max_blur);
  d.noise_sigma = uniform(rng, 0.0, spec.max_noise);
  d.target_size = spec.target_size;
  d.seed = rng();
  return d;
}

std::string item_name(Template kind, std::size_t index) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s_%05zu.pgm", std::string(to_string(class_of(kind))).c_str(), index);
  return buf;
}

}  // namespace

CorpusItem make_corpus_item(const CorpusSpec& spec, Template kind, std::size_t index) {
  auto rng = item_rng(spec.seed, static_cast<unsigned>(kind), index);
  const int render = spec.render_size;

  auto image = [&]() -> GrayImage {
    switch (kind) {
      case Template::striped_sign: {
        SignSpec s;
        s.size = render;
        s.num_stripes = 5;
        s.stripe_angle = 45.0 + uniform(rng, -3.0, 3.0);
        s.duty = uniform(rng, 0.4, 0.6);
        const double band = uniform(rng, 0.6, 0.8) * 2.0 * s.face_radius();
        s.stripe_width = s.duty * band / s.num_stripes;
        s.foreground = uniform(rng, 0.05, 0.35);
        s.background = uniform(rng, 0.7, 0.95);
        s.circle_border = true;
        return degrade(synth_sign(s), draw_degradation(spec, rng));
      }
      case Template::speed_limit:
      case Template::slanted_speed_limit: {
        static constexpr std::array<const char*, 8> kLimits = {"30", "50", "60", "70",
                                                               "80", "100", "120", "40"};
        SpeedLimitSpec s;
        s.size = render;
        s.digits = kLimits[std::uniform_int_distribution<std::size_t>(0, kLimits.size() - 1)(rng)];
        s.foreground = uniform(rng, 0.05, 0.3);
        s.background = uniform(rng, 0.7, 0.95);
        s.ring_intensity = uniform(rng, 0.2, 0.5);
        s.ring_width = render * uniform(rng, 0.06, 0.1);
        s.stroke_width = render * uniform(rng, 0.06, 0.09);
        s.slant = kind == Template::slanted_speed_limit ? uniform(rng, 12.0, 20.0) : 0.0;
        return degrade(synth_speed_limit(s), draw_degradation(spec, rng));
      }
      case Template::uniform:
        return GrayImage(spec.target_size, spec.target_size, uniform(rng, 0.05, 0.95));
      case Template::noise: {
        const GrayImage flat(spec.target_size, spec.target_size, uniform(rng, 0.2, 0.8));
        Degradation d;
        d.noise_sigma = uniform(rng, 0.02, std::max(0.02, spec.max_noise));
        d.seed = rng();
        return degrade(flat, d);
      }
    }
    throw Error(Errc::invalid_argument, "unknown template");
  }();
  return {item_name(kind, index), kind, std::move(image)};
}

Template negative_template(const CorpusSpec& spec, SignClass cls, std::size_t index) {
  auto rng = item_rng(spec.seed, 100 + static_cast<unsigned>(cls), index);
  const double u = uniform(rng, 0.0, 1.0);
  switch (cls) {
    case SignClass::speed_limit:
      return u < spec.slanted_share ? Template::slanted_speed_limit : Template::speed_limit;
    case SignClass::other_negative:
      return u < spec.noise_share ? Template::noise : Template::uniform;
    case SignClass::end_restriction:
      break;
  }
  return Template::striped_sign;
}

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open manifest " + path.string());
  std::vector<ManifestEntry> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw Error(Errc::invalid_argument,
                  path.string() + ":" + std::to_string(line_no) + ": expected filename,class_label");
    }
    entries.push_back({line.substr(0, comma), parse_sign_class(line.substr(comma + 1))});
  }
  return entries;
}

void write_manifest(const std::filesystem::path& path, const std::vector<ManifestEntry>& entries) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(Errc::io_error, "cannot write manifest " + path.string());
  for (const auto& e : entries) out << e.filename << ',' << to_string(e.label) << '\n';
  if (!out) throw Error(Errc::io_error, "short write to " + path.string());
}

std::vector<CorpusItem> build_corpus(const CorpusSpec& spec, const CorpusPlan& plan) {
  std::vector<CorpusItem> items;
  items.reserve(plan.positives + plan.speed_limits + plan.other_negatives);
  for (std::size_t i = 0; i < plan.positives; ++i) {
    items.push_back(make_corpus_item(spec, Template::striped_sign, i));
  }
  for (std::size_t i = 0; i < plan.speed_limits; ++i) {
    items.push_back(make_corpus_item(spec, negative_template(spec, SignClass::speed_limit, i), i));
  }
  for (std::size_t i = 0; i < plan.other_negatives; ++i) {
    items.push_back(make_corpus_item(spec, negative_template(spec, SignClass::other_negative, i), i));
  }
  return items;
}

std::vector<ManifestEntry> write_corpus(const std::filesystem::path& dir, const CorpusSpec& spec,
                                        const CorpusPlan& plan, bool binary) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(Errc::io_error, "cannot create " + dir.string() + ": " + ec.message());
  std::vector<ManifestEntry> entries;
  for (const auto& item : build_corpus(spec, plan)) {
    write_pgm_file(dir / item.filename, item.image, binary);
    entries.push_back({item.filename, class_of(item.kind)});
  }
  write_manifest(dir / "labels.csv", entries);
  return entries;
}

}  // namespace slice_radon
