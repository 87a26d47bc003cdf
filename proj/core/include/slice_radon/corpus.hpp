#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "slice_radon/image.hpp"

namespace slice_radon {

enum class SignClass { end_restriction, speed_limit, other_negative };

std::string_view to_string(SignClass c) noexcept;
SignClass parse_sign_class(std::string_view label);
inline bool is_positive(SignClass c) noexcept { return c == SignClass::end_restriction; }

// Which template produced a corpus image; finer than SignClass.
enum class Template { striped_sign, speed_limit, slanted_speed_limit, uniform, noise };

std::string_view to_string(Template t) noexcept;
SignClass class_of(Template t) noexcept;

// Knobs for the synthetic stand-in for street crops: signs rendered at
// render_size, blurred, noised, then area-averaged down to target_size.
struct CorpusSpec {
  std::uint64_t seed = 1;
  int render_size = 40;
  int target_size = 20;
  double max_blur = 1.0;
  double max_noise = 0.1;
  // Share of speed-limit negatives drawn in italics (diagonal strokes).
  double slanted_share = 0.25;
  // Share of non-sign negatives that carry noise rather than a flat level.
  double noise_share = 0.5;
};

struct CorpusItem {
  std::string filename;
  Template kind;
  GrayImage image;
};

// Image `index` of the given template. Depends only on (spec, kind, index),
// so items can be produced in any order or in parallel.
CorpusItem make_corpus_item(const CorpusSpec& spec, Template kind, std::size_t index);

// Negative template for slot `index` of a negative class, honoring the
// slanted/noise shares deterministically.
Template negative_template(const CorpusSpec& spec, SignClass cls, std::size_t index);

struct ManifestEntry {
  std::string filename;
  SignClass label;
};

// labels.csv: one "filename,class_label" line per image, no header.
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);
void write_manifest(const std::filesystem::path& path, const std::vector<ManifestEntry>& entries);

struct CorpusPlan {
  std::size_t positives = 0;
  std::size_t speed_limits = 0;
  std::size_t other_negatives = 0;
};

// Writes PGMs plus labels.csv into `dir` (created if missing).
std::vector<ManifestEntry> write_corpus(const std::filesystem::path& dir, const CorpusSpec& spec,
                                        const CorpusPlan& plan, bool binary = true);

// In-memory variant of write_corpus.
std::vector<CorpusItem> build_corpus(const CorpusSpec& spec, const CorpusPlan& plan);

}  // namespace slice_radon
