#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "slice_radon/corpus.hpp"
#include "slice_radon/detector.hpp"

namespace slice_radon {

struct ClassRow {
  SignClass label = SignClass::end_restriction;
  std::size_t positives_detected = 0;
  std::size_t total = 0;
  double rate = 0.0;
};

struct ImageVerdict {
  std::string filename;
  SignClass label = SignClass::end_restriction;
  bool positive = false;
  double score = 0.0;
};

struct CorpusReport {
  // One row per class present in the corpus, in SignClass order.
  std::vector<ClassRow> rows;
  // Detected share over every image whose class is negative.
  double false_positive_rate = 0.0;
  double wall_time = 0.0;
  DetectorSettings config;
  // Manifest/file mismatches that were skipped.
  std::vector<std::string> warnings;
  // Per-image outcomes in manifest order.
  std::vector<ImageVerdict> verdicts;

  const ClassRow* row(SignClass label) const noexcept;
};

struct LabeledImage {
  std::string filename;
  SignClass label = SignClass::end_restriction;
  GrayImage image;
};

// Runs the detector on every image with `jobs` worker threads (0 picks the
// hardware concurrency). The report does not depend on `jobs`.
CorpusReport evaluate_images(const std::vector<LabeledImage>& images,
                             const DetectorSettings& settings, unsigned jobs = 1);

// Same for a corpus directory holding labels.csv and the PGM files it lists.
// Listed files that are missing or unreadable, and PGM files the manifest
// does not mention, become warnings. Throws EmptyCorpus when nothing is left
// to evaluate.
CorpusReport evaluate_corpus(const std::filesystem::path& dir, const DetectorSettings& settings,
                             unsigned jobs = 1);

// Calls task(i) for i in [0, count) across `jobs` threads. Exceptions from
// tasks are rethrown on the calling thread after all workers have stopped.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task);

}  // namespace slice_radon
