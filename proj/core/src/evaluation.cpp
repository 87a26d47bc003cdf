#include "slice_radon/evaluation.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <optional>
#include <set>
#include <thread>

#include "slice_radon/error.hpp"
#include "slice_radon/pgm.hpp"

namespace slice_radon {

namespace fs = std::filesystem;

const ClassRow* CorpusReport::row(SignClass label) const noexcept {
  for (const auto& r : rows) {
    if (r.label == label) return &r;
  }
  return nullptr;
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(count, 1)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

struct Outcome {
  std::optional<ImageVerdict> verdict;
  std::string warning;
};

CorpusReport aggregate(std::vector<Outcome>& outcomes, const DetectorSettings& settings,
                       std::vector<std::string> warnings) {
  CorpusReport report;
  report.config = settings;
  report.warnings = std::move(warnings);
  for (auto& o : outcomes) {
    if (!o.warning.empty()) report.warnings.push_back(std::move(o.warning));
    if (o.verdict) report.verdicts.push_back(std::move(*o.verdict));
  }
  if (report.verdicts.empty()) {
    throw Error(Errc::empty_corpus, "no evaluable images (" +
                                        std::to_string(report.warnings.size()) + " skipped)");
  }

  std::size_t negatives = 0, false_positives = 0;
  for (auto label : {SignClass::end_restriction, SignClass::speed_limit, SignClass::other_negative}) {
    ClassRow row{label, 0, 0, 0.0};
    for (const auto& v : report.verdicts) {
      if (v.label != label) continue;
      ++row.total;
      if (v.positive) ++row.positives_detected;
    }
    if (row.total == 0) continue;
    row.rate = static_cast<double>(row.positives_detected) / static_cast<double>(row.total);
    if (!is_positive(label)) {
      negatives += row.total;
      false_positives += row.positives_detected;
    }
    report.rows.push_back(row);
  }
  report.false_positive_rate =
      negatives == 0 ? 0.0 : static_cast<double>(false_positives) / static_cast<double>(negatives);
  return report;
}

ImageVerdict judge(const std::string& filename, SignClass label, const GrayImage& img,
                   const DetectorSettings& settings) {
  const auto result = detect_end_of_restriction(img, settings);
  return {filename, label, result.positive, result.decision_score};
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

CorpusReport evaluate_images(const std::vector<LabeledImage>& images,
                             const DetectorSettings& settings, unsigned jobs) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Outcome> outcomes(images.size());
  parallel_for(images.size(), jobs, [&](std::size_t i) {
    const auto& item = images[i];
    try {
      outcomes[i].verdict = judge(item.filename, item.label, item.image, settings);
    } catch (const Error& e) {
      outcomes[i].warning = item.filename + ": " + e.what();
    }
  });
  auto report = aggregate(outcomes, settings, {});
  report.wall_time = seconds_since(start);
  return report;
}

CorpusReport evaluate_corpus(const fs::path& dir, const DetectorSettings& settings, unsigned jobs) {
  const auto start = std::chrono::steady_clock::now();
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Error(Errc::io_error, "not a directory: " + dir.string());
  const fs::path manifest = dir / "labels.csv";
  if (!fs::exists(manifest, ec)) throw Error(Errc::empty_corpus, "no labels.csv in " + dir.string());
  const auto entries = read_manifest(manifest);

  std::vector<std::string> warnings;
  std::set<std::string> listed;
  for (const auto& e : entries) listed.insert(e.filename);
  std::vector<std::string> unlisted;
  for (const auto& f : fs::directory_iterator(dir)) {
    if (f.is_regular_file() && f.path().extension() == ".pgm" &&
        !listed.contains(f.path().filename().string())) {
      unlisted.push_back(f.path().filename().string());
    }
  }
  std::sort(unlisted.begin(), unlisted.end());
  for (const auto& name : unlisted) warnings.push_back(name + ": not listed in labels.csv");

  std::vector<Outcome> outcomes(entries.size());
  parallel_for(entries.size(), jobs, [&](std::size_t i) {
    const auto& e = entries[i];
    try {
      outcomes[i].verdict = judge(e.filename, e.label, read_pgm_file(dir / e.filename), settings);
    } catch (const Error& err) {
      outcomes[i].warning = e.filename + ": " + err.what();
    }
  });
  auto report = aggregate(outcomes, settings, std::move(warnings));
  report.wall_time = seconds_since(start);
  return report;
}

}  // namespace slice_radon
