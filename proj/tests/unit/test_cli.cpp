#ifdef SLICE_RADON_CLI_PATH

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const fs::path capture = fs::temp_directory_path() /
                           ("slice_radon_cli_" + std::to_string(std::random_device{}()) + ".txt");
  const std::string cmd = env + " '" SLICE_RADON_CLI_PATH "' " + args + " > '" + capture.string() + "' 2>&1";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(capture);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  fs::remove(capture);
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Scratch {
  fs::path dir = fs::temp_directory_path() / ("slice_radon_cli_dir_" + std::to_string(std::random_device{}()));
  Scratch() { fs::create_directories(dir); }
  ~Scratch() { fs::remove_all(dir); }
  std::string operator/(const std::string& name) const { return "'" + (dir / name).string() + "'"; }
};

std::vector<std::vector<double>> parse_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("cli: detect exit codes") {
  Scratch s;
  REQUIRE(run("synth --fixture stripes --no-ring --out " + (s / "pos.pgm")).code == 0);
  REQUIRE(run("synth --fixture uniform --out " + (s / "flat.pgm")).code == 0);

  const auto pos = run("detect " + (s / "pos.pgm"));
  CHECK(pos.code == 10);
  CHECK(pos.out.find("\"positive\":true") != std::string::npos);
  CHECK(run("detect " + (s / "flat.pgm")).code == 0);
  CHECK(run("detect " + (s / "missing.pgm")).code == 1);

  const auto bad_angle = run("detect --angle 200 " + (s / "pos.pgm"));
  CHECK(bad_angle.code == 1);
  CHECK(bad_angle.out.find("AngleOutOfRange") != std::string::npos);
}

TEST_CASE("cli: project writes a profile with the five stripe minima") {
  Scratch s;
  REQUIRE(run("synth --fixture stripes --no-ring --out " + (s / "pos.pgm")).code == 0);
  const auto r = run("project --backend dft --no-ramp " + (s / "pos.pgm"));
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("index,value\n", 0) == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 128);
  std::vector<double> v;
  for (const auto& row : rows) v.push_back(row[1]);
  int minima = 0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    // A clear stripe trough: lowest point within four samples on each side.
    bool lowest = v[i] < 0.5;
    for (std::size_t j = i - std::min<std::size_t>(i, 4); j <= std::min(v.size() - 1, i + 4); ++j) {
      if (j != i && v[j] <= v[i]) lowest = false;
    }
    if (lowest && i > 32 && i < 96) ++minima;
  }
  CHECK(minima == 5);
}

TEST_CASE("cli: constant image projects to a flat 0.5 profile along the axes") {
  Scratch s;
  REQUIRE(run("synth --fixture uniform --size 32 --out " + (s / "flat.pgm")).code == 0);
  for (const char* angle : {"0", "90"}) {
    const auto r = run(std::string("project --backend dct --angle ") + angle + " " + (s / "flat.pgm"));
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE_FALSE(rows.empty());
    for (const auto& row : rows) CHECK(row[1] == 0.5);
  }
}

TEST_CASE("cli: synth is seeded and reproducible") {
  Scratch s;
  CHECK(run("synth --count 3 --seed 9 --out " + (s / "a")).code == 0);
  CHECK(run("synth --count 3 --seed 9 --out " + (s / "b")).code == 0);
  CHECK(run("synth --count 3 --out " + (s / "c"), "SLICE_RADON_SEED=9").code == 0);
  CHECK(run("synth --count 3 --seed 10 --out " + (s / "d")).code == 0);
  std::size_t files = 0;
  bool any_differs = false;
  for (const auto& entry : fs::directory_iterator(s.dir / "a")) {
    const auto name = entry.path().filename();
    CHECK(slurp(entry.path()) == slurp(s.dir / "b" / name));
    CHECK(slurp(entry.path()) == slurp(s.dir / "c" / name));
    if (name != "labels.csv" && slurp(entry.path()) != slurp(s.dir / "d" / name)) any_differs = true;
    ++files;
  }
  CHECK(files == 10);
  CHECK(any_differs);
}

TEST_CASE("cli: synth with zero count writes an empty manifest and eval rejects it") {
  Scratch s;
  const auto r = run("synth --count 0 --out " + (s / "empty"));
  CHECK(r.code == 0);
  CHECK(r.out.find("warning") != std::string::npos);
  CHECK(fs::exists(s.dir / "empty" / "labels.csv"));
  const auto e = run("eval " + (s / "empty"));
  CHECK(e.code == 1);
  CHECK(e.out.find("EmptyCorpus") != std::string::npos);
}

TEST_CASE("cli: eval prints JSON with per-class rows") {
  Scratch s;
  REQUIRE(run("synth --count 2 --seed 4 --out " + (s / "corpus")).code == 0);
  const auto r = run("eval --json --jobs 2 " + (s / "corpus"));
  CHECK(r.code == 0);
  CHECK(r.out.find("\"false_positive_rate\"") != std::string::npos);
  CHECK(r.out.find("end_restriction") != std::string::npos);
}

TEST_CASE("cli: bad usage exits 1") {
  CHECK(run("").code == 1);
  CHECK(run("detect").code == 1);
  CHECK(run("bench --sizes 48").code == 1);
  CHECK(run("--help").code == 0);
}

#endif
