#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "slice_radon/detector.hpp"
#include "slice_radon/error.hpp"
#include "slice_radon/extrema.hpp"
#include "slice_radon/hough.hpp"
#include "slice_radon/projection.hpp"
#include "slice_radon/radon.hpp"
#include "slice_radon/synth.hpp"

using namespace slice_radon;

namespace {

ProjectionProfile profile_of(std::vector<double> values) {
  ProjectionProfile p;
  p.values = std::move(values);
  return p;
}

std::vector<int> indices(const std::vector<Extremum>& xs) {
  std::vector<int> out;
  for (const auto& x : xs) out.push_back(x.index);
  return out;
}

}  // namespace

TEST_CASE("normalize_profile examples") {
  const auto a = normalize_profile(profile_of({2, 4, 6}));
  CHECK(a.values == std::vector<double>{0.0, 0.5, 1.0});
  CHECK(a.normalized);
  CHECK(normalize_profile(profile_of({5, 5, 5})).values == std::vector<double>{0.5, 0.5, 0.5});
  const auto b = normalize_profile(profile_of({3, -1, 7, 2}));
  CHECK(normalize_profile(b).values == b.values);
}

TEST_CASE("find_extrema examples") {
  const auto alt = find_extrema(profile_of({0, 1, 0, 1, 0}), 0.5);
  REQUIRE(alt.size() == 3);
  CHECK(alt[0].index == 1);
  CHECK(alt[0].kind == ExtremumKind::max);
  CHECK(alt[1].index == 2);
  CHECK(alt[1].kind == ExtremumKind::min);
  CHECK(alt[2].index == 3);
  CHECK(indices(minima_only(alt)) == std::vector<int>{2});

  CHECK(find_extrema(profile_of({0, 0.25, 0.5, 0.75, 1}), 0.01).empty());
  CHECK(indices(find_extrema(profile_of({1, 0, 0, 0, 1}), 0.5)) == std::vector<int>{2});

  CHECK_THROWS_AS(find_extrema(profile_of({0, 1}), 0.5), Error);
  CHECK_THROWS_AS(find_extrema(profile_of({0, 1, 0}), 0.0), Error);
  CHECK_THROWS_AS(find_extrema(profile_of({0, 1, 0}), 1.5), Error);
}

TEST_CASE("prominence agrees with a brute-force walk") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> x(40);
    for (double& v : x) v = unit(rng);
    for (const auto& e : find_extrema(normalize_profile(profile_of(x)), 1e-9)) {
      auto y = normalize_profile(profile_of(x)).values;
      if (e.kind == ExtremumKind::min) {
        for (double& v : y) v = -v;
      }
      CHECK(e.prominence == doctest::Approx(oracle::prominence(y, e.index)).epsilon(1e-12));
    }
  }
}

TEST_CASE("find_extrema count never grows with the prominence threshold") {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> noise(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<double> x(64);
    double walk = 0.0;
    for (double& v : x) v = walk += noise(rng);
    const auto p = normalize_profile(profile_of(x));
    std::size_t previous = find_extrema(p, 0.001).size();
    for (double t = 0.01; t <= 1.0; t += 0.01) {
      const std::size_t n = find_extrema(p, t).size();
      CHECK(n <= previous);
      previous = n;
    }
  }
}

TEST_CASE("project_cst on a uniform image matches column sums at 0 degrees") {
  const GrayImage flat(16, 16, 0.5);
  const auto p = project_cst(flat, 0.0, Backend::dft, false);
  const auto direct = radon_direct(flat, 0.0, static_cast<int>(p.size()));
  REQUIRE(p.size() == direct.size());
  for (std::size_t i = 0; i < p.size(); ++i) CHECK(std::abs(p.values[i] - direct[i]) < 1e-6);
  CHECK(p.origin == 16.0);
  CHECK_FALSE(p.filtered);
}

TEST_CASE("DCT projections come out in mass units at axis-aligned angles") {
  const auto img = oracle::random_image(16, 16, 3);
  ProjectionOptions options;
  options.pad_factor = 2;
  options.dct_padding = PadMode::zero;
  for (double angle : {0.0, 90.0}) {
    const auto p = project_cst(img, angle, Backend::dct, false, options);
    const auto direct = radon_direct(img, angle, static_cast<int>(p.size()));
    CHECK(p.origin == 16.0);
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(std::abs(p.values[i] - direct[i]) < 1e-9);
  }
}

TEST_CASE("sinogram_cst rows equal single projections") {
  const auto img = oracle::random_image(16, 16, 6);
  const double angles[] = {0.0, 45.0, 100.0};
  for (Backend b : {Backend::dft, Backend::dct}) {
    const auto rows = sinogram_cst(img, angles, b, true);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(rows[i].values == project_cst(img, angles[i], b, true).values);
    }
  }
  CHECK_THROWS_AS(project_cst(img, 45.0, Backend::direct, false), Error);
}

TEST_CASE("profile orientation: larger index means larger signed distance") {
  for (Backend b : {Backend::dft, Backend::dct}) {
    const auto right = normalize_profile(project_cst(fixture::band(32, 45.0, 6.0, 9.0), 45.0, b, false));
    const auto left = normalize_profile(project_cst(fixture::band(32, 45.0, -9.0, -6.0), 45.0, b, false));
    const auto argmin = [](const ProjectionProfile& p, bool upper) {
      // Search the half that holds the image so padding troughs do not interfere.
      const auto mid = static_cast<std::ptrdiff_t>(p.origin);
      const auto first = p.values.begin() + (upper ? mid : mid - 16);
      const auto last = p.values.begin() + (upper ? mid + 16 : mid);
      return static_cast<double>(std::min_element(first, last) - p.values.begin());
    };
    CHECK(argmin(right, true) - right.origin == doctest::Approx(7.5).epsilon(0.3));
    CHECK(argmin(left, false) - left.origin == doctest::Approx(-7.5).epsilon(0.3));
  }
}

TEST_CASE("five-stripe fixture: five minima at the stripe distances") {
  const auto img = fixture::five_stripes();
  const auto p = normalize_profile(project_cst(img, 45.0, Backend::dft, false));
  const auto minima = minima_only(find_extrema(p, 0.1));
  REQUIRE(minima.size() == 5);
  // Stripes are centered on the continuous image center, which sits half a
  // pixel from the origin pixel on both axes: R_k = 8 (k - 2) - 0.5 sqrt(2).
  for (int k = 0; k < 5; ++k) {
    const double r = 8.0 * (k - 2) - 0.5 * std::sqrt(2.0);
    CHECK(std::abs(minima[static_cast<std::size_t>(k)].index - (p.origin + r)) <= 2.0);
  }
  for (double angle : {0.0, 90.0}) {
    const auto q = normalize_profile(project_cst(img, angle, Backend::dft, false));
    CHECK(minima_only(find_extrema(q, 0.1)).size() < 5);
  }
}

TEST_CASE("detector examples") {
  SignSpec spec;
  const auto sign = degrade(synth_sign(spec), Degradation{1.0, 0.03, std::nullopt, 5});
  const auto pos = detect_end_of_restriction(sign);
  CHECK(pos.positive);
  CHECK_FALSE(pos.minima.empty());
  CHECK(pos.profile.normalized);
  CHECK(pos.profile.angle == 45.0);

  const auto flat = detect_end_of_restriction(GrayImage(64, 64, 0.5));
  CHECK_FALSE(flat.positive);
  CHECK(flat.minima.empty());
  CHECK(flat.decision_score == 0.0);

  for (const char* digits : {"60", "30", "100"}) {
    SpeedLimitSpec speed;
    speed.digits = digits;
    CHECK_FALSE(detect_end_of_restriction(synth_speed_limit(speed)).positive);
  }

  try {
    detect_end_of_restriction(GrayImage(7, 20, 0.5));
    FAIL("expected ImageTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::image_too_small);
  }
}

TEST_CASE("detector: positive implies minima, and the verdict follows the threshold") {
  const auto img = fixture::five_stripes();
  const auto r = detect_end_of_restriction(img);
  REQUIRE(r.positive);
  CHECK(r.decision_score >= DetectorSettings{}.min_prominence);
  DetectorSettings strict;
  strict.min_prominence = std::min(1.0, r.decision_score + 1e-6);
  CHECK_FALSE(detect_end_of_restriction(img, strict).positive);
}

TEST_CASE("detector: both backends accept the undegraded fixture") {
  for (Backend b : {Backend::dft, Backend::dct}) {
    DetectorSettings s;
    s.backend = b;
    CHECK(detect_end_of_restriction(fixture::five_stripes(), s).positive);
    CHECK(detect_end_of_restriction(fixture::five_stripes(45.0, true), s).positive);
  }
}

TEST_CASE("detector: only 45 degree stripes are accepted") {
  for (bool ring : {false, true}) {
    CHECK(detect_end_of_restriction(fixture::five_stripes(45.0, ring)).positive);
    CHECK_FALSE(detect_end_of_restriction(fixture::five_stripes(0.0, ring)).positive);
    CHECK_FALSE(detect_end_of_restriction(fixture::five_stripes(90.0, ring)).positive);
  }
}

TEST_CASE("detector: verdict and normalized profile survive affine brightness maps") {
  const auto base = degrade(synth_sign(SignSpec{}), Degradation{0.8, 0.04, 20, 3});
  const auto ref = detect_end_of_restriction(base);
  for (auto [a, b] : {std::pair{0.5, 0.1}, std::pair{0.8, 0.0}, std::pair{0.3, 0.6}}) {
    const auto r = detect_end_of_restriction(affine(base, a, b));
    CHECK(r.positive == ref.positive);
    REQUIRE(r.profile.size() == ref.profile.size());
    for (std::size_t i = 0; i < r.profile.size(); ++i) {
      CHECK(std::abs(r.profile.values[i] - ref.profile.values[i]) <= 1e-9);
    }
  }
}

TEST_CASE("detector settings validation") {
  DetectorSettings s;
  s.right_fraction = 0.0;
  CHECK_THROWS_AS(detect_end_of_restriction(fixture::five_stripes(), s), Error);
  CHECK(parse_hough_mode("auto") == HoughMode::automatic);
  CHECK(to_string(HoughMode::off) == "off");
}

TEST_CASE("locate_circle examples") {
  const auto one = fixture::ring(64, 64, 32, 32, 10, 0.6);
  const auto c = locate_circle(one, 4, 32);
  REQUIRE(c);
  CHECK(std::abs(c->cx - 32) <= 1);
  CHECK(std::abs(c->cy - 32) <= 1);
  CHECK(std::abs(c->radius - 10) <= 1);

  CHECK_FALSE(locate_circle(GrayImage(64, 64, 0.7), 4, 32));

  const auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::invalid_argument;
  };
  CHECK(code([&] { locate_circle(one, 0, 10); }) == Errc::bad_radius_range);
  CHECK(code([&] { locate_circle(one, 12, 10); }) == Errc::bad_radius_range);
  CHECK(code([&] { locate_circle(one, 4, 33); }) == Errc::bad_radius_range);
}

TEST_CASE("locate_circle prefers the stronger of two rings") {
  auto two = [](double c8, double c12) {
    const auto a = fixture::ring(64, 64, 16, 16, 8, c8);
    const auto b = fixture::ring(64, 64, 42, 40, 12, c12);
    std::vector<double> px(a.size());
    for (std::size_t i = 0; i < px.size(); ++i) px[i] = a.pixels()[i] + b.pixels()[i] - 0.8;
    return GrayImage(64, 64, px);
  };
  const auto equal = locate_circle(two(0.5, 0.5), 4, 20);
  REQUIRE(equal);
  const bool first = std::abs(equal->cx - 16) <= 1 && std::abs(equal->radius - 8) <= 1;
  const bool second = std::abs(equal->cx - 42) <= 1 && std::abs(equal->radius - 12) <= 1;
  CHECK((first || second));

  const auto strong8 = locate_circle(two(0.6, 0.15), 4, 20);
  REQUIRE(strong8);
  CHECK(std::abs(strong8->radius - 8) <= 1);
  const auto strong12 = locate_circle(two(0.15, 0.6), 4, 20);
  REQUIRE(strong12);
  CHECK(std::abs(strong12->radius - 12) <= 1);
}

TEST_CASE("locate_circle matches the exhaustive accumulator on 16x16 images") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    const double r = 3.0 + 4.0 * unit(rng);
    const auto img = fixture::ring(16, 16, 5.0 + 6.0 * unit(rng), 5.0 + 6.0 * unit(rng), r,
                                   0.3 + 0.5 * unit(rng));
    const auto got = locate_circle(img, 2, 8);
    const auto want = oracle::exhaustive_hough(img, 2, 8);
    REQUIRE(got.has_value() == want.has_value());
    if (got) {
      CHECK(got->cx == want->cx);
      CHECK(got->cy == want->cy);
      CHECK(got->radius == want->radius);
      CHECK(got->score == want->score);
    }
  }
}
