#include "slice_radon/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "slice_radon/error.hpp"

namespace slice_radon {

namespace {

constexpr int kSupersample = 8;

bool in_unit_range(double v) noexcept { return v >= 0.0 && v <= 1.0; }

// Fraction of each pixel's area for which `inside(x, y)` holds, with (x, y)
// in the y-up frame centered on the continuous image center.
template <typename Pred>
std::vector<double> coverage(int size, Pred inside) {
  std::vector<double> cov(static_cast<std::size_t>(size) * size, 0.0);
  const double half = size / 2.0;
  constexpr double step = 1.0 / kSupersample;
  for (int row = 0; row < size; ++row) {
    const double y_base = (size - 1 - row) - half;
    for (int col = 0; col < size; ++col) {
      const double x_base = col - half;
      int hits = 0;
      for (int sy = 0; sy < kSupersample; ++sy) {
        const double y = y_base + (sy + 0.5) * step;
        for (int sx = 0; sx < kSupersample; ++sx) {
          if (inside(x_base + (sx + 0.5) * step, y)) ++hits;
        }
      }
      cov[static_cast<std::size_t>(row) * size + col] =
          static_cast<double>(hits) / (kSupersample * kSupersample);
    }
  }
  return cov;
}

void paint(std::vector<double>& img, const std::vector<double>& cov, double value) {
  for (std::size_t i = 0; i < img.size(); ++i) img[i] += (value - img[i]) * cov[i];
}

std::vector<double> ring_coverage(int size, double radius, double width) {
  return coverage(size, [=](double x, double y) {
    return std::abs(std::hypot(x, y) - radius) <= width / 2.0;
  });
}

struct Segment {
  double x0, y0, x1, y1;
};

double distance_to_segment(double x, double y, const Segment& s) {
  const double dx = s.x1 - s.x0, dy = s.y1 - s.y0;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0.0 ? ((x - s.x0) * dx + (y - s.y0) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(x - s.x0 - t * dx, y - s.y0 - t * dy);
}

// Seven-segment masks, bit order a b c d e f g.
constexpr std::array<unsigned, 10> kDigitSegments = {
    0b1111110, 0b0110000, 0b1101101, 0b1111001, 0b0110011,
    0b1011011, 0b1011111, 0b1110000, 0b1111111, 0b1111011,
};

void append_digit(std::vector<Segment>& out, int digit, double cx, double w, double h) {
  const double l = cx - w / 2, r = cx + w / 2, t = h / 2, b = -h / 2;
  const std::array<Segment, 7> seg = {{
      {l, t, r, t},  // a
      {r, 0, r, t},  // b
      {r, b, r, 0},  // c
      {l, b, r, b},  // d
      {l, b, l, 0},  // e
      {l, 0, l, t},  // f
      {l, 0, r, 0},  // g
  }};
  const unsigned mask = kDigitSegments[static_cast<std::size_t>(digit)];
  for (int i = 0; i < 7; ++i) {
    if (mask & (1u << (6 - i))) out.push_back(seg[static_cast<std::size_t>(i)]);
  }
}

}  // namespace

GrayImage synth_sign(const SignSpec& spec) {
  if (spec.size < 1) throw Error(Errc::invalid_argument, "sign size must be positive");
  if (spec.num_stripes < 0) throw Error(Errc::invalid_argument, "negative stripe count");
  if (!in_unit_range(spec.foreground) || !in_unit_range(spec.background)) {
    throw Error(Errc::invalid_argument, "intensities must lie in [0,1]");
  }

  std::vector<double> img(static_cast<std::size_t>(spec.size) * spec.size, spec.background);
  if (spec.num_stripes > 0) {
    if (!(spec.duty > 0.0 && spec.duty < 1.0) || !(spec.stripe_width > 0.0)) {
      throw Error(Errc::invalid_argument, "stripe width must be positive and duty in (0,1)");
    }
    if (!(spec.foreground < spec.background)) {
      throw Error(Errc::invalid_argument, "stripes must be darker than the background");
    }
    const double face = spec.face_radius();
    if (face <= 0.0 || spec.num_stripes * spec.period() > 2.0 * face) {
      throw Error(Errc::spec_too_dense, std::to_string(spec.num_stripes) + " stripes of period " +
                                            std::to_string(spec.period()) +
                                            " do not fit a face of radius " + std::to_string(face));
    }
    const double theta = spec.stripe_angle * std::numbers::pi / 180.0;
    const double c = std::cos(theta), s = std::sin(theta);
    const double half_width = spec.stripe_width / 2.0;
    const double period = spec.period();
    const double first = -(spec.num_stripes - 1) / 2.0 * period;
    const int n = spec.num_stripes;
    const auto stripes = coverage(spec.size, [=](double x, double y) {
      if (x * x + y * y >= face * face) return false;
      const double u = x * c + y * s - first;
      const double k = std::round(u / period);
      return k >= 0 && k < n && std::abs(u - k * period) <= half_width;
    });
    paint(img, stripes, spec.foreground);
  }
  if (spec.circle_border) {
    paint(img, ring_coverage(spec.size, spec.size / 2.0 - 2.0, 2.0), spec.foreground);
  }
  return GrayImage(spec.size, spec.size, std::move(img));
}

GrayImage synth_speed_limit(const SpeedLimitSpec& spec) {
  if (spec.size < 8) throw Error(Errc::invalid_argument, "speed-limit template needs size >= 8");
  if (!in_unit_range(spec.foreground) || !in_unit_range(spec.background) ||
      !in_unit_range(spec.ring_intensity)) {
    throw Error(Errc::invalid_argument, "intensities must lie in [0,1]");
  }
  for (char ch : spec.digits) {
    if (ch < '0' || ch > '9') throw Error(Errc::invalid_argument, "digits must be 0-9");
  }

  const double outer = spec.size / 2.0 - 1.0;
  const double face = outer - spec.ring_width;
  std::vector<double> img(static_cast<std::size_t>(spec.size) * spec.size, spec.background);

  if (!spec.digits.empty()) {
    // Glyph box: width 0.5 h per digit, gap 0.25 w, scaled so the box corners
    // stay within 0.8 of the face radius.
    const auto n = static_cast<double>(spec.digits.size());
    const double w_per_h = 0.5, gap_per_w = 0.25;
    const double box_w_per_h = n * w_per_h + (n - 1) * gap_per_w * w_per_h;
    const double h = 2.0 * 0.8 * face / std::hypot(box_w_per_h, 1.0);
    const double w = w_per_h * h;
    const double box_w = box_w_per_h * h;
    std::vector<Segment> segments;
    for (std::size_t i = 0; i < spec.digits.size(); ++i) {
      const double cx = -box_w / 2 + w / 2 + static_cast<double>(i) * w * (1 + gap_per_w);
      append_digit(segments, spec.digits[i] - '0', cx, w, h);
    }
    const double shear = std::tan(spec.slant * std::numbers::pi / 180.0);
    for (auto& s : segments) {
      s.x0 += s.y0 * shear;
      s.x1 += s.y1 * shear;
    }
    const double half_stroke = spec.stroke_width / 2.0;
    const auto strokes = coverage(spec.size, [&](double x, double y) {
      if (x * x + y * y >= face * face) return false;
      for (const auto& s : segments) {
        if (distance_to_segment(x, y, s) <= half_stroke) return true;
      }
      return false;
    });
    paint(img, strokes, spec.foreground);
  }
  paint(img, ring_coverage(spec.size, outer - spec.ring_width / 2.0, spec.ring_width),
        spec.ring_intensity);
  return GrayImage(spec.size, spec.size, std::move(img));
}

namespace {

std::vector<double> gaussian_kernel(double sigma) {
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> k(static_cast<std::size_t>(2 * radius + 1));
  double total = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    const double v = std::exp(-0.5 * (i * i) / (sigma * sigma));
    k[static_cast<std::size_t>(i + radius)] = v;
    total += v;
  }
  for (double& v : k) v /= total;
  return k;
}

std::vector<double> blur(const std::vector<double>& src, int width, int height, double sigma) {
  const auto k = gaussian_kernel(sigma);
  const int radius = static_cast<int>(k.size() / 2);
  std::vector<double> tmp(src.size()), out(src.size());
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      double acc = 0.0;
      for (int i = -radius; i <= radius; ++i) {
        const int cc = std::clamp(c + i, 0, width - 1);
        acc += k[static_cast<std::size_t>(i + radius)] * src[static_cast<std::size_t>(r) * width + cc];
      }
      tmp[static_cast<std::size_t>(r) * width + c] = acc;
    }
  }
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      double acc = 0.0;
      for (int i = -radius; i <= radius; ++i) {
        const int rr = std::clamp(r + i, 0, height - 1);
        acc += k[static_cast<std::size_t>(i + radius)] * tmp[static_cast<std::size_t>(rr) * width + c];
      }
      out[static_cast<std::size_t>(r) * width + c] = std::clamp(acc, 0.0, 1.0);
    }
  }
  return out;
}

// Row-stochastic weights mapping `from` samples onto `to` equal-area bins.
std::vector<double> area_weights(int from, int to) {
  std::vector<double> w(static_cast<std::size_t>(to) * from, 0.0);
  const double step = static_cast<double>(from) / to;
  for (int a = 0; a < to; ++a) {
    const double lo = a * step, hi = (a + 1) * step;
    for (int i = static_cast<int>(std::floor(lo)); i < from && i < hi; ++i) {
      const double overlap = std::min(hi, i + 1.0) - std::max(lo, static_cast<double>(i));
      if (overlap > 0.0) w[static_cast<std::size_t>(a) * from + i] = overlap / step;
    }
  }
  return w;
}

std::vector<double> downscale(const std::vector<double>& src, int width, int height, int target) {
  const auto wx = area_weights(width, target);
  const auto wy = area_weights(height, target);
  std::vector<double> tmp(static_cast<std::size_t>(height) * target, 0.0);
  for (int r = 0; r < height; ++r) {
    for (int a = 0; a < target; ++a) {
      double acc = 0.0;
      for (int c = 0; c < width; ++c) {
        acc += wx[static_cast<std::size_t>(a) * width + c] * src[static_cast<std::size_t>(r) * width + c];
      }
      tmp[static_cast<std::size_t>(r) * target + a] = acc;
    }
  }
  std::vector<double> out(static_cast<std::size_t>(target) * target, 0.0);
  for (int b = 0; b < target; ++b) {
    for (int a = 0; a < target; ++a) {
      double acc = 0.0;
      for (int r = 0; r < height; ++r) {
        acc += wy[static_cast<std::size_t>(b) * height + r] * tmp[static_cast<std::size_t>(r) * target + a];
      }
      out[static_cast<std::size_t>(b) * target + a] = std::clamp(acc, 0.0, 1.0);
    }
  }
  return out;
}

}  // namespace

GrayImage degrade(const GrayImage& img, const Degradation& d) {
  if (!(d.blur_sigma >= 0.0) || !(d.noise_sigma >= 0.0)) {
    throw Error(Errc::invalid_argument, "blur and noise sigmas must be non-negative");
  }
  if (d.target_size && (*d.target_size < 1 || *d.target_size > img.width() ||
                        *d.target_size > img.height())) {
    throw Error(Errc::bad_target, "target size " + std::to_string(*d.target_size) +
                                      " must be in [1, " +
                                      std::to_string(std::min(img.width(), img.height())) + "]");
  }
  int width = img.width(), height = img.height();
  std::vector<double> px(img.pixels().begin(), img.pixels().end());
  if (d.blur_sigma > 0.0) px = blur(px, width, height, d.blur_sigma);
  if (d.noise_sigma > 0.0) {
    std::mt19937_64 rng(d.seed);
    std::normal_distribution<double> noise(0.0, d.noise_sigma);
    for (double& v : px) v = std::clamp(v + noise(rng), 0.0, 1.0);
  }
  if (d.target_size && (*d.target_size != width || *d.target_size != height)) {
    px = downscale(px, width, height, *d.target_size);
    width = height = *d.target_size;
  }
  return GrayImage(width, height, std::move(px));
}

}  // namespace slice_radon
