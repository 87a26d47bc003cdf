#include "slice_radon/pgm.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

#include "slice_radon/error.hpp"

namespace slice_radon {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view bytes) : bytes_(bytes) {}

  // Skips whitespace and comments, then reads an unsigned decimal token.
  // Returns false at end of input.
  bool next_uint(long long& value, bool allow_comments) {
    skip_space(allow_comments);
    if (pos_ >= bytes_.size()) return false;
    const char* first = bytes_.data() + pos_;
    const char* last = bytes_.data() + bytes_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || value < 0) {
      throw Error(Errc::bad_header, "expected an unsigned integer at byte " + std::to_string(pos_));
    }
    pos_ += static_cast<std::size_t>(ptr - first);
    return true;
  }

  std::size_t pos() const noexcept { return pos_; }
  void advance(std::size_t n) noexcept { pos_ += n; }
  std::size_t remaining() const noexcept { return bytes_.size() - pos_; }
  unsigned char byte_at(std::size_t offset) const noexcept {
    return static_cast<unsigned char>(bytes_[pos_ + offset]);
  }
  bool at_space() const noexcept {
    return pos_ < bytes_.size() && std::isspace(static_cast<unsigned char>(bytes_[pos_]));
  }

 private:
  void skip_space(bool allow_comments) {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (allow_comments && c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

GrayImage load_pgm(std::string_view bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
    throw Error(Errc::bad_magic, "expected P2 or P5");
  }
  const bool binary = bytes[1] == '5';
  Scanner in(bytes);
  in.advance(2);
  if (!in.at_space()) throw Error(Errc::bad_magic, "magic must be followed by whitespace");

  long long width = 0, height = 0, maxval = 0;
  if (!in.next_uint(width, true) || !in.next_uint(height, true) || !in.next_uint(maxval, true)) {
    throw Error(Errc::bad_header, "incomplete header");
  }
  if (width < 1 || height < 1) throw Error(Errc::bad_header, "non-positive dimensions");
  if (maxval < 1 || maxval > 65535) throw Error(Errc::bad_header, "maxval must be in [1, 65535]");

  const auto count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  std::vector<double> pixels;
  pixels.reserve(count);
  const auto scale = 1.0 / static_cast<double>(maxval);
  auto push = [&](long long sample) {
    if (sample > maxval) throw Error(Errc::bad_header, "sample exceeds maxval");
    pixels.push_back(static_cast<double>(sample) * scale);
  };

  if (binary) {
    // Exactly one whitespace byte separates maxval from the raster.
    if (!in.at_space()) throw Error(Errc::bad_header, "missing separator before raster");
    in.advance(1);
    const std::size_t depth = maxval > 255 ? 2 : 1;
    if (in.remaining() < count * depth) {
      throw Error(Errc::truncated_data, "raster holds " + std::to_string(in.remaining() / depth) +
                                            " of " + std::to_string(count) + " samples");
    }
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t at = i * depth;
      long long sample = in.byte_at(at);
      if (depth == 2) sample = (sample << 8) | in.byte_at(at + 1);
      push(sample);
    }
  } else {
    long long sample = 0;
    for (std::size_t i = 0; i < count; ++i) {
      if (!in.next_uint(sample, false)) {
        throw Error(Errc::truncated_data, "raster holds " + std::to_string(i) + " of " +
                                              std::to_string(count) + " samples");
      }
      push(sample);
    }
  }
  return GrayImage(static_cast<int>(width), static_cast<int>(height), std::move(pixels));
}

namespace {

int quantize(double v) noexcept { return static_cast<int>(std::lround(v * 255.0)); }

}  // namespace

std::string save_pgm(const GrayImage& img, bool binary) {
  std::ostringstream out;
  out << (binary ? "P5" : "P2") << '\n' << img.width() << ' ' << img.height() << "\n255\n";
  if (binary) {
    for (double v : img.pixels()) out.put(static_cast<char>(quantize(v)));
  } else {
    for (int r = 0; r < img.height(); ++r) {
      for (int c = 0; c < img.width(); ++c) {
        if (c) out << ' ';
        out << quantize(img(c, r));
      }
      out << '\n';
    }
  }
  return out.str();
}

GrayImage read_pgm_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return load_pgm(bytes);
}

void write_pgm_file(const std::filesystem::path& path, const GrayImage& img, bool binary) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io_error, "cannot write " + path.string());
  const std::string bytes = save_pgm(img, binary);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(Errc::io_error, "short write to " + path.string());
}

}  // namespace slice_radon
