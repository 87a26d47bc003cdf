#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace slice_radon {

enum class Errc {
  bad_magic,
  truncated_data,
  bad_header,
  spec_too_dense,
  bad_target,
  angle_out_of_range,
  profile_too_short,
  image_too_small,
  bad_radius_range,
  empty_corpus,
  io_error,
  invalid_argument,
};

std::string_view to_string(Errc code) noexcept;

// Every failure in the library is reported as an Error carrying one of the
// codes above, so callers can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace slice_radon
