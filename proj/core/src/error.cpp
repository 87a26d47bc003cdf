#include "slice_radon/error.hpp"

namespace slice_radon {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::bad_magic: return "BadMagic";
    case Errc::truncated_data: return "TruncatedData";
    case Errc::bad_header: return "BadHeader";
    case Errc::spec_too_dense: return "SpecTooDense";
    case Errc::bad_target: return "BadTarget";
    case Errc::angle_out_of_range: return "AngleOutOfRange";
    case Errc::profile_too_short: return "ProfileTooShort";
    case Errc::image_too_small: return "ImageTooSmall";
    case Errc::bad_radius_range: return "BadRadiusRange";
    case Errc::empty_corpus: return "EmptyCorpus";
    case Errc::io_error: return "IoError";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace slice_radon
