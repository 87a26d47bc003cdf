#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "slice_radon/image.hpp"

namespace slice_radon {

// Netpbm graymap reader. Accepts P2 (ASCII) and P5 (binary, 8- or 16-bit
// big-endian samples), maxval up to 65535, '#' comments between header
// tokens. Samples are mapped to value / maxval.
GrayImage load_pgm(std::string_view bytes);

// Writes maxval 255, quantizing each intensity to the nearest level.
// ASCII output puts one image row per line.
std::string save_pgm(const GrayImage& img, bool binary);

GrayImage read_pgm_file(const std::filesystem::path& path);
void write_pgm_file(const std::filesystem::path& path, const GrayImage& img, bool binary = true);

}  // namespace slice_radon
