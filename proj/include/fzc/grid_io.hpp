#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "fzc/grid_fourier.hpp"

namespace fzc {

// FZG1 layout, little-endian:
//   "FZG1" | f64 a | f64 support_radius | u32 N | N*N x (f64 re, f64 im)
[[nodiscard]] std::vector<std::uint8_t> encode_grid(const GridFunction& g);
// Throws FormatError on a bad magic, truncated or oversized payload, or
// header values GridFunction would reject.
[[nodiscard]] GridFunction decode_grid(const std::vector<std::uint8_t>& bytes);

void write_grid(const std::filesystem::path& path, const GridFunction& g);
[[nodiscard]] GridFunction read_grid(const std::filesystem::path& path);

// One row per cell: x1,x2,re,im at 17 significant digits.
void write_grid_csv(const std::filesystem::path& path, const GridFunction& g);

struct PgmMapping {
  std::string channel;  // "re" for real grids, "abs" otherwise
  double min = 0.0;
  double max = 0.0;
};

// 8-bit P5 image, top row = largest x2. Values map affinely from
// [min, max] onto [0, 255]; a flat grid renders as 128. The mapping is
// also written to `<path>.txt`.
PgmMapping write_pgm(const std::filesystem::path& path, const GridFunction& g);

// Raw file helpers; throw FormatError when the file cannot be opened.
[[nodiscard]] std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes);
void write_text_file(const std::filesystem::path& path, const std::string& text);
[[nodiscard]] std::string read_text_file(const std::filesystem::path& path);

}  // namespace fzc
