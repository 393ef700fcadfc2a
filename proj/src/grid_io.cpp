#include "fzc/grid_io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

#include <fmt/format.h>

#include "fzc/errors.hpp"

namespace fzc {
namespace {

constexpr char kMagic[4] = {'F', 'Z', 'G', '1'};
constexpr std::size_t kHeader = 4 + 8 + 8 + 4;

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_f64(std::vector<std::uint8_t>& out, double v) { put_u64(out, std::bit_cast<std::uint64_t>(v)); }

std::uint64_t get_u64(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  return v;
}

double get_f64(const std::uint8_t* p) { return std::bit_cast<double>(get_u64(p)); }

std::uint32_t get_u32(const std::uint8_t* p) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(p[i]) << (8 * i);
  return v;
}

}  // namespace

std::vector<std::uint8_t> encode_grid(const GridFunction& g) {
  std::vector<std::uint8_t> out;
  const auto n = static_cast<std::uint32_t>(g.size());
  out.reserve(kHeader + 16 * static_cast<std::size_t>(n) * n);
  out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
  put_f64(out, g.a());
  put_f64(out, g.support_radius());
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(n >> (8 * i)));
  for (const auto& v : g.values()) {
    put_f64(out, v.real());
    put_f64(out, v.imag());
  }
  return out;
}

GridFunction decode_grid(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < kHeader) throw FormatError("FZG1: truncated header");
  if (std::memcmp(bytes.data(), kMagic, 4) != 0) throw FormatError("FZG1: bad magic");
  const double a = get_f64(bytes.data() + 4);
  const double support = get_f64(bytes.data() + 12);
  const std::uint32_t n = get_u32(bytes.data() + 20);
  if (n < 2 || n > (1u << 15) || (n & (n - 1)) != 0) {
    throw FormatError(fmt::format("FZG1: N={} is not a supported power of two", n));
  }
  const std::size_t count = static_cast<std::size_t>(n) * n;
  if (bytes.size() != kHeader + 16 * count) {
    throw FormatError(fmt::format("FZG1: expected {} bytes, found {}", kHeader + 16 * count,
                                  bytes.size()));
  }
  if (!std::isfinite(a) || !(a > 0.0)) throw FormatError("FZG1: a must be positive");
  if (!std::isfinite(support) || support < 0.0 || support > a) {
    throw FormatError("FZG1: support radius outside [0, a]");
  }
  std::vector<cplx> values(count);
  const std::uint8_t* p = bytes.data() + kHeader;
  for (std::size_t i = 0; i < count; ++i, p += 16) {
    values[i] = {get_f64(p), get_f64(p + 8)};
    if (!std::isfinite(values[i].real()) || !std::isfinite(values[i].imag())) {
      throw FormatError(fmt::format("FZG1: non-finite value at cell {}", i));
    }
  }
  return {a, static_cast<int>(n), support, std::move(values)};
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(fmt::format("cannot open '{}' for reading", path.string()));
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file_bytes(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError(fmt::format("cannot open '{}' for writing", path.string()));
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw FormatError(fmt::format("write to '{}' failed", path.string()));
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError(fmt::format("cannot open '{}' for writing", path.string()));
  out << text;
  if (!out) throw FormatError(fmt::format("write to '{}' failed", path.string()));
}

std::string read_text_file(const std::filesystem::path& path) {
  const auto bytes = read_file_bytes(path);
  return {bytes.begin(), bytes.end()};
}

void write_grid(const std::filesystem::path& path, const GridFunction& g) {
  write_file_bytes(path, encode_grid(g));
}

GridFunction read_grid(const std::filesystem::path& path) { return decode_grid(read_file_bytes(path)); }

void write_grid_csv(const std::filesystem::path& path, const GridFunction& g) {
  std::string text = "x1,x2,re,im\n";
  const int n = g.size();
  for (int i2 = 0; i2 < n; ++i2) {
    for (int i1 = 0; i1 < n; ++i1) {
      const cplx v = g(i1, i2);
      text += fmt::format("{:.17g},{:.17g},{:.17g},{:.17g}\n", g.center(i1), g.center(i2),
                          v.real(), v.imag());
    }
  }
  write_text_file(path, text);
}

PgmMapping write_pgm(const std::filesystem::path& path, const GridFunction& g) {
  const bool real = g.is_real();
  const int n = g.size();
  std::vector<double> channel(g.values().size());
  std::transform(g.values().begin(), g.values().end(), channel.begin(),
                 [real](const cplx& v) { return real ? v.real() : std::abs(v); });
  const auto [lo, hi] = std::minmax_element(channel.begin(), channel.end());
  PgmMapping map{real ? "re" : "abs", *lo, *hi};

  std::string image = fmt::format("P5\n{} {}\n255\n", n, n);
  const std::size_t start = image.size();
  image.resize(start + channel.size());
  const double range = map.max - map.min;
  for (int row = 0; row < n; ++row) {
    const int i2 = n - 1 - row;
    for (int i1 = 0; i1 < n; ++i1) {
      const double v = channel[static_cast<std::size_t>(i2) * n + i1];
      int level = 128;
      if (range > 0.0) level = static_cast<int>(std::lround(255.0 * (v - map.min) / range));
      image[start + static_cast<std::size_t>(row) * n + i1] =
          static_cast<char>(std::clamp(level, 0, 255));
    }
  }
  write_text_file(path, image);
  auto sidecar = path;
  sidecar += ".txt";
  write_text_file(sidecar, fmt::format("channel {}\nmin {:.17g}\nmax {:.17g}\n", map.channel,
                                       map.min, map.max));
  return map;
}

}  // namespace fzc
