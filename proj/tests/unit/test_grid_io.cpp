#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fzc/descriptor.hpp"
#include "fzc/errors.hpp"
#include "fzc/grid_io.hpp"

using namespace fzc;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "fzc_test_grid_io";
  fs::create_directories(dir);
  return dir / name;
}

GridFunction sample_grid() {
  std::vector<cplx> v(16);
  for (int i = 0; i < 16; ++i) v[i] = {0.1 * i, -0.25 * i};
  return GridFunction{1.5, 4, 1.5, v};
}

}  // namespace

TEST_CASE("FZG1 byte layout") {
  const auto bytes = encode_grid(sample_grid());
  REQUIRE(bytes.size() == 4 + 8 + 8 + 4 + 16 * 16);
  CHECK(std::string(bytes.begin(), bytes.begin() + 4) == "FZG1");
  double a = 0.0;
  std::memcpy(&a, bytes.data() + 4, 8);  // host is little-endian here
  CHECK(a == 1.5);
  CHECK(bytes[20] == 4);
  CHECK(bytes[21] == 0);
  double re5 = 0.0;
  std::memcpy(&re5, bytes.data() + 24 + 5 * 16, 8);
  CHECK(re5 == 0.5);
}

TEST_CASE("FZG1 round trip is bit exact") {
  const auto g = sample_grid();
  const auto back = decode_grid(encode_grid(g));
  CHECK(back.a() == g.a());
  CHECK(back.size() == g.size());
  CHECK(back.support_radius() == g.support_radius());
  for (std::size_t i = 0; i < g.values().size(); ++i) CHECK(back.values()[i] == g.values()[i]);
  const auto path = scratch("round.fzg");
  write_grid(path, g);
  const auto disk = read_grid(path);
  CHECK(disk.values()[7] == g.values()[7]);
}

TEST_CASE("FZG1 rejects corrupt payloads") {
  auto bytes = encode_grid(sample_grid());
  auto bad_magic = bytes;
  bad_magic[0] = 'X';
  CHECK_THROWS_AS((void)decode_grid(bad_magic), FormatError);
  auto truncated = bytes;
  truncated.pop_back();
  CHECK_THROWS_AS((void)decode_grid(truncated), FormatError);
  auto longer = bytes;
  longer.push_back(0);
  CHECK_THROWS_AS((void)decode_grid(longer), FormatError);
  auto bad_n = bytes;
  bad_n[20] = 3;
  CHECK_THROWS_AS((void)decode_grid(bad_n), FormatError);
  auto nan_value = bytes;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::memcpy(nan_value.data() + 24, &nan, 8);
  CHECK_THROWS_AS((void)decode_grid(nan_value), FormatError);
  auto neg_a = bytes;
  const double minus = -1.0;
  std::memcpy(neg_a.data() + 4, &minus, 8);
  CHECK_THROWS_AS((void)decode_grid(neg_a), FormatError);
  CHECK_THROWS_AS((void)decode_grid({}), FormatError);
  CHECK_THROWS_AS((void)read_grid(scratch("missing.fzg")), FormatError);
}

TEST_CASE("CSV export") {
  const auto path = scratch("g.csv");
  write_grid_csv(path, sample_grid());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "x1,x2,re,im");
  int rows = 0;
  std::string first;
  while (std::getline(in, line)) {
    if (rows == 0) first = line;
    ++rows;
  }
  CHECK(rows == 16);
  CHECK(first == "-1.125,-1.125,0,-0");
}

TEST_CASE("PGM export") {
  const auto path = scratch("g.pgm");
  const auto mapping = write_pgm(path, sample_grid());
  CHECK(mapping.channel == "abs");
  const auto bytes = read_file_bytes(path);
  const std::string head(bytes.begin(), bytes.begin() + 2);
  CHECK(head == "P5");
  CHECK(bytes.size() > 16);
  // first pixel row is the top (largest x2) row; the last cell has the largest value
  const std::size_t pixels = bytes.size() - 16;
  CHECK(bytes[pixels + 3] == 255);
  CHECK(bytes[bytes.size() - 4] == 0);
  CHECK(fs::exists(path.string() + ".txt"));

  const GridFunction flat{1.0, 4, 1.0, std::vector<cplx>(16, cplx{2.0})};
  const auto fm = write_pgm(path, flat);
  CHECK(fm.channel == "re");
  const auto flat_bytes = read_file_bytes(path);
  CHECK(flat_bytes.back() == 128);
}
