#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <limits>

#include <nlohmann/json.hpp>

#include "fzc/coeff_io.hpp"
#include "fzc/errors.hpp"

using namespace fzc;

namespace {

FZCoeffTable awkward_table() {
  const FZTruncation trunc(3);
  std::vector<cplx> v(trunc.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = {std::nextafter(0.1 * (i + 1), 1.0), -std::ldexp(1.0, -900) * static_cast<double>(i)};
  }
  v[2] = {1.0 / 3.0, 2.0 / 7.0};
  return FZCoeffTable{0.1 + 0.2, trunc, v};
}

}  // namespace

TEST_CASE("coefficient JSON round trip is bit exact") {
  const auto t = awkward_table();
  const auto text = encode_coeffs(t);
  const auto back = decode_coeffs(text);
  CHECK(back.a() == t.a());
  CHECK(back.trunc() == t.trunc());
  for (std::size_t i = 0; i < t.values().size(); ++i) CHECK(back.values()[i] == t.values()[i]);
  CHECK(encode_coeffs(back) == text);

  const auto path = std::filesystem::temp_directory_path() / "fzc_test_coeffs.json";
  write_coeffs(path, t);
  CHECK(read_coeffs(path).values()[2] == t.values()[2]);
}

TEST_CASE("coefficient JSON layout") {
  const auto doc = nlohmann::json::parse(encode_coeffs(awkward_table(), {{"kmax", "64"}}));
  CHECK(doc.at("n_max") == 3);
  CHECK(doc.at("kmax") == 64);
  const auto& coeffs = doc.at("coeffs");
  REQUIRE(coeffs.size() == 10);
  CHECK(coeffs[1].at("n") == 1);
  CHECK(coeffs[1].at("m") == -1);
  CHECK(coeffs[9].at("m") == 3);
}

TEST_CASE("format_double") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.0) == "1.0");
  CHECK(format_double(-0.0) == "-0.0");
  CHECK(format_double(1e300) == "1.0000000000000001e+300");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK_THROWS_AS((void)format_double(std::numeric_limits<double>::infinity()), FormatError);
  CHECK_THROWS_AS((void)format_double(std::nan("")), FormatError);
}

TEST_CASE("decode_coeffs rejects malformed input") {
  const char* bad[] = {
      "",
      "[]",
      "{\"a\": 1}",
      "{\"a\": -1, \"n_max\": 0, \"coeffs\": [{\"n\": 0, \"m\": 0, \"re\": 1, \"im\": 0}]}",
      "{\"a\": 1, \"n_max\": 0, \"coeffs\": []}",
      "{\"a\": 1, \"n_max\": 1, \"coeffs\": [{\"n\": 0, \"m\": 0, \"re\": 1, \"im\": 0},"
      "{\"n\": 1, \"m\": 1, \"re\": 0, \"im\": 0}, {\"n\": 1, \"m\": -1, \"re\": 0, \"im\": 0}]}",
      "{\"a\": 1, \"n_max\": 0, \"coeffs\": [{\"n\": 0, \"m\": 0, \"re\": \"x\", \"im\": 0}]}",
      "{\"a\": 1, \"n_max\": 31, \"coeffs\": []}",
      "{\"a\": 1, \"n_max\": 0, \"coeffs\": [{\"n\": 0, \"m\": 0, \"re\": 1, \"im\": 0}",
  };
  for (const char* text : bad) CHECK_THROWS_AS((void)decode_coeffs(text), FormatError);
  CHECK_THROWS_AS((void)read_coeffs("/nonexistent/fzc.json"), FormatError);
}
