#include "fzc/coeff_io.hpp"

#include <cmath>

#include <fmt/format.h>
#include <json.hpp>

#include "fzc/errors.hpp"
#include "fzc/grid_io.hpp"

namespace fzc {

std::string format_double(double v) {
  if (!std::isfinite(v)) throw FormatError("cannot serialize a non-finite value");
  auto text = fmt::format("{:.17g}", v);
  // keep it a JSON float so -0 survives a parse
  if (text.find_first_of(".e") == std::string::npos) text += ".0";
  return text;
}

std::string encode_coeffs(const FZCoeffTable& table,
                          const std::vector<std::pair<std::string, std::string>>& extra) {
  std::string out = fmt::format("{{\n  \"a\": {},\n  \"n_max\": {},\n", format_double(table.a()),
                                table.trunc().n_max());
  for (const auto& [key, value] : extra) out += fmt::format("  \"{}\": {},\n", key, value);
  out += "  \"coeffs\": [\n";
  const auto indices = enumerate_indices(table.trunc());
  const auto values = table.values();
  for (std::size_t i = 0; i < indices.size(); ++i) {
    out += fmt::format("    {{\"n\": {}, \"m\": {}, \"re\": {}, \"im\": {}}}{}\n", indices[i].n,
                       indices[i].m, format_double(values[i].real()),
                       format_double(values[i].imag()), i + 1 < indices.size() ? "," : "");
  }
  out += "  ]\n}\n";
  return out;
}

FZCoeffTable decode_coeffs(std::string_view text) {
  using nlohmann::json;
  try {
    const json doc = json::parse(text.begin(), text.end());
    if (!doc.is_object()) throw FormatError("coefficient file: top level is not an object");
    const auto& ja = doc.at("a");
    const auto& jn = doc.at("n_max");
    if (!ja.is_number() || !jn.is_number_integer()) {
      throw FormatError("coefficient file: 'a' or 'n_max' has the wrong type");
    }
    const double a = ja.get<double>();
    const auto n_max = jn.get<long long>();
    if (!(a > 0.0) || n_max < 0 || n_max > kMaxZernikeDegree) {
      throw FormatError("coefficient file: 'a' or 'n_max' out of range");
    }
    const FZTruncation trunc(static_cast<int>(n_max));
    const auto& list = doc.at("coeffs");
    if (!list.is_array() || list.size() != trunc.size()) {
      throw FormatError(fmt::format("coefficient file: expected {} coefficients", trunc.size()));
    }
    const auto indices = enumerate_indices(trunc);
    std::vector<cplx> coeffs(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) {
      const auto& e = list[i];
      if (e.at("n").get<int>() != indices[i].n || e.at("m").get<int>() != indices[i].m) {
        throw FormatError(fmt::format("coefficient file: entry {} is not ({}, {})", i,
                                      indices[i].n, indices[i].m));
      }
      coeffs[i] = {e.at("re").get<double>(), e.at("im").get<double>()};
    }
    return {a, trunc, std::move(coeffs)};
  } catch (const json::exception& e) {
    throw FormatError(fmt::format("coefficient file: {}", e.what()));
  }
}

void write_coeffs(const std::filesystem::path& path, const FZCoeffTable& table) {
  write_text_file(path, encode_coeffs(table));
}

FZCoeffTable read_coeffs(const std::filesystem::path& path) {
  return decode_coeffs(read_text_file(path));
}

}  // namespace fzc
