#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fzc/fz_transform.hpp"

namespace fzc {

// {"a": .., "n_max": .., <extra>, "coeffs": [{"n", "m", "re", "im"}, ...]}
// with every float at 17 significant digits. `extra` holds already-encoded
// JSON values keyed by field name.
[[nodiscard]] std::string encode_coeffs(
    const FZCoeffTable& table,
    const std::vector<std::pair<std::string, std::string>>& extra = {});

// Throws FormatError for malformed JSON, missing fields, or coefficients
// out of canonical order.
[[nodiscard]] FZCoeffTable decode_coeffs(std::string_view text);

void write_coeffs(const std::filesystem::path& path, const FZCoeffTable& table);
[[nodiscard]] FZCoeffTable read_coeffs(const std::filesystem::path& path);

// 17-significant-digit rendering; throws FormatError for non-finite values.
[[nodiscard]] std::string format_double(double v);

}  // namespace fzc
