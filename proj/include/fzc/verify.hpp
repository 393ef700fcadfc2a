#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace fzc {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  double value = 0.0;      // measured error or count
  double tolerance = 0.0;  // pass iff value <= tolerance
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  [[nodiscard]] bool pass() const noexcept;
  // {"pass": bool, "checks": [{"suite", "name", "pass", "value", "tolerance"}, ...]}
  [[nodiscard]] std::string to_json() const;
};

// Suite names in run order.
[[nodiscard]] const std::vector<std::string>& verify_suite_names();

// Runs the named invariant suites (all of them when the list is empty).
// Throws ConfigError for an unknown name.
[[nodiscard]] VerifyReport run_verify(const std::vector<std::string>& suites);

// Structural checks of an FZG1 file: decodes (FormatError on corruption)
// and confirms the declared support holds.
[[nodiscard]] VerifyReport verify_grid_file(const std::filesystem::path& path);

}  // namespace fzc
