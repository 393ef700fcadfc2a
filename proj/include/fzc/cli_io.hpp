#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fzc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitFormat = 3;
inline constexpr int kExitVerify = 4;

struct RunConfig {
  std::string subcommand;
  double a = 1.0;
  std::optional<int> n;       // grid size
  std::optional<int> kmax;
  int n_max = 8;
  std::optional<double> support;
  std::string fn;             // sample
  std::string left_fn;        // convolve
  std::string right_fn;
  std::string left_in;
  std::string right_in;
  std::string route = "spectral";
  std::string in;
  std::string out;
  std::string csv;
  std::string points;
  std::string cache_dir;
  std::vector<std::string> suites;
  std::string left_index;     // kernel-table, "n,m"
  std::string right_index;
  int random_points = 0;
  std::uint64_t seed = 1;
};

// Throws ConfigError when an invariant fails (a <= 0, N not a power of two,
// kmax outside [1, N/2 - 1], n_max outside [0, 30], unknown route).
void validate(const RunConfig& cfg);

// Entry point of the fzc tool; returns the process exit code.
int run_cli(int argc, char** argv);

}  // namespace fzc
