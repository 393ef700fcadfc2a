#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace fzc {

// A point k = (k1, k2) of the integer lattice Z^2.
struct LatticePoint {
  int k1 = 0;
  int k2 = 0;

  [[nodiscard]] std::int64_t norm2() const noexcept {
    return static_cast<std::int64_t>(k1) * k1 + static_cast<std::int64_t>(k2) * k2;
  }
  [[nodiscard]] LatticePoint operator-() const noexcept { return {-k1, -k2}; }
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct PolarCoord {
  double rho = 0.0;  // |k|
  double phi = 0.0;  // angle in [0, 2 pi); 0 at the origin
};

[[nodiscard]] PolarCoord polar_of(LatticePoint k) noexcept;

// One radius class of the lattice box: every point with k1^2 + k2^2 = r2.
struct PolarShell {
  std::int64_t r2 = 0;
  double rho = 0.0;
  std::vector<double> angles;        // strictly ascending, in [0, 2 pi)
  std::vector<LatticePoint> points;  // points[i] sits at angles[i]
};

// Shells of the box |k1|, |k2| <= kmax, ascending r2. Throws DomainError
// for kmax < 1.
[[nodiscard]] std::vector<PolarShell> shells_up_to(int kmax);

}  // namespace fzc
