#include "fzc/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <utility>

#include "fzc/errors.hpp"

namespace fzc {

PolarCoord polar_of(LatticePoint k) noexcept {
  if (k.k1 == 0 && k.k2 == 0) return {0.0, 0.0};
  const double rho = std::sqrt(static_cast<double>(k.norm2()));
  double phi = std::atan2(static_cast<double>(k.k2), static_cast<double>(k.k1));
  if (phi < 0.0) phi += 2.0 * std::numbers::pi;
  if (phi >= 2.0 * std::numbers::pi) phi = std::nextafter(2.0 * std::numbers::pi, 0.0);
  return {rho, phi};
}

std::vector<PolarShell> shells_up_to(int kmax) {
  if (kmax < 1) throw DomainError("shells_up_to: kmax must be at least 1");
  std::map<std::int64_t, std::vector<std::pair<double, LatticePoint>>> by_radius;
  for (int k2 = -kmax; k2 <= kmax; ++k2) {
    for (int k1 = -kmax; k1 <= kmax; ++k1) {
      const LatticePoint k{k1, k2};
      by_radius[k.norm2()].emplace_back(polar_of(k).phi, k);
    }
  }
  std::vector<PolarShell> shells;
  shells.reserve(by_radius.size());
  for (auto& [r2, members] : by_radius) {
    std::sort(members.begin(), members.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    PolarShell shell;
    shell.r2 = r2;
    shell.rho = std::sqrt(static_cast<double>(r2));
    shell.angles.reserve(members.size());
    shell.points.reserve(members.size());
    for (const auto& [phi, k] : members) {
      shell.angles.push_back(phi);
      shell.points.push_back(k);
    }
    shells.push_back(std::move(shell));
  }
  return shells;
}

}  // namespace fzc
