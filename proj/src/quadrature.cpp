#include "fzc/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "fzc/errors.hpp"

namespace fzc {
namespace {

// P_n(z) and P_{n-1}(z) by the three-term recurrence.
std::pair<double, double> legendre_pair(int n, double z) {
  double p1 = 1.0;
  double p2 = 0.0;
  for (int j = 1; j <= n; ++j) {
    const double p3 = p2;
    p2 = p1;
    p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
  }
  return {p1, p2};
}

}  // namespace

QuadratureRule gauss_legendre(int n, double lo, double hi) {
  if (n < 1) throw DomainError("gauss_legendre: need at least one node");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double mid = 0.5 * (hi + lo);
  const double half = 0.5 * (hi - lo);
  const int roots = (n + 1) / 2;
  for (int i = 0; i < roots; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, pm1] = legendre_pair(n, z);
      dp = n * (z * p - pm1) / (z * z - 1.0);
      const double step = p / dp;
      z -= step;
      if (std::abs(step) <= 1e-15) break;
    }
    const auto [p, pm1] = legendre_pair(n, z);
    dp = n * (z * p - pm1) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    // z descends with i, so the mirrored slot gets the positive root
    rule.nodes[i] = mid - half * z;
    rule.nodes[n - 1 - i] = mid + half * z;
    rule.weights[i] = half * w;
    rule.weights[n - 1 - i] = half * w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = mid;
  return rule;
}

QuadratureRule gauss_legendre_composite(int n, const std::vector<double>& breakpoints) {
  if (breakpoints.size() < 2) {
    throw DomainError("gauss_legendre_composite: need at least two breakpoints");
  }
  QuadratureRule out;
  for (std::size_t s = 0; s + 1 < breakpoints.size(); ++s) {
    if (!(breakpoints[s + 1] > breakpoints[s])) {
      throw DomainError("gauss_legendre_composite: breakpoints must ascend");
    }
    const auto piece = gauss_legendre(n, breakpoints[s], breakpoints[s + 1]);
    out.nodes.insert(out.nodes.end(), piece.nodes.begin(), piece.nodes.end());
    out.weights.insert(out.weights.end(), piece.weights.begin(), piece.weights.end());
  }
  return out;
}

QuadratureRule periodic_trapezoid(int n) {
  if (n < 1) throw DomainError("periodic_trapezoid: need at least one node");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.assign(n, 2.0 * std::numbers::pi / n);
  for (int j = 0; j < n; ++j) rule.nodes[j] = 2.0 * std::numbers::pi * j / n;
  return rule;
}

}  // namespace fzc
