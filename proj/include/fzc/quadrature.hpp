#pragma once

#include <vector>

namespace fzc {

// Nodes and weights of a one-dimensional quadrature rule.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule mapped to [lo, hi]. Nodes ascend.
[[nodiscard]] QuadratureRule gauss_legendre(int n, double lo, double hi);

// Composite Gauss-Legendre: n points on each sub-interval between
// consecutive breakpoints (which must ascend).
[[nodiscard]] QuadratureRule gauss_legendre_composite(int n,
                                                      const std::vector<double>& breakpoints);

// Uniform trapezoid on the circle: theta_j = 2 pi j / n, weight 2 pi / n.
[[nodiscard]] QuadratureRule periodic_trapezoid(int n);

// Sizes of a tensor-product polar rule: Gauss-Legendre in r, trapezoid in theta.
struct PolarQuadrature {
  int radial = 256;
  int angular = 512;
};

}  // namespace fzc
