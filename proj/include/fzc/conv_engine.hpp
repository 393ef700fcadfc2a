#pragma once

#include <vector>

#include "fzc/fz_transform.hpp"
#include "fzc/grid_fourier.hpp"

namespace fzc {

// Sum over the box of c_a(k; n, m) f1[k] f2[k], row-major. Throws
// GeometryError when the tables differ in a or kmax.
[[nodiscard]] FZCoeffTable conv_fz_coeffs(const FourierTable& t1, const FourierTable& t2,
                                          FZTruncation trunc);

// Grid route: both grids are checked against the half-radius support rule
// (SupportError), transformed by FFT, then combined as above.
[[nodiscard]] FZCoeffTable conv_fz_coeffs(const GridFunction& g1, const GridFunction& g2, int kmax,
                                          FZTruncation trunc);

// Shell-grouped sum over polar-quadrature tables. Throws GeometryError if
// either table is not polar-sourced, the tables disagree, or the shells do
// not tile the box.
[[nodiscard]] FZCoeffTable conv_fz_coeffs_polar(const FourierTable& t1, const FourierTable& t2,
                                                const std::vector<PolarShell>& shells,
                                                FZTruncation trunc);

// Grid convolution sampled at the nodes x_q = -a + q h, q = 0..N-1 (h = 2a/N),
// stored row-major with q1 fastest; the origin is node (N/2, N/2).
struct NodeGrid {
  double a = 0.0;
  int n = 0;
  std::vector<cplx> values;

  [[nodiscard]] double node(int q) const noexcept { return -a + q * (2.0 * a / n); }
  [[nodiscard]] cplx at(int q1, int q2) const noexcept {
    return values[static_cast<std::size_t>(q2) * n + q1];
  }
};

enum class NodeMethod { kDirect, kCircular };

// h^2 sum_{i + j = node} g1[i] g2[j]. kDirect is the literal O(N^4) sum over
// non-wrapping pairs; kCircular uses the FFT and equals it whenever the
// supports rule out wraparound. Throws GeometryError for mismatched grids.
[[nodiscard]] NodeGrid convolve_nodes(const GridFunction& g1, const GridFunction& g2,
                                      NodeMethod method = NodeMethod::kCircular);

// Throws SupportError when the declared support exceeds a/2 or the grid puts
// more than 1e-12 of absolute mass outside B_{a/2}.
void check_half_support(const GridFunction& g);

// Convolution of the piecewise-constant grid functions evaluated at the
// cell centers (the mean of the four surrounding node values). Output
// support radius is a. Throws SupportError or GeometryError.
[[nodiscard]] GridFunction brute_force_convolution(const GridFunction& g1, const GridFunction& g2);

struct SupportReport {
  double radius = 0.0;
  double max_outside = 0.0;
  double peak = 0.0;
  bool pass = false;
};

// Passes iff max |g| outside the disk <= 1e-9 * max |g|.
[[nodiscard]] SupportReport verify_support(const GridFunction& g, double radius);

}  // namespace fzc
