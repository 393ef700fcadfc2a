#pragma once

#include <span>
#include <vector>

#include "fzc/descriptor.hpp"
#include "fzc/fz_basis.hpp"
#include "fzc/grid_fourier.hpp"
#include "fzc/lattice.hpp"
#include "fzc/quadrature.hpp"

namespace fzc {

// Fourier-Zernike coefficients C^a_{n,m} for every index of a truncation,
// stored in canonical enumeration order.
class FZCoeffTable {
 public:
  // Throws DomainError for a <= 0 or a coefficient count that does not
  // match the truncation.
  FZCoeffTable(double a, FZTruncation trunc, std::vector<cplx> coeffs);

  static FZCoeffTable zeros(double a, FZTruncation trunc);

  [[nodiscard]] double a() const noexcept { return a_; }
  [[nodiscard]] FZTruncation trunc() const noexcept { return trunc_; }
  // Throws IndexError for an index outside the truncation.
  [[nodiscard]] cplx at(FZIndex idx) const;
  [[nodiscard]] std::span<const cplx> values() const noexcept { return coeffs_; }
  [[nodiscard]] double max_abs() const noexcept;
  // max |C(n,-m) - conj C(n,m)|
  [[nodiscard]] double hermitian_defect() const noexcept;

 private:
  double a_;
  FZTruncation trunc_;
  std::vector<cplx> coeffs_;
};

// c_a(k; n, m) = sqrt(n+1) i^m (-1)^{(n-m)/2} J_{n+1}(pi|k|) / (2 a sqrt(pi) |k|) e^{-i m Phi(k)},
// with the limit sqrt(pi)/(4a) at k = 0 for (n, m) = (0, 0) and 0 otherwise.
// Throws IndexError for an invalid index, DomainError for a <= 0.
[[nodiscard]] cplx c_kernel(LatticePoint k, FZIndex idx, double a);

// Box-truncated sum over |k1|, |k2| <= kmax of c_a(k; n, m) f[k], row-major.
[[nodiscard]] FZCoeffTable fz_from_fourier(const FourierTable& table, FZTruncation trunc);

// Same summands grouped by shell (ascending r2, then angle). Throws
// GeometryError unless the shells hold exactly the table's box.
[[nodiscard]] FZCoeffTable fz_from_fourier_polar(const FourierTable& table,
                                                 const std::vector<PolarShell>& shells,
                                                 FZTruncation trunc);

// Quadrature of f conj(V^a_{nm}) r over the disk of radius a: Gauss-Legendre
// in r on each interval between the descriptor's breakpoints, trapezoid in
// theta. f is taken as zero beyond support (defaults to a).
[[nodiscard]] FZCoeffTable fz_direct(const AnalyticFunction& f, double a, FZTruncation trunc,
                                     PolarQuadrature quad = {}, double support = -1.0);

struct DiskPoint {
  double r = 0.0;
  double theta = 0.0;
};

// Partial sum of C V over the truncation. Throws DomainError for r > a.
[[nodiscard]] std::vector<cplx> reconstruct(const FZCoeffTable& table,
                                            std::span<const DiskPoint> points);

// The partial sum at the centers of an N x N grid on [-a, a]^2; cells
// outside the disk are zero.
[[nodiscard]] GridFunction render_on_grid(const FZCoeffTable& table, int n);

// Component-wise comparison: relative error on entries with
// |want| > threshold, absolute error on the rest.
struct CoeffComparison {
  double worst_relative = 0.0;
  double worst_absolute = 0.0;
  FZIndex worst_relative_at{};
  FZIndex worst_absolute_at{};
  std::size_t dominant = 0;
  bool pass = false;
};

[[nodiscard]] CoeffComparison compare_coeffs(const FZCoeffTable& got, const FZCoeffTable& want,
                                             double rel_tol, double abs_tol,
                                             double threshold);

}  // namespace fzc
