#pragma once

#include <complex>
#include <span>
#include <vector>

#include "fzc/descriptor.hpp"
#include "fzc/lattice.hpp"
#include "fzc/quadrature.hpp"

namespace fzc {

using cplx = std::complex<double>;

// Uniform N x N samples on [-a, a]^2 at cell centers
// x_i = -a + (i + 1/2)(2a/N), stored row-major with x1 fastest.
class GridFunction {
 public:
  // Throws DomainError unless a > 0, N is a power of two (>= 2),
  // 0 <= support_radius <= a and values.size() == N*N.
  GridFunction(double a, int n, double support_radius, std::vector<cplx> values);

  static GridFunction zeros(double a, int n, double support_radius);

  [[nodiscard]] double a() const noexcept { return a_; }
  [[nodiscard]] int size() const noexcept { return n_; }
  [[nodiscard]] double support_radius() const noexcept { return support_; }
  [[nodiscard]] double spacing() const noexcept { return 2.0 * a_ / n_; }
  [[nodiscard]] double cell_area() const noexcept { return spacing() * spacing(); }
  [[nodiscard]] double center(int i) const noexcept { return -a_ + (i + 0.5) * spacing(); }

  [[nodiscard]] const cplx& operator()(int i1, int i2) const noexcept {
    return values_[static_cast<std::size_t>(i2) * n_ + i1];
  }
  [[nodiscard]] std::span<const cplx> values() const noexcept { return values_; }

  // Cell sum times cell area.
  [[nodiscard]] cplx integral() const noexcept;
  [[nodiscard]] double max_abs() const noexcept;
  // Largest |imag| is zero.
  [[nodiscard]] bool is_real() const noexcept;
  // Largest |value| over cells whose centers lie outside the disk of the given radius.
  [[nodiscard]] double max_abs_outside(double radius) const noexcept;
  // Bilinear interpolation between cell centers; zero beyond the outer centers.
  [[nodiscard]] cplx interpolate(double x1, double x2) const noexcept;

 private:
  double a_;
  int n_;
  double support_;
  std::vector<cplx> values_;
};

enum class FourierSource { kRectangular, kPolar };

// Lattice Fourier coefficients on the box |k1|, |k2| <= kmax, for the
// kernel e^{-pi i a^{-1} k.x} over [-a, a]^2. Storage is row-major in k2
// with k1 fastest.
class FourierTable {
 public:
  FourierTable(double a, int kmax, FourierSource source, std::vector<cplx> coeffs);

  static FourierTable zeros(double a, int kmax, FourierSource source);

  [[nodiscard]] double a() const noexcept { return a_; }
  [[nodiscard]] int kmax() const noexcept { return kmax_; }
  [[nodiscard]] int side() const noexcept { return 2 * kmax_ + 1; }
  [[nodiscard]] FourierSource source() const noexcept { return source_; }
  [[nodiscard]] bool contains(LatticePoint k) const noexcept {
    return std::abs(k.k1) <= kmax_ && std::abs(k.k2) <= kmax_;
  }
  [[nodiscard]] std::size_t offset(LatticePoint k) const noexcept {
    return static_cast<std::size_t>(k.k2 + kmax_) * side() + (k.k1 + kmax_);
  }
  [[nodiscard]] cplx at(LatticePoint k) const noexcept { return coeffs_[offset(k)]; }
  [[nodiscard]] std::span<const cplx> values() const noexcept { return coeffs_; }

  // max |f(-k) - conj f(k)| over the box.
  [[nodiscard]] double hermitian_defect() const noexcept;

 private:
  double a_;
  int kmax_;
  FourierSource source_;
  std::vector<cplx> coeffs_;
};

// Cell-center samples of f, set to zero wherever |x| > support_radius.
[[nodiscard]] GridFunction sample_function(const AnalyticFunction& f, double a, int n,
                                           double support_radius);

// Zeroes every cell whose center lies outside the disk; support_radius
// becomes min(radius, current). Throws DomainError for radius > a or < 0.
[[nodiscard]] GridFunction restrict_to_disk(const GridFunction& g, double radius);

// Places a grid of half-width b at the center of [-2b, 2b]^2. A target
// size of 2N embeds cells exactly; other powers of two resample
// piecewise-constantly (cell integrals preserved). Throws GeometryError
// when a_target != 2b.
[[nodiscard]] GridFunction embed_zero_padded(const GridFunction& g, double a_target,
                                             int n_target);

// Midpoint-rule Fourier coefficients by FFT. Throws GeometryError for
// kmax > N/2 - 1 or kmax < 1.
[[nodiscard]] FourierTable fourier_coeffs(const GridFunction& g, int kmax);

// f[k] = int_0^b int_0^{2pi} f(r, theta) e^{-pi i a^{-1} r (k1 cos + k2 sin)} r dr dtheta
// by Gauss-Legendre in r (split at the descriptor's breakpoints) times
// the periodic trapezoid in theta. Throws GeometryError unless b = a/2.
[[nodiscard]] FourierTable polar_fourier_coeffs(const AnalyticFunction& f, double b, double a,
                                                int kmax, PolarQuadrature quad = {});

// sqrt(sum |g - ref|^2 / sum |ref|^2) over cells with centers in the disk.
// Throws GeometryError when the grids differ in a or N.
[[nodiscard]] double disk_relative_l2(const GridFunction& g, const GridFunction& ref,
                                      double radius);

[[nodiscard]] bool is_power_of_two(int n) noexcept;

}  // namespace fzc
