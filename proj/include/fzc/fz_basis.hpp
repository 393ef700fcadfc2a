#pragma once

#include <complex>
#include <compare>
#include <cstddef>
#include <vector>

#include "fzc/special_functions.hpp"

namespace fzc {

using cplx = std::complex<double>;

// A Fourier-Zernike index (n, m): |m| <= n and n = |m| (mod 2).
struct FZIndex {
  int n = 0;
  int m = 0;

  [[nodiscard]] bool valid() const noexcept { return RadialZernikeSpec{n, m}.valid(); }
  [[nodiscard]] RadialZernikeSpec radial() const noexcept { return {n, m}; }

  friend auto operator<=>(const FZIndex&, const FZIndex&) = default;
};

// Retains every index with n <= n_max.
class FZTruncation {
 public:
  FZTruncation() = default;
  // Throws IndexError when n_max is negative or above kMaxZernikeDegree.
  explicit FZTruncation(int n_max);

  [[nodiscard]] int n_max() const noexcept { return n_max_; }
  // (n_max+1)(n_max+2)/2
  [[nodiscard]] std::size_t size() const noexcept;
  [[nodiscard]] bool contains(FZIndex idx) const noexcept;
  // Position of idx in the canonical enumeration order.
  [[nodiscard]] std::size_t linear_index(FZIndex idx) const;

  friend bool operator==(const FZTruncation&, const FZTruncation&) = default;

 private:
  int n_max_ = 0;
};

// Ascending n, then ascending m over {-n, -n+2, ..., n}.
[[nodiscard]] std::vector<FZIndex> enumerate_indices(FZTruncation trunc);

// V^a_{nm}(r, theta) = a^{-1} sqrt((n+1)/pi) Z_{nm}(r/a) e^{i m theta}.
// Throws DomainError when r is outside [0, a].
[[nodiscard]] cplx basis_eval(FZIndex idx, double a, double r, double theta);

// Integral over the disk of radius a of e^{i rfreq s cos(alpha - theta)}
// conj(V^a_{nm}(s, theta)) s ds dtheta, in closed form:
//   2 sqrt(pi (n+1)) i^m (-1)^{(n-m)/2} J_{n+1}(a rfreq) / rfreq e^{-i m alpha}.
// rfreq == 0 throws DomainError; use dc_basis_integral there.
[[nodiscard]] cplx plane_wave_basis_inner(FZIndex idx, double a, double rfreq, double alpha);

// The rfreq -> 0 limit of the above: a sqrt(pi) when (n, m) = (0, 0), else 0.
[[nodiscard]] cplx dc_basis_integral(FZIndex idx, double a);

// i^p for integer p (exact).
[[nodiscard]] cplx i_pow(int p) noexcept;

// (-1)^p for integer p.
[[nodiscard]] constexpr double neg_one_pow(int p) noexcept { return (p % 2 == 0) ? 1.0 : -1.0; }

}  // namespace fzc
