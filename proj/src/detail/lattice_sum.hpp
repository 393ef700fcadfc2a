#pragma once

// Shared summation core for the lattice kernel sums
//   C(n, m) = sum_k c_a(k; n, m) v(k).

#include <cstdint>
#include <functional>
#include <vector>

#include "fzc/fz_basis.hpp"
#include "fzc/lattice.hpp"

namespace fzc::detail {

// Radial parts J_{n+1}(pi rho) / (2 a sqrt(pi) rho) for n = 0..n_max, one
// row per distinct |k|; the k = 0 row holds the limit sqrt(pi)/(4a) at n = 0.
class RadialRows {
 public:
  RadialRows(double a, int n_max) : a_(a), width_(n_max + 1) {}
  std::uint32_t add(double rho);
  [[nodiscard]] double at(std::uint32_t row, int n) const noexcept {
    return data_[static_cast<std::size_t>(row) * width_ + n];
  }

 private:
  double a_;
  int width_;
  std::vector<double> data_;
};

struct LatticeTerm {
  double phi;
  std::uint32_t row;
  cplx value;
};

struct TermList {
  RadialRows rows;
  std::vector<LatticeTerm> terms;
};

using LatticeValue = std::function<cplx(LatticePoint)>;

// Box |k1|, |k2| <= kmax in row-major order (k2 outer, k1 inner).
[[nodiscard]] TermList flat_terms(double a, int kmax, int n_max, const LatticeValue& value);
// Shell-major ascending r2, angle-ascending within a shell.
[[nodiscard]] TermList shell_terms(double a, const std::vector<PolarShell>& shells, int n_max,
                                   const LatticeValue& value);

// Compensated sum per index in canonical order. Zero-valued terms are skipped.
[[nodiscard]] std::vector<cplx> kernel_sums(const TermList& list, FZTruncation trunc);

// sqrt(n+1) i^m (-1)^{(n-m)/2}
[[nodiscard]] cplx kernel_prefactor(FZIndex idx) noexcept;

}  // namespace fzc::detail
