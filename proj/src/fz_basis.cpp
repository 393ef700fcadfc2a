#include "fzc/fz_basis.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "fzc/errors.hpp"

namespace fzc {
namespace {

void check_index(FZIndex idx) {
  if (!idx.valid() || idx.n > kMaxZernikeDegree) {
    throw IndexError(fmt::format("invalid Fourier-Zernike index (n={}, m={})", idx.n, idx.m));
  }
}

}  // namespace

FZTruncation::FZTruncation(int n_max) : n_max_(n_max) {
  if (n_max < 0 || n_max > kMaxZernikeDegree) {
    throw IndexError(fmt::format("truncation n_max={} outside [0, {}]", n_max, kMaxZernikeDegree));
  }
}

std::size_t FZTruncation::size() const noexcept {
  const auto k = static_cast<std::size_t>(n_max_);
  return (k + 1) * (k + 2) / 2;
}

bool FZTruncation::contains(FZIndex idx) const noexcept { return idx.valid() && idx.n <= n_max_; }

std::size_t FZTruncation::linear_index(FZIndex idx) const {
  if (!contains(idx)) {
    throw IndexError(fmt::format("index (n={}, m={}) not in truncation n_max={}", idx.n, idx.m,
                                 n_max_));
  }
  const auto n = static_cast<std::size_t>(idx.n);
  return n * (n + 1) / 2 + static_cast<std::size_t>((idx.m + idx.n) / 2);
}

std::vector<FZIndex> enumerate_indices(FZTruncation trunc) {
  std::vector<FZIndex> out;
  out.reserve(trunc.size());
  for (int n = 0; n <= trunc.n_max(); ++n) {
    for (int m = -n; m <= n; m += 2) out.push_back({n, m});
  }
  return out;
}

cplx i_pow(int p) noexcept {
  switch (((p % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

cplx basis_eval(FZIndex idx, double a, double r, double theta) {
  check_index(idx);
  if (!(a > 0.0)) throw DomainError("basis_eval: disk radius must be positive");
  if (!(r >= 0.0 && r <= a)) {
    throw DomainError(fmt::format("basis_eval: r={} outside [0, {}]", r, a));
  }
  const double radial =
      std::sqrt((idx.n + 1.0) / std::numbers::pi) / a * zernike_radial(idx.radial(), r / a);
  return radial * std::polar(1.0, idx.m * theta);
}

cplx plane_wave_basis_inner(FZIndex idx, double a, double rfreq, double alpha) {
  check_index(idx);
  if (rfreq == 0.0) {
    throw DomainError("plane_wave_basis_inner: zero frequency, use dc_basis_integral");
  }
  const double mag = 2.0 * std::sqrt(std::numbers::pi * (idx.n + 1.0)) *
                     neg_one_pow((idx.n - idx.m) / 2) * bessel_j(idx.n + 1, a * rfreq) / rfreq;
  return mag * i_pow(idx.m) * std::polar(1.0, -idx.m * alpha);
}

cplx dc_basis_integral(FZIndex idx, double a) {
  check_index(idx);
  if (idx.n == 0) return {a * std::sqrt(std::numbers::pi), 0.0};
  return {0.0, 0.0};
}

}  // namespace fzc
