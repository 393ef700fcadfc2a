#pragma once

#include <vector>

namespace fzc {

// Highest Zernike degree the library evaluates. Factorial ratios stay exact
// in 64-bit integers up to here.
inline constexpr int kMaxZernikeDegree = 30;

// Degree/order pair of a radial Zernike polynomial Z_{nm}.
struct RadialZernikeSpec {
  int n = 0;
  int m = 0;

  // True when |m| <= n and n - |m| is even.
  [[nodiscard]] bool valid() const noexcept;
};

// Bessel function of the first kind J_q(x) for integer order q.
//
// Ascending series for |x| <= 12, Miller backward recurrence normalized by
// the Neumann sum J_0 + 2 sum J_{2k} = 1 beyond. Negative orders and
// arguments are reduced with J_{-q} = (-1)^q J_q and J_q(-x) = (-1)^q J_q(x),
// so the reflection identity holds bit for bit.
//
// Throws DomainError for non-finite x.
[[nodiscard]] double bessel_j(int q, double x);

// J_0(x), ..., J_max_order(x) in one pass.
[[nodiscard]] std::vector<double> bessel_j_sequence(int max_order, double x);

// Z_{nm}(r) on [0, 1]. Throws IndexError for an invalid spec or n above
// kMaxZernikeDegree, DomainError for r outside [0, 1].
[[nodiscard]] double zernike_radial(RadialZernikeSpec spec, double r);

// (sqrt(2n+2)/a) Z_{nm}(r/a): orthonormal under r dr on [0, a].
[[nodiscard]] double zernike_radial_scaled(RadialZernikeSpec spec, double a,
                                           double r);

// Integer coefficients of Z_{nm}(r) = sum_j coeff[j] r^{n-2j}, signs included.
[[nodiscard]] std::vector<long long> zernike_radial_coefficients(
    RadialZernikeSpec spec);

}  // namespace fzc
