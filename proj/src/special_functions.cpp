#include "fzc/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include <fmt/format.h>

#include "fzc/errors.hpp"

namespace fzc {
namespace {

constexpr double kSeriesLimit = 12.0;
constexpr double kRescaleAbove = 1e250;

double series_j(int q, double x) {
  const double half = 0.5 * x;
  double term = 1.0;
  for (int i = 1; i <= q; ++i) term *= half / i;
  if (term == 0.0) return 0.0;
  double sum = term;
  const double h2 = half * half;
  for (int k = 1; k < 200; ++k) {
    term *= -h2 / (static_cast<double>(k) * (k + q));
    sum += term;
    if (k > half && std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// J_0..J_max_order(x) for x > 0 by backward recurrence.
std::vector<double> miller_sequence(int max_order, double x) {
  const double top = std::max(static_cast<double>(max_order), x);
  int start = static_cast<int>(top + 30.0 + std::sqrt(60.0 * top));
  start += start % 2;
  std::vector<double> values(static_cast<std::size_t>(start) + 1, 0.0);
  double next = 0.0;  // J_{k+1}
  double cur = 1e-300;  // J_k, unnormalized
  values[start] = cur;
  double even_sum = 0.0;  // 2 * sum_{k>=1} J_{2k}
  for (int k = start; k >= 1; --k) {
    const double prev = (2.0 * k / x) * cur - next;
    next = cur;
    cur = prev;
    values[k - 1] = cur;
    if ((k - 1) % 2 == 0 && k - 1 > 0) even_sum += 2.0 * cur;
    if (std::abs(cur) > kRescaleAbove) {
      const double s = 1.0 / kRescaleAbove;
      for (int j = k - 1; j <= start; ++j) values[j] *= s;
      cur *= s;
      next *= s;
      even_sum *= s;
    }
  }
  const double norm = values[0] + even_sum;
  values.resize(static_cast<std::size_t>(max_order) + 1);
  for (double& v : values) v /= norm;
  return values;
}

double sign_for_order(int q) { return (q % 2 == 0) ? 1.0 : -1.0; }

void check_finite(double x) {
  if (!std::isfinite(x)) {
    throw DomainError("bessel_j: argument is not finite");
  }
}

unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<unsigned long long>(n - k + i) / i;
  }
  return result;
}

void check_spec(RadialZernikeSpec spec) {
  if (!spec.valid()) {
    throw IndexError(fmt::format("invalid Zernike index (n={}, m={})", spec.n, spec.m));
  }
  if (spec.n > kMaxZernikeDegree) {
    throw IndexError(fmt::format("Zernike degree {} exceeds the ceiling {}", spec.n,
                                 kMaxZernikeDegree));
  }
}

}  // namespace

bool RadialZernikeSpec::valid() const noexcept {
  const int am = std::abs(m);
  return n >= 0 && am <= n && (n - am) % 2 == 0;
}

double bessel_j(int q, double x) {
  check_finite(x);
  if (q < 0) return sign_for_order(q) * bessel_j(-q, x);
  if (x < 0.0) return sign_for_order(q) * bessel_j(q, -x);
  if (x == 0.0) return q == 0 ? 1.0 : 0.0;
  if (x <= kSeriesLimit) return series_j(q, x);
  return miller_sequence(q, x)[static_cast<std::size_t>(q)];
}

std::vector<double> bessel_j_sequence(int max_order, double x) {
  check_finite(x);
  if (max_order < 0) throw DomainError("bessel_j_sequence: negative max_order");
  const double ax = std::abs(x);
  std::vector<double> out;
  if (ax == 0.0) {
    out.assign(static_cast<std::size_t>(max_order) + 1, 0.0);
    out[0] = 1.0;
  } else if (ax <= kSeriesLimit) {
    out.resize(static_cast<std::size_t>(max_order) + 1);
    for (int q = 0; q <= max_order; ++q) out[q] = series_j(q, ax);
  } else {
    out = miller_sequence(max_order, ax);
  }
  if (x < 0.0) {
    for (int q = 1; q <= max_order; q += 2) out[q] = -out[q];
  }
  return out;
}

std::vector<long long> zernike_radial_coefficients(RadialZernikeSpec spec) {
  check_spec(spec);
  const int am = std::abs(spec.m);
  const int s = (spec.n + am) / 2;
  const int d = (spec.n - am) / 2;
  std::vector<long long> coeffs(static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) {
    // (n-j)! / (j! (s-j)! (d-j)!) as a product of two binomials
    const auto mag = binomial(spec.n - j, j) * binomial(spec.n - 2 * j, s - j);
    coeffs[j] = (j % 2 == 0 ? 1LL : -1LL) * static_cast<long long>(mag);
  }
  return coeffs;
}

double zernike_radial(RadialZernikeSpec spec, double r) {
  check_spec(spec);
  if (!(r >= 0.0 && r <= 1.0)) {
    throw DomainError(fmt::format("zernike_radial: r={} outside [0, 1]", r));
  }
  const auto coeffs = zernike_radial_coefficients(spec);
  const double t = r * r;
  double acc = static_cast<double>(coeffs[0]);
  for (std::size_t j = 1; j < coeffs.size(); ++j) {
    acc = acc * t + static_cast<double>(coeffs[j]);
  }
  double rm = 1.0;
  for (int i = 0; i < std::abs(spec.m); ++i) rm *= r;
  return acc * rm;
}

double zernike_radial_scaled(RadialZernikeSpec spec, double a, double r) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError("zernike_radial_scaled: disk radius must be positive");
  }
  check_spec(spec);
  if (!(r >= 0.0 && r <= a)) {
    throw DomainError(fmt::format("zernike_radial_scaled: r={} outside [0, {}]", r, a));
  }
  return std::sqrt(2.0 * spec.n + 2.0) / a * zernike_radial(spec, std::min(r / a, 1.0));
}

}  // namespace fzc
