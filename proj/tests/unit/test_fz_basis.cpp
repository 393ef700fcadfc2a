#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fzc/errors.hpp"
#include "fzc/fz_basis.hpp"
#include "oracles.hpp"

using namespace fzc;

TEST_CASE("enumerate_indices order and count") {
  const auto zero = enumerate_indices(FZTruncation(0));
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == FZIndex{0, 0});
  const auto two = enumerate_indices(FZTruncation(2));
  const std::vector<FZIndex> expect{{0, 0}, {1, -1}, {1, 1}, {2, -2}, {2, 0}, {2, 2}};
  CHECK(two == expect);
  // (21 * 22) / 2 by counting valid pairs directly
  int count = 0;
  for (int n = 0; n <= 20; ++n) {
    for (int m = -20; m <= 20; ++m) count += (std::abs(m) <= n && (n - std::abs(m)) % 2 == 0) ? 1 : 0;
  }
  CHECK(enumerate_indices(FZTruncation(20)).size() == static_cast<std::size_t>(count));
  CHECK(FZTruncation(20).size() == 231);
}

TEST_CASE("linear_index follows the enumeration") {
  const FZTruncation t(9);
  const auto idx = enumerate_indices(t);
  for (std::size_t i = 0; i < idx.size(); ++i) CHECK(t.linear_index(idx[i]) == i);
  CHECK_THROWS_AS((void)t.linear_index({10, 0}), IndexError);
  CHECK_THROWS_AS(FZTruncation(-1), IndexError);
  CHECK_THROWS_AS(FZTruncation(31), IndexError);
}

TEST_CASE("basis_eval examples") {
  CHECK(std::abs(basis_eval({0, 0}, 1.0, 0.4, 1.1) - 1.0 / std::sqrt(std::numbers::pi)) < 1e-15);
  CHECK(std::abs(basis_eval({1, 1}, 1.0, 0.5, 0.0) - 0.5 * std::sqrt(2.0 / std::numbers::pi)) < 1e-15);
  for (const auto idx : enumerate_indices(FZTruncation(8))) {
    const cplx v = basis_eval(idx, 1.5, 0.8, 2.3);
    CHECK(std::abs(basis_eval({idx.n, -idx.m}, 1.5, 0.8, 2.3) - std::conj(v)) < 1e-15);
    CHECK(std::abs(v - oracle::basis(idx.n, idx.m, 1.5, 0.8, 2.3)) < 1e-13);
  }
  CHECK_THROWS_AS((void)basis_eval({2, 0}, 1.0, 1.2, 0.0), DomainError);
  CHECK_THROWS_AS((void)basis_eval({2, 1}, 1.0, 0.2, 0.0), IndexError);
}

TEST_CASE("orthonormality over n <= 10 with the polar measure r dr dtheta") {
  const auto rq = oracle::gauss_legendre(64, 0.0, 2.0);
  const auto aq = oracle::trapezoid(64);
  const auto idx = enumerate_indices(FZTruncation(10));
  double worst = 0.0;
  for (const auto p : idx) {
    for (const auto q : idx) {
      if (q < p) continue;
      cplx sum{};
      for (std::size_t j = 0; j < rq.x.size(); ++j) {
        for (std::size_t t = 0; t < aq.x.size(); ++t) {
          sum += basis_eval(p, 2.0, rq.x[j], aq.x[t]) * std::conj(basis_eval(q, 2.0, rq.x[j], aq.x[t])) *
                 (rq.w[j] * aq.w[t] * rq.x[j]);
        }
      }
      worst = std::max(worst, std::abs(sum - (p == q ? 1.0 : 0.0)));
    }
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("plane_wave_basis_inner examples") {
  const cplx v = plane_wave_basis_inner({0, 0}, 1.0, std::numbers::pi, 0.0);
  CHECK(std::abs(v - 2.0 * std::sqrt(std::numbers::pi) * oracle::bessel_j(1, std::numbers::pi) /
                         std::numbers::pi) < 1e-14);
  for (const FZIndex idx : {FZIndex{3, 1}, FZIndex{4, -2}, FZIndex{5, 5}}) {
    const cplx a = plane_wave_basis_inner(idx, 1.3, 2.0, 0.1) * std::polar(1.0, idx.m * 0.1);
    const cplx b = plane_wave_basis_inner(idx, 1.3, 2.0, 2.9) * std::polar(1.0, idx.m * 2.9);
    CHECK(std::abs(a - b) < 1e-14);
  }
  CHECK_THROWS_AS((void)plane_wave_basis_inner({0, 0}, 1.0, 0.0, 0.0), DomainError);
}

TEST_CASE("plane_wave_basis_inner matches 2D quadrature, including negative m") {
  const auto rq = oracle::gauss_legendre(256, 0.0, 1.0);
  const auto aq = oracle::trapezoid(256);
  for (const FZIndex idx : {FZIndex{2, 0}, FZIndex{3, -1}, FZIndex{4, -4}, FZIndex{6, 2}}) {
    const double freq = 2.0;
    const double alpha = 0.3;
    cplx sum{};
    for (std::size_t j = 0; j < rq.x.size(); ++j) {
      for (std::size_t t = 0; t < aq.x.size(); ++t) {
        const double s = rq.x[j];
        const double th = aq.x[t];
        sum += std::polar(1.0, freq * s * std::cos(alpha - th)) *
               std::conj(oracle::basis(idx.n, idx.m, 1.0, s, th)) * (rq.w[j] * aq.w[t] * s);
      }
    }
    CHECK(std::abs(sum - plane_wave_basis_inner(idx, 1.0, freq, alpha)) <= 1e-8);
  }
}

TEST_CASE("dc_basis_integral") {
  CHECK(std::abs(dc_basis_integral({0, 0}, 1.0) - std::sqrt(std::numbers::pi)) < 1e-15);
  CHECK(std::abs(dc_basis_integral({0, 0}, 2.5) - 2.5 * std::sqrt(std::numbers::pi)) < 1e-14);
  CHECK(dc_basis_integral({2, 0}, 1.0) == cplx{});
  CHECK(dc_basis_integral({3, 1}, 2.0) == cplx{});
  // quadrature oracle for (2,0): orthogonal to the constant
  const auto rq = oracle::gauss_legendre(16, 0.0, 1.0);
  double sum = 0.0;
  for (std::size_t j = 0; j < rq.x.size(); ++j) {
    sum += 2.0 * std::numbers::pi * rq.w[j] * rq.x[j] * oracle::basis(2, 0, 1.0, rq.x[j], 0.0).real();
  }
  CHECK(std::abs(sum) < 1e-14);
}

TEST_CASE("Jacobi-Anger-Zernike partial sum converges to the plane wave") {
  // (r, s, alpha, theta) = (2.0, 0.6, 0.9, 2.2), a = 1. Terms with n > 30
  // carry J_{n+1}(2) < 1e-30 and lie below the degree ceiling.
  CHECK(std::abs(oracle::bessel_j(32, 2.0)) < 1e-30);
  const double r = 2.0;
  const double s = 0.6;
  const double alpha = 0.9;
  const double theta = 2.2;
  cplx sum{};
  for (int n = 0; n <= kMaxZernikeDegree; ++n) {
    for (int m = -n; m <= n; m += 2) {
      sum += plane_wave_basis_inner({n, m}, 1.0, r, alpha) * basis_eval({n, m}, 1.0, s, theta);
    }
  }
  CHECK(std::abs(sum - std::polar(1.0, r * s * std::cos(alpha - theta))) <= 1e-6);
}

TEST_CASE("i_pow and neg_one_pow") {
  CHECK(i_pow(0) == cplx{1, 0});
  CHECK(i_pow(1) == cplx{0, 1});
  CHECK(i_pow(-1) == cplx{0, -1});
  CHECK(i_pow(6) == cplx{-1, 0});
  CHECK(neg_one_pow(-3) == -1.0);
  CHECK(neg_one_pow(4) == 1.0);
}
