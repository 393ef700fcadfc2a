#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fzc/descriptor.hpp"
#include "fzc/errors.hpp"
#include "oracles.hpp"

using namespace fzc;

TEST_CASE("descriptor values") {
  CHECK(AnalyticFunction::parse("zero")(0.1, 0.2) == cplx{});
  CHECK(AnalyticFunction::parse("zero").is_zero());
  const auto disk = AnalyticFunction::parse("disk_indicator:0.5");
  CHECK(disk(0.3, 0.3).real() == 1.0);
  CHECK(disk(0.4, 0.4).real() == 0.0);
  CHECK(disk.radial_breakpoints() == std::vector<double>{0.5});
  const auto g = AnalyticFunction::parse("gauss_bump:0.2,0.1,-0.1");
  CHECK(g(0.1, -0.1).real() == 1.0);
  CHECK(g(0.3, -0.1).real() == doctest::Approx(std::exp(-0.04 / 0.08)).epsilon(1e-14));
  const auto ch = AnalyticFunction::parse("cosine_hat:2");
  CHECK(ch(0.0, 0.0).real() == 1.0);
  CHECK(std::abs(ch(0.125, 0.0).real() - 0.5) < 1e-15);
  CHECK(ch(0.3, 0.0).real() == 0.0);
  const auto z = AnalyticFunction::parse("zernike:2,2,0.5");
  CHECK_FALSE(z.real_valued());
  CHECK(std::abs(z(0.1, 0.2) - oracle::basis(2, 2, 0.5, std::hypot(0.1, 0.2), std::atan2(0.2, 0.1))) <
        1e-13);
  CHECK(z(0.5, 0.5) == cplx{});
  const auto pb = AnalyticFunction::parse("poly_bump:0,0");
  CHECK(std::abs(pb(0.0, 0.0).real() - 2.0 / std::sqrt(std::numbers::pi)) < 1e-14);
  CHECK(pb(0.5, 0.0) == cplx{});
  CHECK(std::abs(pb.polar(0.2, 1.0) - pb(0.2 * std::cos(1.0), 0.2 * std::sin(1.0))) < 1e-15);
}

TEST_CASE("descriptor errors") {
  for (const char* bad : {"", "nope", "disk_indicator", "disk_indicator:-1", "gauss_bump:0,0,0",
                          "zernike:3,0", "cosine_hat:x", "poly_bump:2,1"}) {
    CHECK_THROWS_AS((void)AnalyticFunction::parse(bad), DomainError);
  }
}

TEST_CASE("radial_intervals") {
  const auto f = AnalyticFunction::parse("disk_indicator:0.25");
  CHECK(f.radial_intervals(1.0) == std::vector<double>{0.0, 0.25, 1.0});
  CHECK(f.radial_intervals(0.2) == std::vector<double>{0.0, 0.2});
  const auto c = AnalyticFunction::custom([](double, double) { return cplx{1.0}; }, {0.5, 0.3, 0.5},
                                          true, "c");
  CHECK(c.radial_intervals(1.0) == std::vector<double>{0.0, 0.3, 0.5, 1.0});
  CHECK(c.text() == "c");
}
