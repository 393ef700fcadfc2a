#include "fzc/grid_fourier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "detail/fft.hpp"
#include "fzc/errors.hpp"

namespace fzc {

bool is_power_of_two(int n) noexcept { return n >= 2 && (n & (n - 1)) == 0; }

GridFunction::GridFunction(double a, int n, double support_radius, std::vector<cplx> values)
    : a_(a), n_(n), support_(support_radius), values_(std::move(values)) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("GridFunction: a must be positive");
  if (!is_power_of_two(n)) {
    throw DomainError(fmt::format("GridFunction: N={} is not a power of two", n));
  }
  if (!(support_radius >= 0.0 && support_radius <= a)) {
    throw DomainError(fmt::format("GridFunction: support radius {} outside [0, {}]",
                                  support_radius, a));
  }
  if (values_.size() != static_cast<std::size_t>(n) * n) {
    throw DomainError("GridFunction: value count does not match N*N");
  }
}

GridFunction GridFunction::zeros(double a, int n, double support_radius) {
  return {a, n, support_radius,
          std::vector<cplx>(static_cast<std::size_t>(n) * static_cast<std::size_t>(n))};
}

cplx GridFunction::integral() const noexcept {
  cplx sum{};
  for (const auto& v : values_) sum += v;
  return sum * cell_area();
}

double GridFunction::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

bool GridFunction::is_real() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](const cplx& v) { return v.imag() == 0.0; });
}

double GridFunction::max_abs_outside(double radius) const noexcept {
  const double r2 = radius * radius;
  double m = 0.0;
  for (int i2 = 0; i2 < n_; ++i2) {
    const double y = center(i2);
    for (int i1 = 0; i1 < n_; ++i1) {
      const double x = center(i1);
      if (x * x + y * y > r2) m = std::max(m, std::abs((*this)(i1, i2)));
    }
  }
  return m;
}

cplx GridFunction::interpolate(double x1, double x2) const noexcept {
  const double h = spacing();
  const double u = (x1 + a_) / h - 0.5;
  const double v = (x2 + a_) / h - 0.5;
  const int i = static_cast<int>(std::floor(u));
  const int j = static_cast<int>(std::floor(v));
  const double tu = u - i;
  const double tv = v - j;
  auto sample = [&](int p, int q) -> cplx {
    if (p < 0 || q < 0 || p >= n_ || q >= n_) return {};
    return (*this)(p, q);
  };
  return (1 - tu) * (1 - tv) * sample(i, j) + tu * (1 - tv) * sample(i + 1, j) +
         (1 - tu) * tv * sample(i, j + 1) + tu * tv * sample(i + 1, j + 1);
}

FourierTable::FourierTable(double a, int kmax, FourierSource source, std::vector<cplx> coeffs)
    : a_(a), kmax_(kmax), source_(source), coeffs_(std::move(coeffs)) {
  if (!(a > 0.0)) throw DomainError("FourierTable: a must be positive");
  if (kmax < 1) throw GeometryError("FourierTable: kmax must be at least 1");
  const auto s = static_cast<std::size_t>(side());
  if (coeffs_.size() != s * s) throw GeometryError("FourierTable: coefficient count mismatch");
}

FourierTable FourierTable::zeros(double a, int kmax, FourierSource source) {
  const auto s = static_cast<std::size_t>(2 * kmax + 1);
  return {a, kmax, source, std::vector<cplx>(s * s)};
}

double FourierTable::hermitian_defect() const noexcept {
  double worst = 0.0;
  for (int k2 = -kmax_; k2 <= kmax_; ++k2) {
    for (int k1 = -kmax_; k1 <= kmax_; ++k1) {
      const LatticePoint k{k1, k2};
      worst = std::max(worst, std::abs(at(-k) - std::conj(at(k))));
    }
  }
  return worst;
}

GridFunction sample_function(const AnalyticFunction& f, double a, int n, double support_radius) {
  auto grid = GridFunction::zeros(a, n, support_radius);  // validates geometry
  std::vector<cplx> values(static_cast<std::size_t>(n) * n);
  const double r2 = support_radius * support_radius;
  if (!f.is_zero()) {
    for (int i2 = 0; i2 < n; ++i2) {
      const double y = grid.center(i2);
      for (int i1 = 0; i1 < n; ++i1) {
        const double x = grid.center(i1);
        if (x * x + y * y <= r2) values[static_cast<std::size_t>(i2) * n + i1] = f(x, y);
      }
    }
  }
  return {a, n, support_radius, std::move(values)};
}

GridFunction restrict_to_disk(const GridFunction& g, double radius) {
  if (!(radius >= 0.0 && radius <= g.a())) {
    throw DomainError(fmt::format("restrict_to_disk: radius {} outside [0, {}]", radius, g.a()));
  }
  const int n = g.size();
  std::vector<cplx> values(g.values().begin(), g.values().end());
  const double r2 = radius * radius;
  for (int i2 = 0; i2 < n; ++i2) {
    const double y = g.center(i2);
    for (int i1 = 0; i1 < n; ++i1) {
      const double x = g.center(i1);
      if (x * x + y * y > r2) values[static_cast<std::size_t>(i2) * n + i1] = {};
    }
  }
  return {g.a(), n, std::min(radius, g.support_radius()), std::move(values)};
}

GridFunction embed_zero_padded(const GridFunction& g, double a_target, int n_target) {
  const double b = g.a();
  if (std::abs(a_target - 2.0 * b) > 1e-12 * b) {
    throw GeometryError(
        fmt::format("embed_zero_padded: target half-width {} must equal 2b = {}", a_target, 2 * b));
  }
  if (!is_power_of_two(n_target) || n_target < 4) {
    throw GeometryError(fmt::format("embed_zero_padded: N_target={} is not a power of two >= 4",
                                    n_target));
  }
  const int n = g.size();
  const int begin = n_target / 4;  // first target cell of [-b, b]
  const int span = n_target / 2;   // target cells across [-b, b]
  std::vector<cplx> values(static_cast<std::size_t>(n_target) * n_target);
  auto put = [&](int t1, int t2, cplx v) {
    values[static_cast<std::size_t>(t2 + begin) * n_target + (t1 + begin)] = v;
  };
  if (span >= n) {
    const int rep = span / n;  // target cells per source cell, per axis
    for (int t2 = 0; t2 < span; ++t2) {
      for (int t1 = 0; t1 < span; ++t1) put(t1, t2, g(t1 / rep, t2 / rep));
    }
  } else {
    const int agg = n / span;  // source cells per target cell, per axis
    const double inv = 1.0 / (static_cast<double>(agg) * agg);
    for (int t2 = 0; t2 < span; ++t2) {
      for (int t1 = 0; t1 < span; ++t1) {
        cplx sum{};
        for (int s2 = 0; s2 < agg; ++s2) {
          for (int s1 = 0; s1 < agg; ++s1) sum += g(t1 * agg + s1, t2 * agg + s2);
        }
        put(t1, t2, sum * inv);
      }
    }
  }
  GridFunction embedded{a_target, n_target, b, std::move(values)};
  return restrict_to_disk(embedded, b);
}

double disk_relative_l2(const GridFunction& g, const GridFunction& ref, double radius) {
  if (g.size() != ref.size() || g.a() != ref.a()) {
    throw GeometryError("disk_relative_l2: grids differ in a or N");
  }
  const int n = g.size();
  const double r2 = radius * radius;
  double num = 0.0;
  double den = 0.0;
  for (int i2 = 0; i2 < n; ++i2) {
    const double y = g.center(i2);
    for (int i1 = 0; i1 < n; ++i1) {
      const double x = g.center(i1);
      if (x * x + y * y > r2) continue;
      num += std::norm(g(i1, i2) - ref(i1, i2));
      den += std::norm(ref(i1, i2));
    }
  }
  if (den == 0.0) return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::sqrt(num / den);
}

FourierTable fourier_coeffs(const GridFunction& g, int kmax) {
  const int n = g.size();
  if (kmax < 1 || kmax > n / 2 - 1) {
    throw GeometryError(fmt::format("fourier_coeffs: kmax={} outside [1, N/2-1={}]", kmax,
                                    n / 2 - 1));
  }
  std::vector<cplx> spectrum(g.values().begin(), g.values().end());
  detail::fft2d(spectrum, n, -1);
  const int side = 2 * kmax + 1;
  std::vector<cplx> coeffs(static_cast<std::size_t>(side) * side);
  const double area = g.cell_area();
  for (int k2 = -kmax; k2 <= kmax; ++k2) {
    for (int k1 = -kmax; k1 <= kmax; ++k1) {
      const int s = k1 + k2;
      // cell centers sit half a cell past the DFT sample points
      const cplx phase = std::polar(area * ((s % 2 == 0) ? 1.0 : -1.0),
                                    -std::numbers::pi * s / n);
      const int r1 = (k1 + n) % n;
      const int r2 = (k2 + n) % n;
      coeffs[static_cast<std::size_t>(k2 + kmax) * side + (k1 + kmax)] =
          phase * spectrum[static_cast<std::size_t>(r2) * n + r1];
    }
  }
  return {g.a(), kmax, FourierSource::kRectangular, std::move(coeffs)};
}

FourierTable polar_fourier_coeffs(const AnalyticFunction& f, double b, double a, int kmax,
                                  PolarQuadrature quad) {
  if (!(b > 0.0) || std::abs(a - 2.0 * b) > 1e-12 * a) {
    throw GeometryError(fmt::format("polar_fourier_coeffs: need b = a/2, got a={}, b={}", a, b));
  }
  if (kmax < 1) throw GeometryError("polar_fourier_coeffs: kmax must be at least 1");
  if (f.is_zero()) return FourierTable::zeros(a, kmax, FourierSource::kPolar);

  const auto radial = gauss_legendre_composite(quad.radial, f.radial_intervals(b));
  const auto angular = periodic_trapezoid(quad.angular);

  // Quadrature points with nonzero weight * value.
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<cplx> wf;
  xs.reserve(radial.nodes.size() * angular.nodes.size());
  ys.reserve(xs.capacity());
  wf.reserve(xs.capacity());
  for (std::size_t j = 0; j < radial.nodes.size(); ++j) {
    const double r = radial.nodes[j];
    for (std::size_t t = 0; t < angular.nodes.size(); ++t) {
      const double th = angular.nodes[t];
      const double x = r * std::cos(th);
      const double y = r * std::sin(th);
      const cplx v = f(x, y) * (radial.weights[j] * r * angular.weights[t]);
      if (v == cplx{}) continue;
      xs.push_back(x);
      ys.push_back(y);
      wf.push_back(v);
    }
  }

  const int side = 2 * kmax + 1;
  using Mat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic>;
  Mat result = Mat::Zero(side, side);
  const std::size_t chunk = 4096;
  const double scale = std::numbers::pi / a;
  for (std::size_t lo = 0; lo < xs.size(); lo += chunk) {
    const std::size_t hi = std::min(xs.size(), lo + chunk);
    const auto cols = static_cast<Eigen::Index>(hi - lo);
    Mat left(side, cols);   // e^{-i pi k1 x / a}
    Mat right(cols, side);  // w f e^{-i pi k2 y / a}
    for (std::size_t p = lo; p < hi; ++p) {
      const auto c = static_cast<Eigen::Index>(p - lo);
      const cplx bx = std::polar(1.0, -scale * xs[p]);
      const cplx by = std::polar(1.0, -scale * ys[p]);
      cplx px{1.0, 0.0};
      cplx py{1.0, 0.0};
      left(kmax, c) = px;
      right(c, kmax) = wf[p];
      for (int k = 1; k <= kmax; ++k) {
        px *= bx;
        py *= by;
        left(kmax + k, c) = px;
        left(kmax - k, c) = std::conj(px);
        right(c, kmax + k) = wf[p] * py;
        right(c, kmax - k) = wf[p] * std::conj(py);
      }
    }
    result.noalias() += left * right;
  }
  // Column-major (k1 row, k2 column) matches the table's k1-fastest layout.
  std::vector<cplx> coeffs(result.data(), result.data() + static_cast<std::size_t>(side) * side);
  return {a, kmax, FourierSource::kPolar, std::move(coeffs)};
}

}  // namespace fzc
