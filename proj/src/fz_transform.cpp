#include "fzc/fz_transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include <fmt/format.h>

#include "detail/lattice_sum.hpp"
#include "fzc/errors.hpp"
#include "fzc/parallel.hpp"
#include "fzc/special_functions.hpp"

namespace fzc {

FZCoeffTable::FZCoeffTable(double a, FZTruncation trunc, std::vector<cplx> coeffs)
    : a_(a), trunc_(trunc), coeffs_(std::move(coeffs)) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("FZCoeffTable: a must be positive");
  if (coeffs_.size() != trunc.size()) {
    throw DomainError(fmt::format("FZCoeffTable: {} coefficients for a truncation of size {}",
                                  coeffs_.size(), trunc.size()));
  }
}

FZCoeffTable FZCoeffTable::zeros(double a, FZTruncation trunc) {
  return {a, trunc, std::vector<cplx>(trunc.size())};
}

cplx FZCoeffTable::at(FZIndex idx) const { return coeffs_[trunc_.linear_index(idx)]; }

double FZCoeffTable::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double FZCoeffTable::hermitian_defect() const noexcept {
  double worst = 0.0;
  for (const auto idx : enumerate_indices(trunc_)) {
    const FZIndex mirror{idx.n, -idx.m};
    worst = std::max(worst, std::abs(at(mirror) - std::conj(at(idx))));
  }
  return worst;
}

cplx c_kernel(LatticePoint k, FZIndex idx, double a) {
  if (!idx.valid()) throw IndexError(fmt::format("c_kernel: invalid index ({}, {})", idx.n, idx.m));
  if (!(a > 0.0)) throw DomainError("c_kernel: a must be positive");
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  if (k.k1 == 0 && k.k2 == 0) {
    return (idx.n == 0 && idx.m == 0) ? cplx{sqrt_pi / (4.0 * a), 0.0} : cplx{};
  }
  const auto pc = polar_of(k);
  const double radial = bessel_j(idx.n + 1, std::numbers::pi * pc.rho) / (2.0 * a * sqrt_pi * pc.rho);
  return detail::kernel_prefactor(idx) * radial * std::polar(1.0, -idx.m * pc.phi);
}

FZCoeffTable fz_from_fourier(const FourierTable& table, FZTruncation trunc) {
  const auto list = detail::flat_terms(table.a(), table.kmax(), trunc.n_max(),
                                       [&](LatticePoint k) { return table.at(k); });
  return {table.a(), trunc, detail::kernel_sums(list, trunc)};
}

FZCoeffTable fz_from_fourier_polar(const FourierTable& table, const std::vector<PolarShell>& shells,
                                   FZTruncation trunc) {
  std::set<LatticePoint> seen;
  for (const auto& shell : shells) {
    for (const auto& k : shell.points) {
      if (!table.contains(k) || !seen.insert(k).second) {
        throw GeometryError(fmt::format(
            "fz_from_fourier_polar: shell point ({}, {}) outside the box or repeated", k.k1, k.k2));
      }
    }
  }
  const auto side = static_cast<std::size_t>(table.side());
  if (seen.size() != side * side) {
    throw GeometryError("fz_from_fourier_polar: shells do not cover the table's box");
  }
  const auto list = detail::shell_terms(table.a(), shells, trunc.n_max(),
                                        [&](LatticePoint k) { return table.at(k); });
  return {table.a(), trunc, detail::kernel_sums(list, trunc)};
}

FZCoeffTable fz_direct(const AnalyticFunction& f, double a, FZTruncation trunc, PolarQuadrature quad,
                       double support) {
  if (!(a > 0.0)) throw DomainError("fz_direct: a must be positive");
  if (support < 0.0 || support > a) support = a;
  if (f.is_zero() || support == 0.0) return FZCoeffTable::zeros(a, trunc);

  const int n_max = trunc.n_max();
  const int width = 2 * n_max + 1;
  const auto radial = gauss_legendre_composite(quad.radial, f.radial_intervals(support));
  const auto angular = periodic_trapezoid(quad.angular);
  const std::size_t nr = radial.nodes.size();
  const std::size_t nt = angular.nodes.size();

  // e^{-i m theta_t} for m = 0..n_max
  std::vector<cplx> phase(nt * (n_max + 1));
  for (std::size_t t = 0; t < nt; ++t) {
    for (int m = 0; m <= n_max; ++m) phase[t * (n_max + 1) + m] = std::polar(1.0, -m * angular.nodes[t]);
  }

  // Angular moments F_m(r_j) = sum_t w_t f(r_j, theta_t) e^{-i m theta_t}
  std::vector<cplx> moments(nr * width);
  parallel_for(nr, [&](std::size_t j) {
    const double r = radial.nodes[j];
    std::vector<cplx> acc(width);
    for (std::size_t t = 0; t < nt; ++t) {
      const cplx v = f.polar(r, angular.nodes[t]) * angular.weights[t];
      if (v == cplx{}) continue;
      const cplx* ph = &phase[t * (n_max + 1)];
      acc[n_max] += v;
      for (int m = 1; m <= n_max; ++m) {
        acc[n_max + m] += v * ph[m];
        acc[n_max - m] += v * std::conj(ph[m]);
      }
    }
    std::copy(acc.begin(), acc.end(), moments.begin() + static_cast<std::ptrdiff_t>(j * width));
  });

  const auto indices = enumerate_indices(trunc);
  std::vector<cplx> coeffs(indices.size());
  parallel_for(indices.size(), [&](std::size_t i) {
    const FZIndex idx = indices[i];
    const double norm = std::sqrt((idx.n + 1) / std::numbers::pi) / a;
    CompensatedSum sum;
    for (std::size_t j = 0; j < nr; ++j) {
      const double r = radial.nodes[j];
      const double z = zernike_radial(idx.radial(), std::min(1.0, r / a));
      sum.add(moments[j * width + n_max + idx.m] * (radial.weights[j] * r * norm * z));
    }
    coeffs[i] = sum.value();
  });
  return {a, trunc, std::move(coeffs)};
}

std::vector<cplx> reconstruct(const FZCoeffTable& table, std::span<const DiskPoint> points) {
  const double a = table.a();
  for (const auto& p : points) {
    if (!(p.r >= 0.0 && p.r <= a)) {
      throw DomainError(fmt::format("reconstruct: point radius {} outside [0, {}]", p.r, a));
    }
  }
  const auto indices = enumerate_indices(table.trunc());
  std::vector<double> norm(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    norm[i] = std::sqrt((indices[i].n + 1) / std::numbers::pi) / a;
  }
  const auto coeffs = table.values();
  std::vector<cplx> out(points.size());
  parallel_for(points.size(), [&](std::size_t p) {
    const double rho = std::min(1.0, points[p].r / a);
    const double th = points[p].theta;
    cplx sum{};
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (coeffs[i] == cplx{}) continue;
      const FZIndex idx = indices[i];
      const double z = zernike_radial(idx.radial(), rho);
      sum += coeffs[i] * (norm[i] * z) * std::polar(1.0, idx.m * th);
    }
    out[p] = sum;
  });
  return out;
}

GridFunction render_on_grid(const FZCoeffTable& table, int n) {
  const double a = table.a();
  auto grid = GridFunction::zeros(a, n, a);
  std::vector<DiskPoint> points;
  std::vector<std::size_t> cells;
  for (int i2 = 0; i2 < n; ++i2) {
    const double y = grid.center(i2);
    for (int i1 = 0; i1 < n; ++i1) {
      const double x = grid.center(i1);
      const double r = std::hypot(x, y);
      if (r > a) continue;
      double th = std::atan2(y, x);
      if (th < 0.0) th += 2.0 * std::numbers::pi;
      points.push_back({r, th});
      cells.push_back(static_cast<std::size_t>(i2) * n + i1);
    }
  }
  const auto vals = reconstruct(table, points);
  std::vector<cplx> values(static_cast<std::size_t>(n) * n);
  for (std::size_t i = 0; i < cells.size(); ++i) values[cells[i]] = vals[i];
  return {a, n, a, std::move(values)};
}

CoeffComparison compare_coeffs(const FZCoeffTable& got, const FZCoeffTable& want, double rel_tol,
                               double abs_tol, double threshold) {
  if (!(got.trunc() == want.trunc())) throw DomainError("compare_coeffs: truncations differ");
  CoeffComparison out;
  for (const auto idx : enumerate_indices(want.trunc())) {
    const cplx w = want.at(idx);
    const double err = std::abs(got.at(idx) - w);
    if (std::abs(w) > threshold) {
      ++out.dominant;
      const double rel = err / std::abs(w);
      if (rel > out.worst_relative) {
        out.worst_relative = rel;
        out.worst_relative_at = idx;
      }
    } else if (err > out.worst_absolute) {
      out.worst_absolute = err;
      out.worst_absolute_at = idx;
    }
  }
  out.pass = out.worst_relative <= rel_tol && out.worst_absolute <= abs_tol;
  return out;
}

}  // namespace fzc
