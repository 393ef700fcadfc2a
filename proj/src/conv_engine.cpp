#include "fzc/conv_engine.hpp"

#include <cmath>
#include <set>

#include <fmt/format.h>

#include "detail/fft.hpp"
#include "detail/lattice_sum.hpp"
#include "fzc/errors.hpp"

namespace fzc {
namespace {

void require_matching(const FourierTable& t1, const FourierTable& t2) {
  if (t1.a() != t2.a() || t1.kmax() != t2.kmax()) {
    throw GeometryError(fmt::format("convolution tables differ: a {} vs {}, kmax {} vs {}", t1.a(),
                                    t2.a(), t1.kmax(), t2.kmax()));
  }
}

void require_matching(const GridFunction& g1, const GridFunction& g2) {
  if (g1.a() != g2.a() || g1.size() != g2.size()) {
    throw GeometryError(fmt::format("convolution grids differ: a {} vs {}, N {} vs {}", g1.a(),
                                    g2.a(), g1.size(), g2.size()));
  }
}

}  // namespace

FZCoeffTable conv_fz_coeffs(const FourierTable& t1, const FourierTable& t2, FZTruncation trunc) {
  require_matching(t1, t2);
  const auto list = detail::flat_terms(t1.a(), t1.kmax(), trunc.n_max(),
                                       [&](LatticePoint k) { return t1.at(k) * t2.at(k); });
  return {t1.a(), trunc, detail::kernel_sums(list, trunc)};
}

FZCoeffTable conv_fz_coeffs(const GridFunction& g1, const GridFunction& g2, int kmax,
                            FZTruncation trunc) {
  require_matching(g1, g2);
  check_half_support(g1);
  check_half_support(g2);
  return conv_fz_coeffs(fourier_coeffs(g1, kmax), fourier_coeffs(g2, kmax), trunc);
}

FZCoeffTable conv_fz_coeffs_polar(const FourierTable& t1, const FourierTable& t2,
                                  const std::vector<PolarShell>& shells, FZTruncation trunc) {
  require_matching(t1, t2);
  if (t1.source() != FourierSource::kPolar || t2.source() != FourierSource::kPolar) {
    throw GeometryError("conv_fz_coeffs_polar: both tables must come from polar quadrature");
  }
  std::set<LatticePoint> seen;
  for (const auto& shell : shells) {
    for (const auto& k : shell.points) {
      if (!t1.contains(k) || !seen.insert(k).second) {
        throw GeometryError("conv_fz_coeffs_polar: shell point outside the box or repeated");
      }
    }
  }
  const auto side = static_cast<std::size_t>(t1.side());
  if (seen.size() != side * side) {
    throw GeometryError("conv_fz_coeffs_polar: shells do not cover the table's box");
  }
  const auto list = detail::shell_terms(t1.a(), shells, trunc.n_max(),
                                        [&](LatticePoint k) { return t1.at(k) * t2.at(k); });
  return {t1.a(), trunc, detail::kernel_sums(list, trunc)};
}

NodeGrid convolve_nodes(const GridFunction& g1, const GridFunction& g2, NodeMethod method) {
  require_matching(g1, g2);
  const int n = g1.size();
  const double area = g1.cell_area();
  const auto count = static_cast<std::size_t>(n) * n;
  NodeGrid out{g1.a(), n, std::vector<cplx>(count)};
  // cells i and j meet at node q = i + j + 1 - N/2
  const int shift = 1 - n / 2;

  if (method == NodeMethod::kDirect) {
    for (int i2 = 0; i2 < n; ++i2) {
      for (int i1 = 0; i1 < n; ++i1) {
        const cplx v1 = g1(i1, i2);
        if (v1 == cplx{}) continue;
        for (int j2 = 0; j2 < n; ++j2) {
          const int q2 = i2 + j2 + shift;
          if (q2 < 0 || q2 >= n) continue;
          for (int j1 = 0; j1 < n; ++j1) {
            const int q1 = i1 + j1 + shift;
            if (q1 < 0 || q1 >= n) continue;
            out.values[static_cast<std::size_t>(q2) * n + q1] += area * v1 * g2(j1, j2);
          }
        }
      }
    }
    return out;
  }

  std::vector<cplx> f1(g1.values().begin(), g1.values().end());
  std::vector<cplx> f2(g2.values().begin(), g2.values().end());
  detail::fft2d(f1, n, -1);
  detail::fft2d(f2, n, -1);
  for (std::size_t i = 0; i < count; ++i) f1[i] *= f2[i];
  detail::fft2d(f1, n, +1);
  const double scale = area / static_cast<double>(count);
  for (int p2 = 0; p2 < n; ++p2) {
    const int q2 = ((p2 + shift) % n + n) % n;
    for (int p1 = 0; p1 < n; ++p1) {
      const int q1 = ((p1 + shift) % n + n) % n;
      out.values[static_cast<std::size_t>(q2) * n + q1] =
          scale * f1[static_cast<std::size_t>(p2) * n + p1];
    }
  }
  return out;
}

void check_half_support(const GridFunction& g) {
  const double b = 0.5 * g.a();
  if (g.support_radius() > b * (1.0 + 1e-12)) {
    throw SupportError(fmt::format("declared support radius {} exceeds a/2 = {}",
                                   g.support_radius(), b));
  }
  const int n = g.size();
  double mass = 0.0;
  for (int i2 = 0; i2 < n; ++i2) {
    const double y = g.center(i2);
    for (int i1 = 0; i1 < n; ++i1) {
      const double x = g.center(i1);
      if (x * x + y * y > b * b) mass += std::abs(g(i1, i2));
    }
  }
  mass *= g.cell_area();
  if (mass > 1e-12) {
    throw SupportError(fmt::format("grid carries mass {:.3e} outside B_(a/2)", mass));
  }
}

GridFunction brute_force_convolution(const GridFunction& g1, const GridFunction& g2) {
  require_matching(g1, g2);
  check_half_support(g1);
  check_half_support(g2);
  const auto nodes = convolve_nodes(g1, g2, NodeMethod::kCircular);
  const int n = g1.size();
  auto node = [&](int q1, int q2) -> cplx {
    if (q1 >= n || q2 >= n) return {};  // x = +a lies outside every support
    return nodes.at(q1, q2);
  };
  std::vector<cplx> values(static_cast<std::size_t>(n) * n);
  for (int i2 = 0; i2 < n; ++i2) {
    for (int i1 = 0; i1 < n; ++i1) {
      values[static_cast<std::size_t>(i2) * n + i1] =
          0.25 * (node(i1, i2) + node(i1 + 1, i2) + node(i1, i2 + 1) + node(i1 + 1, i2 + 1));
    }
  }
  return {g1.a(), n, g1.a(), std::move(values)};
}

SupportReport verify_support(const GridFunction& g, double radius) {
  SupportReport r;
  r.radius = radius;
  r.max_outside = g.max_abs_outside(radius);
  r.peak = g.max_abs();
  r.pass = r.max_outside <= 1e-9 * r.peak;
  return r;
}

}  // namespace fzc
