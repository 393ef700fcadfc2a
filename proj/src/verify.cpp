#include "fzc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include <fmt/format.h>

#include "fzc/basis_kernels.hpp"
#include "fzc/coeff_io.hpp"
#include "fzc/conv_engine.hpp"
#include "fzc/errors.hpp"
#include "fzc/grid_io.hpp"
#include "fzc/special_functions.hpp"

namespace fzc {
namespace {

using Checks = std::vector<CheckResult>;

void record(Checks& out, const std::string& suite, const std::string& name, double value,
            double tol) {
  out.push_back({suite, name, std::isfinite(value) && value <= tol, value, tol});
}

double max_diff(std::span<const cplx> x, std::span<const cplx> y) {
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
  return worst;
}

void special_functions_suite(Checks& out) {
  const std::string s = "special_functions";
  double refl = 0.0;
  double neumann = 0.0;
  for (double x : {0.3, 5.0, 11.9, 12.1, 40.0, 250.0}) {
    for (int q = 0; q <= 12; ++q) {
      refl = std::max(refl, std::abs(bessel_j(-q, x) - neg_one_pow(q) * bessel_j(q, x)));
      refl = std::max(refl, std::abs(bessel_j(q, -x) - neg_one_pow(q) * bessel_j(q, x)));
    }
    const auto j = bessel_j_sequence(static_cast<int>(x) + 60, x);
    double sum = j[0];
    for (std::size_t k = 2; k < j.size(); k += 2) sum += 2.0 * j[k];
    neumann = std::max(neumann, std::abs(sum - 1.0));
  }
  record(out, s, "bessel_reflection", refl, 0.0);
  record(out, s, "bessel_neumann_sum", neumann, 1e-12);
  double edge = 0.0;
  for (int n = 0; n <= kMaxZernikeDegree; ++n) {
    for (int m = -n; m <= n; m += 2) edge = std::max(edge, std::abs(zernike_radial({n, m}, 1.0) - 1.0));
  }
  record(out, s, "zernike_unit_edge", edge, 1e-12);
}

void fz_basis_suite(Checks& out) {
  const std::string s = "fz_basis";
  const auto radial = gauss_legendre(64, 0.0, 1.0);
  const auto angular = periodic_trapezoid(64);
  const auto idx = enumerate_indices(FZTruncation(6));
  double worst = 0.0;
  for (const auto p : idx) {
    for (const auto q : idx) {
      cplx sum{};
      for (std::size_t j = 0; j < radial.nodes.size(); ++j) {
        for (std::size_t t = 0; t < angular.nodes.size(); ++t) {
          const double r = radial.nodes[j];
          const double th = angular.nodes[t];
          sum += basis_eval(p, 1.0, r, th) * std::conj(basis_eval(q, 1.0, r, th)) *
                 (radial.weights[j] * angular.weights[t] * r);
        }
      }
      worst = std::max(worst, std::abs(sum - (p == q ? 1.0 : 0.0)));
    }
  }
  record(out, s, "orthonormality_n6", worst, 1e-10);

  const auto rq = gauss_legendre(128, 0.0, 1.0);
  const auto aq = periodic_trapezoid(128);
  double rel = 0.0;
  for (const FZIndex k : {FZIndex{0, 0}, FZIndex{3, 1}, FZIndex{4, -2}}) {
    const double freq = 2.5;
    const double alpha = 0.7;
    cplx sum{};
    for (std::size_t j = 0; j < rq.nodes.size(); ++j) {
      for (std::size_t t = 0; t < aq.nodes.size(); ++t) {
        const double r = rq.nodes[j];
        const double th = aq.nodes[t];
        sum += std::polar(1.0, freq * r * std::cos(alpha - th)) *
               std::conj(basis_eval(k, 1.0, r, th)) * (rq.weights[j] * aq.weights[t] * r);
      }
    }
    const cplx closed = plane_wave_basis_inner(k, 1.0, freq, alpha);
    rel = std::max(rel, std::abs(sum - closed) / std::abs(closed));
  }
  record(out, s, "zernike_bessel_identity", rel, 1e-8);
}

void lattice_suite(Checks& out) {
  const std::string s = "lattice";
  const int kmax = 16;
  const auto shells = shells_up_to(kmax);
  std::size_t count = 0;
  double bad = 0.0;
  for (const auto& sh : shells) {
    count += sh.points.size();
    for (std::size_t i = 0; i < sh.points.size(); ++i) {
      if (sh.points[i].norm2() != sh.r2) bad += 1.0;
      if (i > 0 && !(sh.angles[i] > sh.angles[i - 1])) bad += 1.0;
    }
  }
  record(out, s, "shell_consistency", bad, 0.0);
  record(out, s, "shell_cover", std::abs(static_cast<double>(count) - (2 * kmax + 1) * (2 * kmax + 1)),
         0.0);
}

void grid_fourier_suite(Checks& out) {
  const std::string s = "grid_fourier";
  const auto f = AnalyticFunction::parse("gauss_bump:0.1,0.05,-0.02");
  const auto g = sample_function(f, 1.0, 128, 0.5);
  const auto rect = fourier_coeffs(g, 16);
  record(out, s, "hermitian_table", rect.hermitian_defect(), 1e-14);
  const auto pol = polar_fourier_coeffs(f, 0.5, 1.0, 16, {64, 128});
  double rel = 0.0;
  for (std::size_t i = 0; i < rect.values().size(); ++i) {
    rel = std::max(rel, std::abs(rect.values()[i] - pol.values()[i]));
  }
  record(out, s, "rect_vs_polar_abs", rel / std::abs(pol.at({0, 0})), 1e-3);
}

void fz_transform_suite(Checks& out) {
  const std::string s = "fz_transform";
  const auto f = AnalyticFunction::parse("gauss_bump:0.12,0.1,0");
  const auto table = fourier_coeffs(sample_function(f, 1.0, 128, 0.5), 32);
  const FZTruncation trunc(10);
  const auto flat = fz_from_fourier(table, trunc);
  const auto polar = fz_from_fourier_polar(table, shells_up_to(32), trunc);
  record(out, s, "polar_regrouping", max_diff(flat.values(), polar.values()) / flat.max_abs(), 1e-12);
  record(out, s, "hermitian_coeffs", flat.hermitian_defect(), 1e-10);
  const auto delta = fz_direct(AnalyticFunction::parse("zernike:4,2"), 1.0, FZTruncation(6), {64, 128});
  double worst = 0.0;
  for (const auto idx : enumerate_indices(delta.trunc())) {
    worst = std::max(worst, std::abs(delta.at(idx) - (idx == FZIndex{4, 2} ? 1.0 : 0.0)));
  }
  record(out, s, "direct_basis_delta", worst, 1e-8);
}

void conv_engine_suite(Checks& out) {
  const std::string s = "conv_engine";
  const auto g1 = sample_function(AnalyticFunction::parse("gauss_bump:0.1,0.1,0"), 1.0, 32, 0.5);
  const auto g2 = sample_function(AnalyticFunction::parse("disk_indicator:0.3"), 1.0, 32, 0.5);
  const auto direct = convolve_nodes(g1, g2, NodeMethod::kDirect);
  const auto circ = convolve_nodes(g1, g2, NodeMethod::kCircular);
  double peak = 0.0;
  for (const auto& v : direct.values) peak = std::max(peak, std::abs(v));
  record(out, s, "direct_vs_circular", max_diff(direct.values, circ.values) / peak, 1e-12);
  const auto conv = brute_force_convolution(g1, g2);
  const cplx mass = conv.integral();
  const cplx expect = g1.integral() * g2.integral();
  record(out, s, "mass_product", std::abs(mass - expect) / std::abs(expect), 1e-10);
  record(out, s, "support_a", verify_support(conv, 1.0).pass ? 0.0 : 1.0, 0.0);
  const auto t1 = fourier_coeffs(g1, 15);
  const auto t2 = fourier_coeffs(g2, 15);
  const auto c12 = conv_fz_coeffs(t1, t2, FZTruncation(6));
  const auto c21 = conv_fz_coeffs(t2, t1, FZTruncation(6));
  record(out, s, "commutativity", max_diff(c12.values(), c21.values()), 0.0);
}

void basis_kernels_suite(Checks& out) {
  const std::string s = "basis_kernels";
  const double a = 1.0;
  const auto rq = gauss_legendre(96, 0.0, 0.5);
  const auto aq = periodic_trapezoid(128);
  double worst = 0.0;
  for (const FZIndex idx : {FZIndex{0, 0}, FZIndex{2, 0}, FZIndex{3, -1}}) {
    const LatticePoint k{2, 1};
    cplx sum{};
    for (std::size_t j = 0; j < rq.nodes.size(); ++j) {
      for (std::size_t t = 0; t < aq.nodes.size(); ++t) {
        const double r = rq.nodes[j];
        const double th = aq.nodes[t];
        const double phase = -std::numbers::pi / a * r * (k.k1 * std::cos(th) + k.k2 * std::sin(th));
        sum += basis_eval(idx, 0.5 * a, r, th) * std::polar(1.0, phase) *
               (rq.weights[j] * aq.weights[t] * r);
      }
    }
    worst = std::max(worst, std::abs(sum - vhat_closed_form(idx, k, a)));
  }
  record(out, s, "vhat_quadrature", worst, 1e-8);
  const auto table = kernel_coeff_table({1, 1}, {1, -1}, a, 16, FZTruncation(4));
  double off = 0.0;
  for (const auto idx : enumerate_indices(table.coeffs.trunc())) {
    if (idx.m != 0) off = std::max(off, std::abs(table.coeffs.at(idx)));
  }
  record(out, s, "selection_rule", off, 1e-10);
}

void cli_io_suite(Checks& out) {
  const std::string s = "cli_io";
  const auto g = sample_function(AnalyticFunction::parse("gauss_bump:0.2,0.1,0.3"), 1.0, 16, 0.9);
  const auto back = decode_grid(encode_grid(g));
  record(out, s, "fzg1_roundtrip", max_diff(g.values(), back.values()), 0.0);
  const auto c = fz_direct(AnalyticFunction::parse("gauss_bump:0.2,0.1,0.3"), 1.0, FZTruncation(5),
                           {32, 64});
  const auto c2 = decode_coeffs(encode_coeffs(c));
  record(out, s, "json_roundtrip", max_diff(c.values(), c2.values()), 0.0);
}

struct Suite {
  std::string name;
  std::function<void(Checks&)> run;
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"special_functions", special_functions_suite}, {"fz_basis", fz_basis_suite},
      {"lattice", lattice_suite},                     {"grid_fourier", grid_fourier_suite},
      {"fz_transform", fz_transform_suite},           {"conv_engine", conv_engine_suite},
      {"basis_kernels", basis_kernels_suite},         {"cli_io", cli_io_suite},
  };
  return all;
}

}  // namespace

bool VerifyReport::pass() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string VerifyReport::to_json() const {
  std::string out = fmt::format("{{\n  \"pass\": {},\n  \"checks\": [\n", pass() ? "true" : "false");
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    out += fmt::format(
        "    {{\"suite\": \"{}\", \"name\": \"{}\", \"pass\": {}, \"value\": {}, \"tolerance\": {}}}{}\n",
        c.suite, c.name, c.pass ? "true" : "false",
        std::isfinite(c.value) ? format_double(c.value) : "null", format_double(c.tolerance),
        i + 1 < checks.size() ? "," : "");
  }
  out += "  ]\n}\n";
  return out;
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : suites()) v.push_back(s.name);
    return v;
  }();
  return names;
}

VerifyReport run_verify(const std::vector<std::string>& wanted) {
  for (const auto& w : wanted) {
    const auto& names = verify_suite_names();
    if (std::find(names.begin(), names.end(), w) == names.end()) {
      throw ConfigError(fmt::format("unknown verify suite '{}'", w));
    }
  }
  VerifyReport report;
  for (const auto& s : suites()) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), s.name) == wanted.end()) continue;
    s.run(report.checks);
  }
  return report;
}

VerifyReport verify_grid_file(const std::filesystem::path& path) {
  const auto g = read_grid(path);
  VerifyReport report;
  const auto sup = verify_support(g, g.support_radius());
  record(report.checks, "grid", "declared_support", sup.max_outside, 1e-9 * sup.peak);
  return report;
}

}  // namespace fzc
