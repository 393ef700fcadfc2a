#include "fzc/descriptor.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <utility>

#include <fmt/format.h>

#include "fzc/errors.hpp"
#include "fzc/fz_basis.hpp"

namespace fzc {
namespace {

std::vector<double> parse_params(std::string_view body, std::string_view whole) {
  std::vector<double> out;
  if (body.empty()) return out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const std::size_t comma = body.find(',', pos);
    const std::string piece(body.substr(pos, comma == std::string_view::npos ? body.size() - pos
                                                                             : comma - pos));
    char* end = nullptr;
    const double v = std::strtod(piece.c_str(), &end);
    if (piece.empty() || end != piece.c_str() + piece.size() || !std::isfinite(v)) {
      throw DomainError(fmt::format("descriptor '{}': bad parameter '{}'", whole, piece));
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

int as_int(double v, std::string_view whole) {
  if (v != std::floor(v) || std::abs(v) > 1000) {
    throw DomainError(fmt::format("descriptor '{}': expected an integer, got {}", whole, v));
  }
  return static_cast<int>(v);
}

void require(bool ok, std::string_view whole, std::string_view what) {
  if (!ok) throw DomainError(fmt::format("descriptor '{}': {}", whole, what));
}

FZIndex parse_index(double n, double m, std::string_view whole) {
  const FZIndex idx{as_int(n, whole), as_int(m, whole)};
  require(idx.valid() && idx.n <= kMaxZernikeDegree, whole, "invalid Zernike index");
  return idx;
}

}  // namespace

AnalyticFunction AnalyticFunction::custom(Sampler f, std::vector<double> breakpoints,
                                          bool real_valued, std::string label) {
  AnalyticFunction out;
  out.f_ = std::move(f);
  std::sort(breakpoints.begin(), breakpoints.end());
  out.breaks_ = std::move(breakpoints);
  out.real_ = real_valued;
  out.text_ = std::move(label);
  return out;
}

AnalyticFunction AnalyticFunction::parse(std::string_view text) {
  const std::size_t colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const auto p = parse_params(colon == std::string_view::npos ? std::string_view{}
                                                              : text.substr(colon + 1),
                              text);
  const std::string label(text);

  if (name == "zero") {
    require(p.empty(), text, "takes no parameters");
    auto out = custom([](double, double) { return std::complex<double>{}; }, {}, true, label);
    out.zero_ = true;
    return out;
  }
  if (name == "disk_indicator") {
    require(p.size() == 1 && p[0] > 0.0, text, "expects disk_indicator:radius with radius > 0");
    const double r2 = p[0] * p[0];
    return custom(
        [r2](double x1, double x2) {
          return std::complex<double>{x1 * x1 + x2 * x2 <= r2 ? 1.0 : 0.0, 0.0};
        },
        {p[0]}, true, label);
  }
  if (name == "gauss_bump") {
    require(p.size() == 3 && p[0] > 0.0, text, "expects gauss_bump:sigma,cx,cy with sigma > 0");
    const double inv = 1.0 / (2.0 * p[0] * p[0]);
    const double cx = p[1];
    const double cy = p[2];
    return custom(
        [inv, cx, cy](double x1, double x2) {
          const double d1 = x1 - cx;
          const double d2 = x2 - cy;
          return std::complex<double>{std::exp(-(d1 * d1 + d2 * d2) * inv), 0.0};
        },
        {}, true, label);
  }
  if (name == "poly_bump" || name == "zernike") {
    require(p.size() == 2 || p.size() == 3, text, "expects n,m[,radius]");
    const FZIndex idx = parse_index(p[0], p[1], text);
    const bool bump = name == "poly_bump";
    const double radius = p.size() == 3 ? p[2] : (bump ? 0.5 : 1.0);
    require(radius > 0.0, text, "radius must be positive");
    return custom(
        [idx, radius, bump](double x1, double x2) {
          const double r = std::hypot(x1, x2);
          if (r > radius || (bump && r >= radius)) return std::complex<double>{};
          double theta = std::atan2(x2, x1);
          cplx v = basis_eval(idx, radius, r, theta);
          if (bump) {
            const double t = r / radius;
            v *= std::exp(1.0 - 1.0 / (1.0 - t * t));
          }
          return v;
        },
        {radius}, idx.m == 0, label);
  }
  if (name == "cosine_hat") {
    require(p.size() == 1 && p[0] > 0.0, text, "expects cosine_hat:freq with freq > 0");
    const double freq = p[0];
    const double edge = 0.5 / freq;
    return custom(
        [freq, edge](double x1, double x2) {
          const double r = std::hypot(x1, x2);
          if (r > edge) return std::complex<double>{};
          const double c = std::cos(std::numbers::pi * freq * r);
          return std::complex<double>{c * c, 0.0};
        },
        {edge}, true, label);
  }
  throw DomainError(fmt::format("unknown descriptor '{}'", text));
}

std::complex<double> AnalyticFunction::polar(double r, double theta) const {
  return f_(r * std::cos(theta), r * std::sin(theta));
}

std::vector<double> AnalyticFunction::radial_intervals(double limit) const {
  std::vector<double> out{0.0};
  for (double b : breaks_) {
    if (b > 0.0 && b < limit * (1.0 - 1e-12)) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  out.push_back(limit);
  return out;
}

}  // namespace fzc
