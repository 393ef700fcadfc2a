#pragma once

#include <complex>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace fzc {

// Built-in analytic test functions on the plane, addressed by descriptor
// strings:
//
//   zero                      f = 0
//   disk_indicator:R          1 on |x| <= R, 0 outside
//   gauss_bump:s,cx,cy        exp(-|x - c|^2 / (2 s^2))
//   poly_bump:n,m[,R]         V^R_{nm}(x) exp(1 - 1/(1 - |x|^2/R^2)) on |x| < R (R = 0.5)
//   cosine_hat:f              cos^2(pi f |x|) on |x| <= 1/(2f), 0 outside
//   zernike:n,m[,R]           V^R_{nm}(x) on |x| <= R, 0 outside (R = 1)
//
// Functions are evaluated unmasked; callers impose any support radius.
class AnalyticFunction {
 public:
  using Sampler = std::function<std::complex<double>(double x1, double x2)>;

  // Throws DomainError for an unknown name or bad parameters.
  static AnalyticFunction parse(std::string_view text);

  // Wraps an arbitrary function. Breakpoints are radii where f or one of its
  // low derivatives jumps on a circle centered at the origin.
  static AnalyticFunction custom(Sampler f, std::vector<double> breakpoints, bool real_valued,
                                 std::string label);

  [[nodiscard]] std::complex<double> operator()(double x1, double x2) const { return f_(x1, x2); }
  [[nodiscard]] std::complex<double> polar(double r, double theta) const;

  [[nodiscard]] const std::vector<double>& radial_breakpoints() const noexcept { return breaks_; }
  [[nodiscard]] bool real_valued() const noexcept { return real_; }
  [[nodiscard]] const std::string& text() const noexcept { return text_; }
  [[nodiscard]] bool is_zero() const noexcept { return zero_; }

  // Breakpoints strictly inside (0, limit), with 0 and limit appended.
  [[nodiscard]] std::vector<double> radial_intervals(double limit) const;

 private:
  AnalyticFunction() = default;

  Sampler f_;
  std::vector<double> breaks_;
  bool real_ = true;
  bool zero_ = false;
  std::string text_;
};

}  // namespace fzc
