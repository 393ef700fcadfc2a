#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>

namespace fzc {

// Worker count: FZC_THREADS when set to a positive integer, otherwise the
// hardware concurrency (0 in FZC_THREADS also means auto).
[[nodiscard]] std::size_t thread_count();

// Runs body(i) for i in [0, n), split into contiguous blocks over
// thread_count() workers. Exceptions from workers are rethrown on the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

// Neumaier-compensated accumulation of complex terms, real and imaginary
// parts carried separately.
class CompensatedSum {
 public:
  void add(std::complex<double> term) noexcept {
    add_part(re_, re_c_, term.real());
    add_part(im_, im_c_, term.imag());
  }
  [[nodiscard]] std::complex<double> value() const noexcept {
    return {re_ + re_c_, im_ + im_c_};
  }

 private:
  static void add_part(double& sum, double& comp, double x) noexcept {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  double re_ = 0.0;
  double re_c_ = 0.0;
  double im_ = 0.0;
  double im_c_ = 0.0;
};

}  // namespace fzc
