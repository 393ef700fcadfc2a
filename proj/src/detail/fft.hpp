#pragma once

#include <complex>
#include <vector>

namespace fzc::detail {

// In-place 2D DFT of an n x n row-major array. sign = -1 is the forward
// transform sum f e^{-2 pi i (k.j)/n}; no normalization either way.
void fft2d(std::vector<std::complex<double>>& data, int n, int sign);

}  // namespace fzc::detail
