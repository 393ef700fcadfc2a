#include "detail/lattice_sum.hpp"

#include <cmath>
#include <numbers>
#include <unordered_map>

#include "fzc/parallel.hpp"
#include "fzc/special_functions.hpp"

namespace fzc::detail {

std::uint32_t RadialRows::add(double rho) {
  const auto row = static_cast<std::uint32_t>(data_.size() / width_);
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  if (rho == 0.0) {
    data_.push_back(sqrt_pi / (4.0 * a_));
    data_.insert(data_.end(), width_ - 1, 0.0);
    return row;
  }
  const double x = std::numbers::pi * rho;
  const auto j = bessel_j_sequence(width_, x);
  const double scale = 1.0 / (2.0 * a_ * sqrt_pi * rho);
  for (int n = 0; n < width_; ++n) data_.push_back(j[n + 1] * scale);
  return row;
}

cplx kernel_prefactor(FZIndex idx) noexcept {
  return std::sqrt(static_cast<double>(idx.n + 1)) * i_pow(idx.m) *
         neg_one_pow((idx.n - idx.m) / 2);
}

TermList flat_terms(double a, int kmax, int n_max, const LatticeValue& value) {
  TermList list{RadialRows(a, n_max), {}};
  std::unordered_map<std::int64_t, std::uint32_t> row_of;
  list.terms.reserve(static_cast<std::size_t>(2 * kmax + 1) * (2 * kmax + 1));
  for (int k2 = -kmax; k2 <= kmax; ++k2) {
    for (int k1 = -kmax; k1 <= kmax; ++k1) {
      const LatticePoint k{k1, k2};
      const auto pc = polar_of(k);
      auto it = row_of.find(k.norm2());
      if (it == row_of.end()) it = row_of.emplace(k.norm2(), list.rows.add(pc.rho)).first;
      list.terms.push_back({pc.phi, it->second, value(k)});
    }
  }
  return list;
}

TermList shell_terms(double a, const std::vector<PolarShell>& shells, int n_max,
                     const LatticeValue& value) {
  TermList list{RadialRows(a, n_max), {}};
  for (const auto& shell : shells) {
    const auto row = list.rows.add(shell.rho);
    for (std::size_t i = 0; i < shell.points.size(); ++i) {
      list.terms.push_back({shell.angles[i], row, value(shell.points[i])});
    }
  }
  return list;
}

std::vector<cplx> kernel_sums(const TermList& list, FZTruncation trunc) {
  const auto indices = enumerate_indices(trunc);
  std::vector<cplx> out(indices.size());
  parallel_for(indices.size(), [&](std::size_t i) {
    const FZIndex idx = indices[i];
    CompensatedSum sum;
    for (const auto& t : list.terms) {
      if (t.value == cplx{}) continue;
      const double radial = list.rows.at(t.row, idx.n);
      if (radial == 0.0) continue;
      sum.add(radial * std::polar(1.0, -idx.m * t.phi) * t.value);
    }
    out[i] = kernel_prefactor(idx) * sum.value();
  });
  return out;
}

}  // namespace fzc::detail
