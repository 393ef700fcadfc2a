#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fzc/fz_transform.hpp"
#include "fzc/lattice.hpp"

namespace fzc {

namespace detail {
struct KernelRadial;
}

// Lattice Fourier coefficient of the zero-padded basis element V^b_{nm},
// b = a/2, against e^{-pi i a^{-1} k.x}:
//   2 sqrt(n+1) i^{-m} e^{i m Phi(k)} a (-1)^{(n-m)/2} J_{n+1}(pi|k|/2) / (sqrt(pi)|k|),
// and a sqrt(pi)/2 at k = 0 for (n, m) = (0, 0).
[[nodiscard]] cplx vhat_closed_form(FZIndex idx, LatticePoint k, double a);

// C^a_{k,l}(V^b_{nm} conv V^b_{n'm'}) for every output index.
struct KernelTable {
  FZIndex left;
  FZIndex right;
  int kmax = 0;
  FZCoeffTable coeffs;
};

// Box sum over |k1|, |k2| <= kmax of c_a(k; out) vhat(left, k) vhat(right, k)
// for a single output index, phases included.
[[nodiscard]] cplx kernel_coeff_entry(FZIndex left, FZIndex right, FZIndex out, double a, int kmax);

// Table of the above over trunc. Only outputs with l = m + m' are summed;
// every other entry is stored as zero (for those the angular factor
// cancels only up to lattice-truncation error).
[[nodiscard]] KernelTable kernel_coeff_table(FZIndex left, FZIndex right, double a, int kmax,
                                             FZTruncation trunc);

// Lazily built kernel tables for one (a, kmax, output truncation), with an
// optional directory of JSON cache files.
class KernelStore {
 public:
  KernelStore(double a, int kmax, FZTruncation trunc,
              std::optional<std::filesystem::path> cache_dir = std::nullopt,
              bool compute_missing = true);
  ~KernelStore();
  KernelStore(const KernelStore&) = delete;
  KernelStore& operator=(const KernelStore&) = delete;

  [[nodiscard]] double a() const noexcept { return a_; }
  [[nodiscard]] int kmax() const noexcept { return kmax_; }
  [[nodiscard]] FZTruncation trunc() const noexcept { return trunc_; }

  // Memory, then cache file, then computation. Throws MissingKernelError when
  // the pair is absent and computing is disabled.
  const KernelTable& get(FZIndex left, FZIndex right);
  // Builds every listed pair that is not yet held.
  void prefetch(const std::vector<std::pair<FZIndex, FZIndex>>& pairs);

  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] std::size_t computed_count() const;

  [[nodiscard]] static std::string cache_name(double a, FZIndex left, FZIndex right);

 private:
  [[nodiscard]] const KernelTable* find(FZIndex left, FZIndex right) const;
  [[nodiscard]] std::optional<KernelTable> load(FZIndex left, FZIndex right) const;
  [[nodiscard]] KernelTable build(FZIndex left, FZIndex right) const;
  const KernelTable& insert(KernelTable table, bool computed);

  double a_;
  int kmax_;
  FZTruncation trunc_;
  std::optional<std::filesystem::path> cache_dir_;
  bool compute_missing_;
  mutable std::once_flag radial_once_;
  mutable std::unique_ptr<detail::KernelRadial> radial_;
  mutable std::mutex mutex_;
  std::mutex write_mutex_;
  std::map<std::pair<FZIndex, FZIndex>, std::unique_ptr<KernelTable>> tables_;
  std::size_t computed_ = 0;
};

// JSON for a kernel table: the coefficient format plus "left", "right"
// ({"n", "m"}) and "kmax".
[[nodiscard]] std::string encode_kernel(const KernelTable& table);
// Throws FormatError on malformed input.
[[nodiscard]] KernelTable decode_kernel(std::string_view text);

// sum over pairs of C^b(f1) C^b(f2) K(left, right). Inputs live on
// b = store.a()/2 and share n_max; the output truncation must fit in the
// store's. Throws GeometryError or MissingKernelError.
[[nodiscard]] FZCoeffTable convolve_via_kernels(const FZCoeffTable& c1, const FZCoeffTable& c2,
                                                KernelStore& store, FZTruncation trunc);

}  // namespace fzc
