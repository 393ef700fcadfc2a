#include "fzc/basis_kernels.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>
#include <json.hpp>

#include "fzc/coeff_io.hpp"
#include "fzc/errors.hpp"
#include "fzc/grid_io.hpp"
#include "fzc/parallel.hpp"
#include "fzc/special_functions.hpp"

namespace fzc {
namespace {

void require_valid(FZIndex idx, const char* what) {
  if (!idx.valid() || idx.n > kMaxZernikeDegree) {
    throw IndexError(fmt::format("{}: invalid index ({}, {})", what, idx.n, idx.m));
  }
}

// 2 sqrt(n+1) i^{-m} a (-1)^{(n-m)/2} / sqrt(pi)
cplx vhat_prefactor(FZIndex idx, double a) {
  return 2.0 * std::sqrt(static_cast<double>(idx.n + 1)) * i_pow(-idx.m) * a *
         neg_one_pow((idx.n - idx.m) / 2) / std::sqrt(std::numbers::pi);
}

// sqrt(n+1) i^m (-1)^{(n-m)/2} / (2 a sqrt(pi))
cplx c_prefactor(FZIndex idx, double a) {
  return std::sqrt(static_cast<double>(idx.n + 1)) * i_pow(idx.m) *
         neg_one_pow((idx.n - idx.m) / 2) / (2.0 * a * std::sqrt(std::numbers::pi));
}

}  // namespace

namespace detail {

// Per-shell radial factors of the nonzero shells of the box:
//   out[s][K] = J_{K+1}(pi rho) / rho,  in[s][n] = J_{n+1}(pi rho / 2) / rho.
struct KernelRadial {
  KernelRadial(int kmax, int n_out) : out_width(n_out + 1), in_width(kMaxZernikeDegree + 1) {
    for (const auto& shell : shells_up_to(kmax)) {
      if (shell.r2 == 0) continue;
      multiplicity.push_back(static_cast<double>(shell.points.size()));
      const double rho = shell.rho;
      const auto jo = bessel_j_sequence(out_width, std::numbers::pi * rho);
      const auto ji = bessel_j_sequence(in_width, 0.5 * std::numbers::pi * rho);
      for (int k = 0; k < out_width; ++k) out.push_back(jo[k + 1] / rho);
      for (int n = 0; n < in_width; ++n) in.push_back(ji[n + 1] / rho);
    }
  }

  int out_width;
  int in_width;
  std::vector<double> multiplicity;
  std::vector<double> out;
  std::vector<double> in;
};

}  // namespace detail

namespace {

KernelTable build_table(const detail::KernelRadial& radial, FZIndex left, FZIndex right, double a,
                        int kmax, FZTruncation trunc) {
  const auto indices = enumerate_indices(trunc);
  std::vector<cplx> coeffs(indices.size());
  const int l = left.m + right.m;
  const cplx pre_in = vhat_prefactor(left, a) * vhat_prefactor(right, a);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const FZIndex out = indices[i];
    if (out.m != l) continue;
    CompensatedSum sum;
    for (std::size_t s = 0; s < radial.multiplicity.size(); ++s) {
      sum.add(radial.multiplicity[s] * radial.out[s * radial.out_width + out.n] *
              radial.in[s * radial.in_width + left.n] * radial.in[s * radial.in_width + right.n]);
    }
    cplx value = c_prefactor(out, a) * pre_in * sum.value();
    if (out.n == 0 && left.n == 0 && right.n == 0) {
      // k = 0: c -> sqrt(pi)/(4a), vhat -> a sqrt(pi)/2
      value += std::sqrt(std::numbers::pi) / (4.0 * a) * (a * a * std::numbers::pi / 4.0);
    }
    coeffs[i] = value;
  }
  return {left, right, kmax, FZCoeffTable(a, trunc, std::move(coeffs))};
}

}  // namespace

cplx vhat_closed_form(FZIndex idx, LatticePoint k, double a) {
  require_valid(idx, "vhat_closed_form");
  if (!(a > 0.0)) throw DomainError("vhat_closed_form: a must be positive");
  if (k.k1 == 0 && k.k2 == 0) {
    return (idx.n == 0 && idx.m == 0) ? cplx{a * std::sqrt(std::numbers::pi) / 2.0, 0.0} : cplx{};
  }
  const auto pc = polar_of(k);
  return vhat_prefactor(idx, a) * std::polar(1.0, idx.m * pc.phi) *
         (bessel_j(idx.n + 1, 0.5 * std::numbers::pi * pc.rho) / pc.rho);
}

cplx kernel_coeff_entry(FZIndex left, FZIndex right, FZIndex out, double a, int kmax) {
  require_valid(left, "kernel_coeff_entry");
  require_valid(right, "kernel_coeff_entry");
  require_valid(out, "kernel_coeff_entry");
  if (kmax < 1) throw GeometryError("kernel_coeff_entry: kmax must be at least 1");
  CompensatedSum sum;
  for (int k2 = -kmax; k2 <= kmax; ++k2) {
    for (int k1 = -kmax; k1 <= kmax; ++k1) {
      const LatticePoint k{k1, k2};
      sum.add(c_kernel(k, out, a) * vhat_closed_form(left, k, a) * vhat_closed_form(right, k, a));
    }
  }
  return sum.value();
}

KernelTable kernel_coeff_table(FZIndex left, FZIndex right, double a, int kmax, FZTruncation trunc) {
  require_valid(left, "kernel_coeff_table");
  require_valid(right, "kernel_coeff_table");
  if (!(a > 0.0)) throw DomainError("kernel_coeff_table: a must be positive");
  if (kmax < 1) throw GeometryError("kernel_coeff_table: kmax must be at least 1");
  const detail::KernelRadial radial(kmax, trunc.n_max());
  return build_table(radial, left, right, a, kmax, trunc);
}

KernelStore::KernelStore(double a, int kmax, FZTruncation trunc,
                         std::optional<std::filesystem::path> cache_dir, bool compute_missing)
    : a_(a), kmax_(kmax), trunc_(trunc), cache_dir_(std::move(cache_dir)),
      compute_missing_(compute_missing) {
  if (!(a > 0.0)) throw DomainError("KernelStore: a must be positive");
  if (kmax < 1) throw GeometryError("KernelStore: kmax must be at least 1");
}

KernelStore::~KernelStore() = default;

std::string KernelStore::cache_name(double a, FZIndex left, FZIndex right) {
  return fmt::format("kernel_a{}_n{}m{}_n{}m{}.json", a, left.n, left.m, right.n, right.m);
}

const KernelTable* KernelStore::find(FZIndex left, FZIndex right) const {
  std::lock_guard lock(mutex_);
  const auto it = tables_.find({left, right});
  return it == tables_.end() ? nullptr : it->second.get();
}

std::optional<KernelTable> KernelStore::load(FZIndex left, FZIndex right) const {
  if (!cache_dir_) return std::nullopt;
  const auto path = *cache_dir_ / cache_name(a_, left, right);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  auto table = decode_kernel(read_text_file(path));
  // a stale file (other kmax or truncation) is rebuilt
  if (table.left != left || table.right != right || table.kmax != kmax_ ||
      !(table.coeffs.trunc() == trunc_) || table.coeffs.a() != a_) {
    return std::nullopt;
  }
  return table;
}

KernelTable KernelStore::build(FZIndex left, FZIndex right) const {
  std::call_once(radial_once_,
                 [&] { radial_ = std::make_unique<detail::KernelRadial>(kmax_, trunc_.n_max()); });
  return build_table(*radial_, left, right, a_, kmax_, trunc_);
}

const KernelTable& KernelStore::insert(KernelTable table, bool computed) {
  const std::pair key{table.left, table.right};
  if (computed && cache_dir_) {
    std::lock_guard wlock(write_mutex_);
    std::filesystem::create_directories(*cache_dir_);
    write_text_file(*cache_dir_ / cache_name(a_, table.left, table.right), encode_kernel(table));
  }
  std::lock_guard lock(mutex_);
  auto& slot = tables_[key];
  if (!slot) {
    slot = std::make_unique<KernelTable>(std::move(table));
    if (computed) ++computed_;
  }
  return *slot;
}

const KernelTable& KernelStore::get(FZIndex left, FZIndex right) {
  require_valid(left, "KernelStore::get");
  require_valid(right, "KernelStore::get");
  if (const auto* held = find(left, right)) return *held;
  if (auto loaded = load(left, right)) return insert(std::move(*loaded), false);
  if (!compute_missing_) {
    throw MissingKernelError(fmt::format("no kernel for ({}, {}) x ({}, {}) and computing is off",
                                         left.n, left.m, right.n, right.m));
  }
  return insert(build(left, right), true);
}

void KernelStore::prefetch(const std::vector<std::pair<FZIndex, FZIndex>>& pairs) {
  parallel_for(pairs.size(), [&](std::size_t i) { (void)get(pairs[i].first, pairs[i].second); });
}

std::size_t KernelStore::size() const {
  std::lock_guard lock(mutex_);
  return tables_.size();
}

std::size_t KernelStore::computed_count() const {
  std::lock_guard lock(mutex_);
  return computed_;
}

std::string encode_kernel(const KernelTable& table) {
  const auto idx = [](FZIndex i) { return fmt::format("{{\"n\": {}, \"m\": {}}}", i.n, i.m); };
  return encode_coeffs(table.coeffs, {{"left", idx(table.left)},
                                      {"right", idx(table.right)},
                                      {"kmax", std::to_string(table.kmax)}});
}

KernelTable decode_kernel(std::string_view text) {
  using nlohmann::json;
  auto coeffs = decode_coeffs(text);
  try {
    const json doc = json::parse(text.begin(), text.end());
    const auto idx = [&](const char* key) {
      const auto& e = doc.at(key);
      const FZIndex i{e.at("n").get<int>(), e.at("m").get<int>()};
      if (!i.valid()) throw FormatError(fmt::format("kernel file: invalid '{}' index", key));
      return i;
    };
    const int kmax = doc.at("kmax").get<int>();
    if (kmax < 1) throw FormatError("kernel file: kmax must be at least 1");
    return {idx("left"), idx("right"), kmax, std::move(coeffs)};
  } catch (const json::exception& e) {
    throw FormatError(fmt::format("kernel file: {}", e.what()));
  }
}

FZCoeffTable convolve_via_kernels(const FZCoeffTable& c1, const FZCoeffTable& c2, KernelStore& store,
                                  FZTruncation trunc) {
  if (!(c1.trunc() == c2.trunc())) {
    throw GeometryError("convolve_via_kernels: inputs must share n_max");
  }
  const double b = 0.5 * store.a();
  if (std::abs(c1.a() - b) > 1e-12 * b || std::abs(c2.a() - b) > 1e-12 * b) {
    throw GeometryError(fmt::format("convolve_via_kernels: inputs must live on b = {}", b));
  }
  if (trunc.n_max() > store.trunc().n_max()) {
    throw GeometryError("convolve_via_kernels: output truncation exceeds the kernel store's");
  }
  const auto indices = enumerate_indices(c1.trunc());
  std::vector<std::pair<FZIndex, FZIndex>> pairs;
  for (const auto l : indices) {
    if (c1.at(l) == cplx{}) continue;
    for (const auto r : indices) {
      if (c2.at(r) != cplx{}) pairs.emplace_back(l, r);
    }
  }
  store.prefetch(pairs);

  const auto out_indices = enumerate_indices(trunc);
  std::vector<CompensatedSum> sums(out_indices.size());
  for (const auto& [l, r] : pairs) {
    const auto& kernel = store.get(l, r);
    const cplx w = c1.at(l) * c2.at(r);
    const int m_out = l.m + r.m;
    for (std::size_t i = 0; i < out_indices.size(); ++i) {
      if (out_indices[i].m != m_out) continue;
      sums[i].add(w * kernel.coeffs.at(out_indices[i]));
    }
  }
  std::vector<cplx> coeffs(out_indices.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = sums[i].value();
  return {store.a(), trunc, std::move(coeffs)};
}

}  // namespace fzc
