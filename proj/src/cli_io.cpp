#include "fzc/cli_io.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "fzc/basis_kernels.hpp"
#include "fzc/coeff_io.hpp"
#include "fzc/conv_engine.hpp"
#include "fzc/errors.hpp"
#include "fzc/grid_io.hpp"
#include "fzc/verify.hpp"

namespace fzc {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

FZIndex parse_index(const std::string& text) {
  int n = 0;
  int m = 0;
  char comma = 0;
  std::istringstream in(text);
  if (!(in >> n >> comma >> m) || comma != ',' || !in.eof()) {
    throw ConfigError(fmt::format("index '{}' is not of the form n,m", text));
  }
  const FZIndex idx{n, m};
  require(idx.valid() && n <= kMaxZernikeDegree, fmt::format("index '{}' is not a valid (n, m)", text));
  return idx;
}

void check_kmax_for_grid(int kmax, int n) {
  require(kmax >= 1 && kmax <= n / 2 - 1,
          fmt::format("kmax={} must lie in [1, N/2-1] = [1, {}] for N={}", kmax, n / 2 - 1, n));
}

int cmd_sample(const RunConfig& cfg) {
  require(!cfg.fn.empty(), "sample: --fn is required");
  require(cfg.n.has_value(), "sample: --n is required");
  require(!cfg.out.empty(), "sample: --out is required");
  const auto f = AnalyticFunction::parse(cfg.fn);
  const auto g = sample_function(f, cfg.a, *cfg.n, cfg.support.value_or(cfg.a));
  write_grid(cfg.out, g);
  if (!cfg.csv.empty()) write_grid_csv(cfg.csv, g);
  fmt::print(stderr, "sample: {} on N={} a={} -> {}\n", cfg.fn, *cfg.n, cfg.a, cfg.out);
  return kExitOk;
}

int cmd_expand(const RunConfig& cfg) {
  require(!cfg.in.empty(), "expand: --in is required");
  require(!cfg.out.empty(), "expand: --out is required");
  require(cfg.kmax.has_value(), "expand: --kmax is required");
  const auto g = read_grid(cfg.in);
  check_kmax_for_grid(*cfg.kmax, g.size());
  const auto table = fz_from_fourier(fourier_coeffs(g, *cfg.kmax), FZTruncation(cfg.n_max));
  write_coeffs(cfg.out, table);
  if (g.is_real()) {
    const double defect = table.hermitian_defect();
    fmt::print("hermitian {} defect {:.3e}\n", defect <= 1e-10 ? "yes" : "no", defect);
  }
  return kExitOk;
}

GridFunction operand_grid(const RunConfig& cfg, const std::string& path, const std::string& fn) {
  if (!path.empty()) return read_grid(path);
  require(cfg.n.has_value(), "convolve: --n is required with descriptor operands");
  return sample_function(AnalyticFunction::parse(fn), cfg.a, *cfg.n, 0.5 * cfg.a);
}

int cmd_convolve(const RunConfig& cfg) {
  require(!cfg.out.empty(), "convolve: --out is required");
  require(cfg.left_in.empty() != cfg.left_fn.empty(), "convolve: give exactly one of --left, --left-fn");
  require(cfg.right_in.empty() != cfg.right_fn.empty(),
          "convolve: give exactly one of --right, --right-fn");
  const FZTruncation trunc(cfg.n_max);
  const bool descriptors = !cfg.left_fn.empty() && !cfg.right_fn.empty();

  if (cfg.route == "polar" || cfg.route == "kernels") {
    require(descriptors, fmt::format("convolve: route '{}' needs --left-fn and --right-fn", cfg.route));
    require(cfg.kmax.has_value(), "convolve: --kmax is required");
    const auto f1 = AnalyticFunction::parse(cfg.left_fn);
    const auto f2 = AnalyticFunction::parse(cfg.right_fn);
    const double b = 0.5 * cfg.a;
    if (cfg.route == "polar") {
      const auto t1 = polar_fourier_coeffs(f1, b, cfg.a, *cfg.kmax);
      const auto t2 = polar_fourier_coeffs(f2, b, cfg.a, *cfg.kmax);
      write_coeffs(cfg.out, conv_fz_coeffs_polar(t1, t2, shells_up_to(*cfg.kmax), trunc));
    } else {
      const auto c1 = fz_direct(f1, b, trunc, {}, b);
      const auto c2 = fz_direct(f2, b, trunc, {}, b);
      std::optional<std::filesystem::path> cache;
      if (!cfg.cache_dir.empty()) cache = cfg.cache_dir;
      KernelStore store(cfg.a, *cfg.kmax, trunc, cache);
      write_coeffs(cfg.out, convolve_via_kernels(c1, c2, store, trunc));
    }
    return kExitOk;
  }

  const auto g1 = operand_grid(cfg, cfg.left_in, cfg.left_fn);
  const auto g2 = operand_grid(cfg, cfg.right_in, cfg.right_fn);
  if (cfg.route == "spectral") {
    require(cfg.kmax.has_value(), "convolve: --kmax is required");
    check_kmax_for_grid(*cfg.kmax, g1.size());
    write_coeffs(cfg.out, conv_fz_coeffs(g1, g2, *cfg.kmax, trunc));
    return kExitOk;
  }
  // brute
  const auto conv = brute_force_convolution(g1, g2);
  if (!cfg.csv.empty()) write_grid_csv(cfg.csv, conv);
  const auto interp = AnalyticFunction::custom(
      [&conv](double x1, double x2) { return conv.interpolate(x1, x2); }, {}, conv.is_real(),
      "brute_force_convolution");
  write_coeffs(cfg.out, fz_direct(interp, conv.a(), trunc));
  return kExitOk;
}

std::vector<DiskPoint> read_points(const std::string& path) {
  std::istringstream in(read_text_file(path));
  std::vector<DiskPoint> points;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    try {
      if (comma == std::string::npos) throw std::invalid_argument("no comma");
      const double r = std::stod(line.substr(0, comma));
      const double th = std::stod(line.substr(comma + 1));
      points.push_back({r, th});
    } catch (const std::exception&) {
      if (lineno == 1) continue;  // header
      throw FormatError(fmt::format("{}:{}: expected r,theta", path, lineno));
    }
  }
  return points;
}

int cmd_reconstruct(const RunConfig& cfg) {
  require(!cfg.in.empty(), "reconstruct: --in is required");
  require(!cfg.out.empty(), "reconstruct: --out is required");
  const int modes = (cfg.n ? 1 : 0) + (cfg.points.empty() ? 0 : 1) + (cfg.random_points > 0 ? 1 : 0);
  require(modes == 1, "reconstruct: give exactly one of --n, --points, --random-points");
  const auto table = read_coeffs(cfg.in);
  if (cfg.n) {
    const auto g = render_on_grid(table, *cfg.n);
    write_grid(cfg.out, g);
    if (!cfg.csv.empty()) write_grid_csv(cfg.csv, g);
    return kExitOk;
  }
  std::vector<DiskPoint> points;
  if (!cfg.points.empty()) {
    points = read_points(cfg.points);
  } else {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < cfg.random_points; ++i) {
      const double r = table.a() * std::sqrt(u(rng));
      points.push_back({r, 2.0 * std::numbers::pi * u(rng)});
    }
  }
  const auto values = reconstruct(table, points);
  std::string text = "r,theta,re,im\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    text += fmt::format("{:.17g},{:.17g},{:.17g},{:.17g}\n", points[i].r, points[i].theta,
                        values[i].real(), values[i].imag());
  }
  write_text_file(cfg.out, text);
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  const auto report = cfg.in.empty() ? run_verify(cfg.suites) : verify_grid_file(cfg.in);
  const auto json = report.to_json();
  if (!cfg.out.empty()) write_text_file(cfg.out, json);
  fmt::print("{}", json);
  for (const auto& c : report.checks) {
    if (!c.pass) fmt::print(stderr, "verify: FAIL {}/{} value {} tolerance {}\n", c.suite, c.name, c.value, c.tolerance);
  }
  return report.pass() ? kExitOk : kExitVerify;
}

int cmd_kernel_table(const RunConfig& cfg) {
  require(cfg.kmax.has_value(), "kernel-table: --kmax is required");
  require(!cfg.cache_dir.empty(), "kernel-table: --cache-dir is required");
  require(cfg.left_index.empty() == cfg.right_index.empty(),
          "kernel-table: give both --left and --right, or neither");
  const FZTruncation trunc(cfg.n_max);
  std::vector<std::pair<FZIndex, FZIndex>> pairs;
  if (!cfg.left_index.empty()) {
    pairs.emplace_back(parse_index(cfg.left_index), parse_index(cfg.right_index));
  } else {
    const auto idx = enumerate_indices(trunc);
    for (const auto l : idx) {
      for (const auto r : idx) pairs.emplace_back(l, r);
    }
  }
  KernelStore store(cfg.a, *cfg.kmax, trunc, std::filesystem::path(cfg.cache_dir));
  store.prefetch(pairs);
  fmt::print(stderr, "kernel-table: {} pairs ({} computed) in {}\n", pairs.size(),
             store.computed_count(), cfg.cache_dir);
  return kExitOk;
}

int cmd_plot(const RunConfig& cfg) {
  require(!cfg.in.empty(), "plot: --in is required");
  require(!cfg.out.empty(), "plot: --out is required");
  const auto map = write_pgm(cfg.out, read_grid(cfg.in));
  fmt::print(stderr, "plot: {} in [{:.6g}, {:.6g}] -> {}\n", map.channel, map.min, map.max, cfg.out);
  return kExitOk;
}

}  // namespace

void validate(const RunConfig& cfg) {
  require(std::isfinite(cfg.a) && cfg.a > 0.0, fmt::format("--a must be positive, got {}", cfg.a));
  if (cfg.n) {
    require(is_power_of_two(*cfg.n), fmt::format("--n must be a power of two >= 2, got {}", *cfg.n));
  }
  if (cfg.kmax) {
    require(*cfg.kmax >= 1, fmt::format("--kmax must be at least 1, got {}", *cfg.kmax));
    if (cfg.n && cfg.subcommand != "reconstruct") check_kmax_for_grid(*cfg.kmax, *cfg.n);
  }
  require(cfg.n_max >= 0 && cfg.n_max <= kMaxZernikeDegree,
          fmt::format("--n-max must lie in [0, {}], got {}", kMaxZernikeDegree, cfg.n_max));
  if (cfg.support) {
    require(*cfg.support >= 0.0 && *cfg.support <= cfg.a,
            fmt::format("--support must lie in [0, a], got {}", *cfg.support));
  }
  require(cfg.route == "spectral" || cfg.route == "polar" || cfg.route == "kernels" ||
              cfg.route == "brute",
          fmt::format("unknown route '{}'", cfg.route));
  require(cfg.random_points >= 0, "--random-points must be non-negative");
  if (!cfg.left_index.empty()) (void)parse_index(cfg.left_index);
  if (!cfg.right_index.empty()) (void)parse_index(cfg.right_index);
  for (const auto& s : cfg.suites) {
    const auto& names = verify_suite_names();
    require(std::find(names.begin(), names.end(), s) != names.end(),
            fmt::format("unknown verify suite '{}'", s));
  }
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Fourier-Zernike expansion and disk convolution toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;
  int n = 0;
  int kmax = 0;
  double support = 0.0;

  auto geometry = [&](CLI::App* sub, bool with_n, bool with_kmax) {
    sub->add_option("--a", cfg.a, "half-width of the square [-a, a]^2");
    if (with_n) sub->add_option("--n", n, "grid size N (power of two)");
    if (with_kmax) sub->add_option("--kmax", kmax, "lattice box half-width");
  };

  auto* sample = app.add_subcommand("sample", "sample a descriptor onto an FZG1 grid");
  geometry(sample, true, false);
  sample->add_option("--fn", cfg.fn, "function descriptor")->required();
  sample->add_option("--support", support, "support radius (default a)");
  sample->add_option("--out", cfg.out, "output grid")->required();
  sample->add_option("--csv", cfg.csv, "optional CSV export");

  auto* expand = app.add_subcommand("expand", "grid -> Fourier-Zernike coefficients");
  geometry(expand, false, true);
  expand->add_option("--in", cfg.in, "input grid")->required();
  expand->add_option("--n-max", cfg.n_max, "Zernike truncation degree");
  expand->add_option("--out", cfg.out, "output JSON")->required();

  auto* convolve = app.add_subcommand("convolve", "coefficients of a convolution");
  geometry(convolve, true, true);
  convolve->add_option("--left", cfg.left_in, "left grid");
  convolve->add_option("--right", cfg.right_in, "right grid");
  convolve->add_option("--left-fn", cfg.left_fn, "left descriptor");
  convolve->add_option("--right-fn", cfg.right_fn, "right descriptor");
  convolve->add_option("--route", cfg.route, "spectral, polar, kernels or brute");
  convolve->add_option("--n-max", cfg.n_max, "Zernike truncation degree");
  convolve->add_option("--cache-dir", cfg.cache_dir, "kernel cache directory (kernels route)");
  convolve->add_option("--csv", cfg.csv, "brute route: CSV of the convolution grid");
  convolve->add_option("--out", cfg.out, "output JSON")->required();

  auto* recon = app.add_subcommand("reconstruct", "evaluate a coefficient file");
  geometry(recon, true, false);
  recon->add_option("--in", cfg.in, "coefficient JSON")->required();
  recon->add_option("--points", cfg.points, "CSV of r,theta");
  recon->add_option("--random-points", cfg.random_points, "number of random disk points");
  recon->add_option("--seed", cfg.seed, "seed for --random-points");
  recon->add_option("--csv", cfg.csv, "CSV export of the rendered grid");
  recon->add_option("--out", cfg.out, "output grid (with --n) or CSV")->required();

  auto* verify = app.add_subcommand("verify", "run invariant suites or check a grid file");
  verify->add_option("--suite", cfg.suites, "suite name (repeatable)");
  verify->add_option("--in", cfg.in, "grid file to check instead of the suites");
  verify->add_option("--out", cfg.out, "also write the report here");

  auto* kernels = app.add_subcommand("kernel-table", "build cached basis-convolution kernels");
  geometry(kernels, false, true);
  kernels->add_option("--n-max", cfg.n_max, "input and output truncation degree");
  kernels->add_option("--left", cfg.left_index, "left index n,m");
  kernels->add_option("--right", cfg.right_index, "right index n,m");
  kernels->add_option("--cache-dir", cfg.cache_dir, "output directory")->required();

  auto* plot = app.add_subcommand("plot", "render a grid as an 8-bit PGM");
  plot->add_option("--in", cfg.in, "input grid")->required();
  plot->add_option("--out", cfg.out, "output image")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    (void)app.exit(e);
    return kExitConfig;
  }

  auto* chosen = app.get_subcommands().front();
  cfg.subcommand = chosen->get_name();
  auto given = [chosen](const char* name) {
    const auto* opt = chosen->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--n")) cfg.n = n;
  if (given("--kmax")) cfg.kmax = kmax;
  if (given("--support")) cfg.support = support;

  try {
    validate(cfg);
    if (cfg.subcommand == "sample") return cmd_sample(cfg);
    if (cfg.subcommand == "expand") return cmd_expand(cfg);
    if (cfg.subcommand == "convolve") return cmd_convolve(cfg);
    if (cfg.subcommand == "reconstruct") return cmd_reconstruct(cfg);
    if (cfg.subcommand == "verify") return cmd_verify(cfg);
    if (cfg.subcommand == "kernel-table") return cmd_kernel_table(cfg);
    if (cfg.subcommand == "plot") return cmd_plot(cfg);
  } catch (const FormatError& e) {
    fmt::print(stderr, "fzc: format error: {}\n", e.what());
    return kExitFormat;
  } catch (const Error& e) {
    fmt::print(stderr, "fzc: {}\n", e.what());
    return kExitConfig;
  } catch (const std::filesystem::filesystem_error& e) {
    fmt::print(stderr, "fzc: {}\n", e.what());
    return kExitFormat;
  } catch (const std::exception& e) {
    fmt::print(stderr, "fzc: unexpected failure: {}\n", e.what());
    return 1;
  }
  return kExitConfig;
}

}  // namespace fzc
