#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fzc/cli_io.hpp"
#include "fzc/coeff_io.hpp"
#include "fzc/conv_engine.hpp"
#include "fzc/errors.hpp"
#include "fzc/grid_fourier.hpp"
#include "fzc/grid_io.hpp"

using namespace fzc;
namespace fs = std::filesystem;

namespace {

const fs::path& workdir() {
  static const fs::path dir = [] {
    const auto d = fs::temp_directory_path() / "fzc_test_cli";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string at(const std::string& name) { return (workdir() / name).string(); }

int run(std::vector<std::string> args) {
  args.insert(args.begin(), "fzc");
  std::vector<char*> argv;
  for (auto& s : args) argv.push_back(s.data());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

// Runs the installed binary and returns its standard output.
std::string run_binary(const std::string& args, int* status) {
  const std::string cmd = std::string(FZC_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (const std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  const int raw = ::pclose(pipe);
  *status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

}  // namespace

TEST_CASE("sample") {
  REQUIRE(run({"sample", "--fn", "zero", "--a", "1", "--n", "64", "--out", at("zero.fzg")}) == kExitOk);
  const auto zero = read_grid(at("zero.fzg"));
  CHECK(zero.values().size() == 4096);
  CHECK(zero.max_abs() == 0.0);

  REQUIRE(run({"sample", "--fn", "disk_indicator:0.5", "--a", "1", "--n", "256", "--out", at("disk.fzg")}) ==
          kExitOk);
  const double mass = read_grid(at("disk.fzg")).integral().real();
  CHECK(std::abs(mass - std::numbers::pi / 4) <= 0.01 * std::numbers::pi / 4);

  REQUIRE(run({"sample", "--fn", "gauss_bump:0.15,0,0", "--a", "1", "--n", "256", "--support", "0.5",
               "--out", at("bump.fzg"), "--csv", at("bump.csv")}) == kExitOk);
  CHECK(verify_support(read_grid(at("bump.fzg")), 0.5).pass);
  CHECK(fs::exists(at("bump.csv")));
}

TEST_CASE("configuration errors exit 2 before touching files") {
  CHECK(run({"sample", "--fn", "zero", "--n", "100", "--out", at("never.fzg")}) == kExitConfig);
  CHECK(run({"sample", "--fn", "nope", "--n", "64", "--out", at("never.fzg")}) == kExitConfig);
  CHECK(run({"sample", "--fn", "zero", "--a", "-1", "--n", "64", "--out", at("never.fzg")}) == kExitConfig);
  CHECK(run({"sample", "--fn", "zero", "--n", "64", "--support", "2", "--out", at("never.fzg")}) ==
        kExitConfig);
  CHECK_FALSE(fs::exists(at("never.fzg")));
  CHECK(run({"expand", "--in", at("zero.fzg"), "--kmax", "40", "--out", at("never.json")}) == kExitConfig);
  CHECK(run({"expand", "--in", at("zero.fzg"), "--kmax", "8", "--n-max", "31", "--out", at("never.json")}) ==
        kExitConfig);
  CHECK(run({"convolve", "--left-fn", "zero", "--right-fn", "zero", "--n", "64", "--kmax", "8", "--route",
             "magic", "--out", at("never.json")}) == kExitConfig);
  CHECK(run({"verify", "--suite", "nope"}) == kExitConfig);
  CHECK(run({"bogus"}) == kExitConfig);
  CHECK(run({"sample", "--fn", "zero"}) == kExitConfig);
  CHECK_FALSE(fs::exists(at("never.json")));
}

TEST_CASE("expand") {
  REQUIRE(run({"expand", "--in", at("zero.fzg"), "--kmax", "16", "--n-max", "6", "--out", at("zero.json")}) ==
          kExitOk);
  CHECK(read_coeffs(at("zero.json")).max_abs() == 0.0);
  int status = -1;
  const auto out = run_binary("expand --in " + at("bump.fzg") + " --kmax 64 --out " + at("bump.json"), &status);
  CHECK(status == kExitOk);
  CHECK(out.rfind("hermitian yes", 0) == 0);
  CHECK(read_coeffs(at("bump.json")).trunc().n_max() == 8);
}

TEST_CASE("corrupt inputs exit 3") {
  auto bytes = read_file_bytes(at("zero.fzg"));
  bytes[1] = 'X';
  write_file_bytes(at("corrupt.fzg"), bytes);
  CHECK(run({"expand", "--in", at("corrupt.fzg"), "--kmax", "8", "--out", at("x.json")}) == kExitFormat);
  CHECK(run({"verify", "--in", at("corrupt.fzg")}) == kExitFormat);
  CHECK(run({"plot", "--in", at("missing.fzg"), "--out", at("x.pgm")}) == kExitFormat);
  write_text_file(at("corrupt.json"), "{\"a\": 1");
  CHECK(run({"reconstruct", "--in", at("corrupt.json"), "--n", "16", "--out", at("x.fzg")}) == kExitFormat);
}

TEST_CASE("reconstruct") {
  write_text_file(at("delta.json"),
                  "{\"a\": 1.0, \"n_max\": 0, \"coeffs\": [{\"n\": 0, \"m\": 0, \"re\": 1.7724538509055159, "
                  "\"im\": 0.0}]}");
  REQUIRE(run({"reconstruct", "--in", at("delta.json"), "--n", "32", "--out", at("delta.fzg")}) == kExitOk);
  const auto g = read_grid(at("delta.fzg"));
  for (int i2 = 0; i2 < 32; ++i2) {
    for (int i1 = 0; i1 < 32; ++i1) {
      const bool inside = std::hypot(g.center(i1), g.center(i2)) <= 1.0;
      CHECK(std::abs(g(i1, i2) - (inside ? 1.0 : 0.0)) < 1e-15);
    }
  }
  write_text_file(at("pts.csv"), "r,theta\n0.5,1.0\n0,0\n");
  REQUIRE(run({"reconstruct", "--in", at("delta.json"), "--points", at("pts.csv"), "--out", at("vals.csv")}) ==
          kExitOk);
  const auto vals = read_text_file(at("vals.csv"));
  CHECK(vals.rfind("r,theta,re,im\n0.5,1,", 0) == 0);
  CHECK(std::abs(std::stod(vals.substr(vals.find("0.5,1,") + 6)) - 1.0) < 1e-15);
  write_text_file(at("far.csv"), "2.0,0.0\n");
  CHECK(run({"reconstruct", "--in", at("delta.json"), "--points", at("far.csv"), "--out", at("x.csv")}) ==
        kExitConfig);
  CHECK(run({"reconstruct", "--in", at("delta.json"), "--n", "16", "--random-points", "4", "--out",
             at("x.csv")}) == kExitConfig);

  // the expanded bump comes back close to the sampled bump
  REQUIRE(run({"expand", "--in", at("bump.fzg"), "--kmax", "64", "--n-max", "20", "--out", at("bump20.json")}) ==
          kExitOk);
  REQUIRE(run({"reconstruct", "--in", at("bump20.json"), "--n", "256", "--out", at("bump_back.fzg")}) ==
          kExitOk);
  const double err = disk_relative_l2(read_grid(at("bump_back.fzg")), read_grid(at("bump.fzg")), 0.5);
  MESSAGE("n_max=20 reconstruction, disk L2 error: " << err);
  CHECK(err < 1e-2);
}

TEST_CASE("convolve routes") {
  REQUIRE(run({"convolve", "--left-fn", "gauss_bump:0.12,0.1,0", "--right-fn", "zero", "--n", "64", "--kmax",
               "16", "--out", at("c0.json")}) == kExitOk);
  CHECK(read_coeffs(at("c0.json")).max_abs() == 0.0);
  const std::vector<std::string> lr{"--left-fn", "gauss_bump:0.12,0.1,0", "--right-fn", "gauss_bump:0.12,-0.1,0"};
  const std::vector<std::string> rl{"--left-fn", "gauss_bump:0.12,-0.1,0", "--right-fn", "gauss_bump:0.12,0.1,0"};
  auto conv = [&](const std::vector<std::string>& ops, const std::string& route, const std::string& out) {
    std::vector<std::string> args{"convolve"};
    args.insert(args.end(), ops.begin(), ops.end());
    for (const char* s : {"--n", "128", "--kmax", "32", "--n-max", "6", "--route"}) args.emplace_back(s);
    args.push_back(route);
    args.push_back("--out");
    args.push_back(at(out));
    if (route == "kernels") {
      args.push_back("--cache-dir");
      args.push_back(at("kcache"));
    }
    return run(args);
  };
  REQUIRE(conv(lr, "spectral", "s_lr.json") == kExitOk);
  REQUIRE(conv(rl, "spectral", "s_rl.json") == kExitOk);
  CHECK(read_text_file(at("s_lr.json")) == read_text_file(at("s_rl.json")));
  fs::create_directories(at("kcache"));
  for (const char* route : {"polar", "kernels", "brute"}) {
    REQUIRE(conv(lr, route, std::string(route) + ".json") == kExitOk);
  }
  const auto spectral = read_coeffs(at("s_lr.json"));
  const auto peak = spectral.max_abs();
  for (const char* route : {"polar", "kernels", "brute"}) {
    const auto other = read_coeffs(at(std::string(route) + ".json"));
    double worst = 0.0;
    for (std::size_t i = 0; i < other.values().size(); ++i) {
      worst = std::max(worst, std::abs(other.values()[i] - spectral.values()[i]));
    }
    MESSAGE(std::string(route) << " vs spectral, max difference / peak: " << worst / peak);
    CHECK(worst <= 2e-2 * peak);
  }
  CHECK(!fs::is_empty(at("kcache")));
  CHECK(run({"convolve", "--left", at("bump.fzg"), "--right-fn", "zero", "--n", "256", "--kmax", "32",
             "--route", "polar", "--out", at("x.json")}) == kExitConfig);
}

TEST_CASE("kernel-table") {
  REQUIRE(run({"kernel-table", "--kmax", "8", "--n-max", "2", "--left", "1,1", "--right", "1,-1", "--cache-dir",
               at("kt")}) == kExitOk);
  CHECK(fs::exists(fs::path(at("kt")) / "kernel_a1_n1m1_n1m-1.json"));
  REQUIRE(run({"kernel-table", "--kmax", "8", "--n-max", "1", "--cache-dir", at("kt1")}) == kExitOk);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(at("kt1"))) files += e.is_regular_file() ? 1 : 0;
  CHECK(files == 9);
  CHECK(run({"kernel-table", "--kmax", "8", "--left", "1,0", "--right", "0,0", "--cache-dir", at("kt")}) ==
        kExitConfig);
  CHECK(run({"kernel-table", "--kmax", "8", "--left", "1,1", "--cache-dir", at("kt")}) == kExitConfig);
}

TEST_CASE("plot") {
  REQUIRE(run({"plot", "--in", at("zero.fzg"), "--out", at("zero.pgm")}) == kExitOk);
  const auto img = read_file_bytes(at("zero.pgm"));
  for (std::size_t i = img.size() - 64 * 64; i < img.size(); ++i) CHECK(img[i] == 128);
  REQUIRE(run({"plot", "--in", at("bump.fzg"), "--out", at("bump.pgm")}) == kExitOk);
  const auto bump = read_file_bytes(at("bump.pgm"));
  const std::size_t base = bump.size() - 256 * 256;
  std::size_t arg = 0;
  for (std::size_t i = 0; i < 256 * 256; ++i) {
    if (bump[base + i] > bump[base + arg]) arg = i;
  }
  // brightest pixel sits at one of the four center cells
  const std::size_t row = arg / 256;
  const std::size_t col = arg % 256;
  CHECK((row == 127 || row == 128));
  CHECK((col == 127 || col == 128));
  CHECK(read_text_file(at("bump.pgm") + ".txt").rfind("channel re", 0) == 0);
}

TEST_CASE("verify subcommand") {
  int status = -1;
  const auto out = run_binary("verify --suite special_functions --out " + at("report.json"), &status);
  CHECK(status == kExitOk);
  const auto doc = nlohmann::json::parse(out);
  CHECK(doc.at("pass") == true);
  for (const auto& c : doc.at("checks")) CHECK(c.at("suite") == "special_functions");
  CHECK(read_text_file(at("report.json")) == out);
  CHECK(run({"verify", "--in", at("bump.fzg")}) == kExitOk);
}

TEST_CASE("identical configs give byte-identical files") {
  for (const char* tag : {"1", "2"}) {
    const std::string t = tag;
    REQUIRE(run({"sample", "--fn", "gauss_bump:0.1,0.05,0", "--n", "64", "--support", "0.5", "--out",
                 at("det" + t + ".fzg")}) == kExitOk);
    REQUIRE(run({"expand", "--in", at("det" + t + ".fzg"), "--kmax", "24", "--out", at("det" + t + ".json")}) ==
            kExitOk);
    REQUIRE(run({"reconstruct", "--in", at("det" + t + ".json"), "--random-points", "50", "--seed", "7",
                 "--out", at("det" + t + ".csv")}) == kExitOk);
  }
  CHECK(read_file_bytes(at("det1.fzg")) == read_file_bytes(at("det2.fzg")));
  CHECK(read_text_file(at("det1.json")) == read_text_file(at("det2.json")));
  CHECK(read_text_file(at("det1.csv")) == read_text_file(at("det2.csv")));
  REQUIRE(run({"reconstruct", "--in", at("det1.json"), "--random-points", "50", "--seed", "8", "--out",
               at("det3.csv")}) == kExitOk);
  CHECK(read_text_file(at("det1.csv")) != read_text_file(at("det3.csv")));
}
