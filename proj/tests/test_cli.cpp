#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "dsslm/ccdf_io.hpp"
#include "dsslm/profile_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(DSSLM_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "dsslm_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

bool contains(const std::string& s, const std::string& what) { return s.find(what) != std::string::npos; }

}  // namespace

TEST_CASE("usage errors exit 2", "[cli]") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("simulate --n 64 --u 4 --scheme ds-opt --bogus 1").code == 2);
  CHECK(run("simulate --n 64 --u 4 --scheme best").code == 2);
  CHECK(run("simulate --n 64 --u 4 --scheme plain --mod 64qam").code == 2);
  CHECK(run("simulate --n 60 --u 4 --scheme plain --trials 10").code == 2);
  CHECK(run("simulate --n 64 --u 4 --scheme plain --oversample 3").code == 2);
  CHECK(run("gen-shifts --n 64 --u 3 --variant best").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("capacity errors exit 3", "[cli]") {
  const auto r = run("simulate --scheme ds-opt --n 64 --u 9 --trials 10 --out " + scratch("cap").string());
  CHECK(r.code == 3);
  CHECK(contains(r.out, "max U = 8"));
  CHECK(run("gen-shifts --n 64 --u 9").code == 3);
  CHECK(run("gen-shifts --n 64 --u 9 --variant sel1").code == 3);
}

TEST_CASE("gen-shifts reproduces the table and round-trips through check", "[cli]") {
  const auto r = run("gen-shifts --n 64 --u 3 --variant opt");
  CHECK(r.code == 0);
  CHECK(r.out == "n=64\n1,0,1,2,3,1,1,1,1\n2,0,2,4,6,1,1,1,1\n3,0,3,6,9,1,1,1,1\n");

  const auto file = scratch("opt8.csv");
  REQUIRE(run("gen-shifts --n 64 --u 8 --out " + file.string()).code == 0);
  CHECK(dsslm::load_profiles(file.string()).size() == 8);
  CHECK(run("check --profiles " + file.string()).code == 0);

  const auto a = run("gen-shifts --n 128 --u 12 --variant random --seed 5").out;
  CHECK(run("gen-shifts --n 128 --u 12 --variant random --seed 5").out == a);
  CHECK(run("gen-shifts --n 128 --u 12 --variant random --seed 6").out != a);
}

TEST_CASE("check reports violations", "[cli]") {
  const auto bad = scratch("u1u9.csv");
  write_file(bad, "n=64\n1,0,1,2,3,1,1,1,1\n9,0,9,2,11,1,1,1,1\n");
  const auto r = run("check --profiles " + bad.string());
  CHECK(r.code == 1);
  CHECK(contains(r.out, "pair=(1,9) components=(2,4) d_2=8 d_4=8 mod 16"));

  const auto one = scratch("one.csv");
  write_file(one, "n=64\n1,0,1,2,3,1,1,1,1\n");
  const auto s = run("check --profiles " + one.string());
  CHECK(s.code == 0);
  CHECK(contains(s.out, "nothing to check"));

  const auto sel1 = scratch("sel1.csv");
  REQUIRE(run("gen-shifts --n 64 --u 4 --variant sel1 --out " + sel1.string()).code == 0);
  CHECK(run("check --profiles " + sel1.string()).code == 1);
}

TEST_CASE("file errors exit 4 with a line number", "[cli]") {
  CHECK(run("check --profiles " + scratch("missing.csv").string()).code == 4);
  const auto broken = scratch("broken.csv");
  write_file(broken, "n=64\n1,0,1,2,3,1,1,1,1\n2,0,2,4\n");
  const auto r = run("check --profiles " + broken.string());
  CHECK(r.code == 4);
  CHECK(contains(r.out, "line 3"));
  const auto a = run("analyze --profiles " + broken.string());
  CHECK(a.code == 4);
  CHECK(contains(a.out, "line 3"));
}

TEST_CASE("analyze", "[cli]") {
  SECTION("optimal set: 16 spikes per pair and the closed-form variance") {
    const auto r = run("analyze --gen opt --n 256 --u 10");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "pair=(1,2) spikes=16"));
    CHECK_FALSE(contains(r.out, "spikes=8"));
    CHECK(contains(r.out, "variance_of_correlation=0.000228882"));
  }
  SECTION("duplicated profile: one spike of height 1") {
    const auto dup = scratch("dup.csv");
    write_file(dup, "n=64\n1,2,3,4,5,1,j,1,1\n2,2,3,4,5,1,j,1,1\n");
    const auto r = run("analyze --profiles " + dup.string());
    CHECK(r.code == 0);
    CHECK(contains(r.out, "spikes=1 rho_max=1 "));
  }
  SECTION("several sets side by side") {
    const auto r = run("analyze --gen opt --gen sel2 --n 64 --u 4");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "summary"));
    CHECK(contains(r.out, "opt          0.000732422"));
    CHECK(contains(r.out, "sel2         0.00512695"));
  }
  SECTION("rho dump") {
    const auto csv = scratch("rho.csv");
    REQUIRE(run("analyze --gen opt --n 32 --u 2 --dump-rho " + csv.string()).code == 0);
    const auto text = slurp(csv);
    CHECK(text.rfind("tau,rho,pair_i,pair_j\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 32);
  }
}

TEST_CASE("simulate writes deterministic CSVs", "[cli]") {
  const auto a = scratch("sim_a");
  const auto b = scratch("sim_b");
  const auto c = scratch("sim_c");
  const std::string args =
      "simulate --n 64 --u 4 --mod qpsk --scheme plain --scheme ds-opt --scheme c3-random --trials 2000 --seed 3";
  REQUIRE(run(args + " --threads 1 --plot --out " + a.string()).code == 0);
  REQUIRE(run(args + " --threads 1 --out " + b.string()).code == 0);
  REQUIRE(run(args + " --threads 4 --out " + c.string()).code == 0);
  for (const char* s : {"plain", "ds-opt", "c3-random"}) {
    const auto name = std::string("ccdf_") + s + ".csv";
    const auto text = slurp(a / name);
    CHECK_FALSE(text.empty());
    CHECK(slurp(b / name) == text);
    CHECK(slurp(c / name) == text);
    const auto curve = dsslm::load_ccdf_csv((a / name).string());
    CHECK(curve.scheme == s);
    CHECK(curve.trials == 2000);
    CHECK(curve.gamma_db.size() == 71);
    for (std::size_t i = 1; i < curve.prob.size(); ++i) CHECK(curve.prob[i] <= curve.prob[i - 1]);
  }
  const auto plot = slurp(a / "plot.gp");
  CHECK(contains(plot, "set logscale y"));
  CHECK(contains(plot, "ccdf_ds-opt.csv"));
  CHECK_FALSE(fs::exists(b / "plot.gp"));

  const auto d = scratch("sim_d");
  REQUIRE(run("simulate --n 64 --u 4 --scheme ds-opt --trials 500 --gamma-min 6 --gamma-max 8 --gamma-step 0.5 --out " +
              d.string())
              .code == 0);
  CHECK(slurp(d / "ccdf_ds-opt.csv").rfind("gamma_db,ccdf,trials,scheme\n6,", 0) == 0);
}
