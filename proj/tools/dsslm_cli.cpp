// Command-line front end for the dsslm library.
//
//   dsslm simulate   --n 256 --u 10 --mod 16qam --scheme ds-opt --scheme c3-random ...
//   dsslm analyze    --profiles FILE | --gen opt [--gen sel2 ...] --n N --u U
//   dsslm check      --profiles FILE
//   dsslm gen-shifts --n N --u U --variant opt|sel1|sel2|random [--seed S] [--out FILE]
//
// Exit codes: 0 ok, 1 optimality check failed, 2 usage, 3 capacity (U > N/8),
// 4 file error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dsslm/dsslm.hpp"

namespace {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kCapacity = 3, kFile = 4 };

struct SimulateOptions {
  std::size_t n = 256;
  std::size_t u = 10;
  std::string modulation = "16qam";
  std::vector<std::string> schemes;
  std::size_t trials = 100000;
  std::uint64_t seed = 1;
  std::size_t oversample = 1;
  double gamma_min = 5.0;
  double gamma_max = 12.0;
  double gamma_step = 0.1;
  std::string out = ".";
  std::size_t threads = 0;
  bool plot = false;
  bool independent_seeds = false;
  bool redraw_per_symbol = false;
  bool include_identity = false;
};

struct AnalyzeOptions {
  std::string profiles;
  std::vector<std::string> gen;
  std::size_t n = 256;
  std::size_t u = 10;
  std::uint64_t seed = 1;
  std::string dump_rho;
};

struct GenOptions {
  std::size_t n = 64;
  std::size_t u = 8;
  std::string variant = "opt";
  std::uint64_t seed = 1;
  std::string out;
};

int run_simulate(const SimulateOptions& o) {
  std::vector<dsslm::SchemeConfig> configs;
  const auto grid = dsslm::make_gamma_grid(o.gamma_min, o.gamma_max, o.gamma_step);
  for (const auto& name : o.schemes) {
    dsslm::SchemeConfig cfg;
    cfg.n = o.n;
    cfg.U = o.u;
    cfg.modulation = dsslm::parse_modulation(o.modulation);
    cfg.scheme = dsslm::parse_scheme(name);
    cfg.trials = o.trials;
    cfg.seed = o.seed;
    cfg.oversample = o.oversample;
    cfg.gamma_grid = grid;
    cfg.paired_symbols = !o.independent_seeds;
    cfg.redraw_per_symbol = o.redraw_per_symbol;
    cfg.include_identity = o.include_identity;
    cfg.validate();
    configs.push_back(std::move(cfg));
  }

  std::filesystem::create_directories(o.out);
  std::vector<std::string> files;
  std::vector<std::string> titles;
  for (const auto& cfg : configs) {
    const auto curve = dsslm::estimate_ccdf(cfg, o.threads);
    const std::string file = "ccdf_" + cfg.label() + ".csv";
    const auto path = (std::filesystem::path(o.out) / file).string();
    dsslm::save_ccdf_csv(path, curve);
    files.push_back(file);
    titles.push_back(cfg.label());
    std::printf("%-10s PAPR@1e-2=%s dB  PAPR@1e-3=%s dB  -> %s\n", cfg.label().c_str(),
                dsslm::format_number(dsslm::papr_at_ccdf(curve, 1e-2)).c_str(),
                dsslm::format_number(dsslm::papr_at_ccdf(curve, 1e-3)).c_str(), path.c_str());
  }
  if (o.plot) {
    const std::string title = std::string(dsslm::to_string(configs.front().modulation)) +
                              ", N=" + std::to_string(o.n) + ", U=" + std::to_string(o.u);
    const auto path = (std::filesystem::path(o.out) / "plot.gp").string();
    std::ofstream gp(path, std::ios::binary);
    if (!gp) throw dsslm::ParseError(0, "cannot write '" + path + "'");
    gp << dsslm::gnuplot_script(files, titles, title, "ccdf.png");
    std::printf("plot script -> %s\n", path.c_str());
  }
  return kOk;
}

void report_set(const dsslm::ProfileSet& set, const std::string& name, std::ofstream* rho_out) {
  std::printf("set %s: N=%zu U=%zu\n", name.c_str(), set.n(), set.size());
  if (set.size() < 2) {
    std::printf("  nothing to analyze: a single profile has no pairs\n");
    return;
  }
  std::vector<dsslm::ComplexSequence> phases;
  for (const auto& p : set) phases.push_back(dsslm::phase_sequence(p));
  double worst_residual = 0.0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const auto prof = dsslm::correlation_profile(phases[i], phases[j], {i, j});
      const double residual = std::abs(prof.sum() - 1.0);
      worst_residual = std::max(worst_residual, residual);
      std::printf("  pair=(%ld,%ld) spikes=%zu rho_max=%s variance=%s parseval_residual=%s\n",
                  set[i].u(), set[j].u(), prof.spike_count(),
                  dsslm::format_number(prof.max()).c_str(),
                  dsslm::format_number(prof.variance()).c_str(),
                  dsslm::format_number(residual).c_str());
      if (rho_out) {
        for (std::size_t t = 0; t < prof.rho.size(); ++t) {
          *rho_out << t << ',' << dsslm::format_number(prof.rho[t]) << ',' << set[i].u() << ','
                   << set[j].u() << '\n';
        }
      }
    }
  }
  const auto report = dsslm::check_optimal(set);
  std::printf("  variance_of_correlation=%s  max_parseval_residual=%s  optimal=%s (%zu violations)\n",
              dsslm::format_number(dsslm::variance_of_correlation(set)).c_str(),
              dsslm::format_number(worst_residual).c_str(), report.passed() ? "yes" : "no",
              report.violations.size());
}

int run_analyze(const AnalyzeOptions& o) {
  std::vector<std::pair<std::string, dsslm::ProfileSet>> sets;
  if (!o.profiles.empty()) sets.emplace_back(o.profiles, dsslm::load_profiles(o.profiles));
  for (const auto& g : o.gen) {
    auto rng = dsslm::derive_substream(o.seed, 0);
    sets.emplace_back(g, dsslm::make_profiles(dsslm::parse_variant(g), o.n, o.u, rng));
  }
  if (sets.empty()) throw dsslm::ConfigError("analyze needs --profiles or --gen");

  std::ofstream rho_out;
  if (!o.dump_rho.empty()) {
    rho_out.open(o.dump_rho, std::ios::binary);
    if (!rho_out) throw dsslm::ParseError(0, "cannot write '" + o.dump_rho + "'");
    rho_out << "tau,rho,pair_i,pair_j\n";
  }
  for (const auto& [name, set] : sets) report_set(set, name, rho_out.is_open() ? &rho_out : nullptr);
  if (sets.size() > 1) {
    std::printf("summary (variance of correlation):\n");
    for (const auto& [name, set] : sets) {
      std::printf("  %-12s %s\n", name.c_str(),
                  set.size() < 2 ? "n/a"
                                 : dsslm::format_number(dsslm::variance_of_correlation(set)).c_str());
    }
  }
  return kOk;
}

int run_check(const std::string& file) {
  const auto set = dsslm::load_profiles(file);
  if (set.size() < 2) {
    std::printf("nothing to check: a single profile has no pairs\n");
    return kOk;
  }
  const auto report = dsslm::check_optimal(set);
  for (const auto& v : report.violations) {
    std::printf("pair=(%ld,%ld) components=(%d,%d) d_%d=%zu d_%d=%zu mod %zu\n", v.u_i, v.u_j,
                v.v, v.w, v.v, v.d_v, v.w, v.d_w, set.n() / 4);
  }
  if (report.passed()) {
    std::printf("optimal: all %zu pairs have distinct shift differences mod %zu\n",
                report.pairs_checked, set.n() / 4);
    return kOk;
  }
  return kCheckFailed;
}

int run_gen(const GenOptions& o) {
  auto rng = dsslm::derive_substream(o.seed, 0);
  const auto set = dsslm::make_profiles(dsslm::parse_variant(o.variant), o.n, o.u, rng);
  if (o.out.empty()) {
    std::cout << dsslm::format_profiles(set);
  } else {
    dsslm::save_profiles(o.out, set);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"OFDM PAPR reduction: Class III SLM with deterministic cyclic shifts"};
  app.require_subcommand(1);

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo CCDF of the selected PAPR");
  simulate->add_option("--n", sim.n, "FFT size (power of two >= 8)");
  simulate->add_option("--u", sim.u, "number of alternative signals");
  simulate->add_option("--mod", sim.modulation, "modulation")->check(CLI::IsMember({"qpsk", "16qam"}));
  simulate->add_option("--scheme", sim.schemes, "scheme (repeatable)")
      ->required()
      ->check(CLI::IsMember({"plain", "conv-slm", "c3-random", "ds-opt", "ds-sel1", "ds-sel2"}));
  simulate->add_option("--trials", sim.trials, "OFDM symbols per curve");
  simulate->add_option("--seed", sim.seed, "master seed");
  simulate->add_option("--oversample", sim.oversample, "oversampling factor L")
      ->check(CLI::IsMember({1, 2, 4, 8}));
  simulate->add_option("--gamma-min", sim.gamma_min, "lowest threshold (dB)");
  simulate->add_option("--gamma-max", sim.gamma_max, "highest threshold (dB)");
  simulate->add_option("--gamma-step", sim.gamma_step, "threshold step (dB)");
  simulate->add_option("--out", sim.out, "output directory");
  simulate->add_option("--threads", sim.threads, "worker threads (0 = all cores)");
  simulate->add_flag("--plot", sim.plot, "also write a gnuplot script");
  simulate->add_flag("--independent-seeds", sim.independent_seeds,
                     "draw different symbols for each scheme");
  simulate->add_flag("--redraw-per-symbol", sim.redraw_per_symbol,
                     "c3-random: new random profiles for every symbol");
  simulate->add_flag("--include-identity", sim.include_identity,
                     "ds-*: use u = 0..U-1 so the unmodified signal is a candidate");

  AnalyzeOptions ana;
  auto* analyze = app.add_subcommand("analyze", "correlation analysis of a profile set");
  analyze->add_option("--profiles", ana.profiles, "profile file");
  analyze->add_option("--gen", ana.gen, "generate a set: opt|sel1|sel2|random (repeatable)")
      ->check(CLI::IsMember({"opt", "sel1", "sel2", "random"}));
  analyze->add_option("--n", ana.n, "FFT size for --gen");
  analyze->add_option("--u", ana.u, "set size for --gen");
  analyze->add_option("--seed", ana.seed, "seed for --gen random");
  analyze->add_option("--dump-rho", ana.dump_rho, "write tau,rho,pair_i,pair_j CSV");

  std::string check_file;
  auto* check = app.add_subcommand("check", "verify the optimal shift-difference condition");
  check->add_option("--profiles", check_file, "profile file")->required();

  GenOptions gen;
  auto* gen_shifts = app.add_subcommand("gen-shifts", "write a profile file");
  gen_shifts->add_option("--n", gen.n, "FFT size");
  gen_shifts->add_option("--u", gen.u, "number of profiles");
  gen_shifts->add_option("--variant", gen.variant, "opt|sel1|sel2|random")
      ->check(CLI::IsMember({"opt", "sel1", "sel2", "random"}));
  gen_shifts->add_option("--seed", gen.seed, "seed for the random variant");
  gen_shifts->add_option("--out", gen.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*simulate) return run_simulate(sim);
    if (*analyze) return run_analyze(ana);
    if (*check) return run_check(check_file);
    if (*gen_shifts) return run_gen(gen);
  } catch (const dsslm::CapacityError& e) {
    std::cerr << "error: " << e.what() << " (max U = " << e.max_alternatives() << ")\n";
    return kCapacity;
  } catch (const dsslm::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFile;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFile;
  } catch (const dsslm::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
