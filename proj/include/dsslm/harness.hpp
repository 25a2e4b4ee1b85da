#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "dsslm/class3.hpp"
#include "dsslm/constellation.hpp"
#include "dsslm/error.hpp"
#include "dsslm/fft.hpp"
#include "dsslm/oversample.hpp"
#include "dsslm/papr.hpp"
#include "dsslm/profile.hpp"
#include "dsslm/rng.hpp"
#include "dsslm/selection.hpp"

namespace dsslm {

enum class Scheme { plain, conv_slm, c3_random, ds_opt, ds_sel1, ds_sel2 };

inline const char* to_string(Scheme s) noexcept {
  switch (s) {
    case Scheme::plain: return "plain";
    case Scheme::conv_slm: return "conv-slm";
    case Scheme::c3_random: return "c3-random";
    case Scheme::ds_opt: return "ds-opt";
    case Scheme::ds_sel1: return "ds-sel1";
    case Scheme::ds_sel2: return "ds-sel2";
  }
  return "?";
}

inline Scheme parse_scheme(std::string_view s) {
  for (auto sc : {Scheme::plain, Scheme::conv_slm, Scheme::c3_random, Scheme::ds_opt,
                  Scheme::ds_sel1, Scheme::ds_sel2}) {
    if (s == to_string(sc)) return sc;
  }
  throw ConfigError("unknown scheme '" + std::string(s) + "'");
}

inline bool is_deterministic_shift(Scheme s) noexcept {
  return s == Scheme::ds_opt || s == Scheme::ds_sel1 || s == Scheme::ds_sel2;
}

// Thresholds lo, lo + step, ... up to hi (inclusive within 1e-9), each rounded
// to 1e-9 dB so printed grids carry no accumulation noise.
inline std::vector<double> make_gamma_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw ConfigError("gamma grid needs finite min <= max and step > 0");
  }
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = std::round((lo + static_cast<double>(i) * step) * 1e9) / 1e9;
  }
  return grid;
}

inline std::vector<double> default_gamma_grid() { return make_gamma_grid(5.0, 12.0, 0.1); }

struct SchemeConfig {
  std::size_t n = 256;
  std::size_t U = 10;
  Modulation modulation = Modulation::qam16;
  Scheme scheme = Scheme::plain;
  std::size_t trials = 100000;
  std::uint64_t seed = 1;
  std::size_t oversample = 1;
  std::vector<double> gamma_grid = default_gamma_grid();

  // Same symbol stream for every scheme under one seed.
  bool paired_symbols = true;
  // C3-RANDOM only: fresh random profiles per symbol instead of one fixed set.
  bool redraw_per_symbol = false;
  // DS schemes only: the set is u = 0..U-1 (identity first) instead of u = 1..U.
  bool include_identity = false;
  // Global factor applied to every constellation point.
  cplx constellation_scale{1.0, 0.0};

  std::string label() const { return to_string(scheme); }

  // Alternatives actually compared per symbol.
  std::size_t candidates() const { return scheme == Scheme::plain ? 1 : U; }

  void validate() const {
    require_block_length(n);
    require_oversampling(oversample);
    if (trials == 0) throw ConfigError("trials must be >= 1");
    if (U == 0) throw ConfigError("U must be >= 1");
    if (gamma_grid.empty()) throw ConfigError("gamma grid is empty");
    for (std::size_t i = 1; i < gamma_grid.size(); ++i) {
      if (!(gamma_grid[i] > gamma_grid[i - 1])) {
        throw ConfigError("gamma grid must be strictly ascending");
      }
    }
    if (constellation_scale == cplx{}) throw ConfigError("constellation scale is zero");
    if (is_deterministic_shift(scheme) && U > max_alternatives(n)) {
      throw CapacityError(U, max_alternatives(n));
    }
  }
};

struct CcdfCurve {
  std::string scheme;
  std::vector<double> gamma_db;
  std::vector<double> prob;
  std::vector<std::size_t> exceed;
  std::size_t trials = 0;
};

// Per-configuration state shared by all trials: constellation, fixed profile
// or phase sets, and stream seeds. run() is const and safe to call from
// several threads at once.
class TrialEngine {
 public:
  explicit TrialEngine(SchemeConfig cfg)
      : cfg_(std::move(cfg)), constellation_(Constellation::of(cfg_.modulation)) {
    cfg_.validate();
    scheme_seed_ = derive_seed(cfg_.seed, cfg_.label());
    symbol_seed_ = cfg_.paired_symbols ? cfg_.seed : derive_seed(scheme_seed_, "symbols");
    auto setup = derive_substream(scheme_seed_, kSetupStream);
    const std::size_t first = cfg_.include_identity ? 0 : 1;
    switch (cfg_.scheme) {
      case Scheme::plain:
        break;
      case Scheme::conv_slm:
        phases_ = conventional_slm_phases(cfg_.n, cfg_.U, setup);
        break;
      case Scheme::c3_random:
        if (!cfg_.redraw_per_symbol) profiles_ = random_profiles(cfg_.n, cfg_.U, setup);
        break;
      case Scheme::ds_opt:
        profiles_ = ds_profiles(cfg_.n, cfg_.U, first);
        break;
      case Scheme::ds_sel1:
        profiles_ = sel1_profiles(cfg_.n, cfg_.U, first);
        break;
      case Scheme::ds_sel2:
        profiles_ = sel2_profiles(cfg_.n, cfg_.U, first);
        break;
    }
  }

  const SchemeConfig& config() const noexcept { return cfg_; }
  // Fixed profile set, if the scheme uses one.
  const std::optional<ProfileSet>& profiles() const noexcept { return profiles_; }

  // Frequency-domain symbol of one trial (before oversampling).
  ComplexSequence symbol(std::uint64_t trial) const {
    auto rng = derive_substream(symbol_seed_, trial);
    const std::size_t nbits = cfg_.n * constellation_.bits_per_symbol();
    std::vector<std::uint8_t> bits(nbits);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < nbits; ++i) {
      if ((i & 63u) == 0) word = rng();
      bits[i] = static_cast<std::uint8_t>(word & 1u);
      word >>= 1;
    }
    auto X = map_constellation(bits, constellation_, cfg_.n);
    if (cfg_.constellation_scale == cplx{1.0, 0.0}) return X;
    std::vector<cplx> v = std::move(X).release();
    for (auto& s : v) s *= cfg_.constellation_scale;
    return {std::move(v), Domain::frequency};
  }

  // PAPR (dB) of every candidate of one trial, in candidate order.
  std::vector<double> candidate_paprs(std::uint64_t trial) const {
    const auto X = symbol(trial);
    const std::size_t L = cfg_.oversample;
    const std::size_t m = cfg_.n * L;
    std::vector<cplx> x(m);
    zero_pad_spectrum(X.samples(), x);
    ifft_inplace(x);

    std::vector<double> out;
    switch (cfg_.scheme) {
      case Scheme::plain:
        out.push_back(papr_db(x));
        break;
      case Scheme::conv_slm: {
        out.push_back(papr_db(x));
        std::vector<cplx> prod(cfg_.n);
        std::vector<cplx> y(m);
        for (std::size_t u = 1; u < phases_.size(); ++u) {
          for (std::size_t k = 0; k < cfg_.n; ++k) prod[k] = phases_[u][k] * X[k];
          zero_pad_spectrum(prod, y);
          ifft_inplace(y);
          out.push_back(papr_db(y));
        }
        break;
      }
      default: {
        const PartitionedSignal parts(x);
        std::vector<cplx> y(m);
        auto eval = [&](const ProfileSet& set) {
          for (const auto& p : set) {
            parts.alternative(p, L, y);
            out.push_back(papr_db(y));
          }
        };
        if (profiles_) {
          eval(*profiles_);
        } else {
          auto rng = derive_substream(scheme_seed_, trial);
          eval(random_profiles(cfg_.n, cfg_.U, rng));
        }
        break;
      }
    }
    return out;
  }

  // Lowest candidate PAPR (dB): the signal an SLM transmitter would send.
  double run(std::uint64_t trial) const {
    const auto p = candidate_paprs(trial);
    return *std::min_element(p.begin(), p.end());
  }

 private:
  static constexpr std::uint64_t kSetupStream = ~std::uint64_t{0};

  SchemeConfig cfg_;
  Constellation constellation_;
  std::uint64_t scheme_seed_ = 0;
  std::uint64_t symbol_seed_ = 0;
  std::optional<ProfileSet> profiles_;
  std::vector<ComplexSequence> phases_;
};

inline double run_trial(const SchemeConfig& cfg, std::uint64_t trial_index) {
  return TrialEngine(cfg).run(trial_index);
}

inline std::size_t resolve_threads(std::size_t threads) {
  if (threads != 0) return threads;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

// Selected PAPR of trials 0..trials-1, indexed by trial. Workers take fixed
// contiguous index ranges; the result does not depend on the worker count.
inline std::vector<double> simulate_paprs(const SchemeConfig& cfg, std::size_t threads = 1) {
  const TrialEngine engine(cfg);
  std::vector<double> out(cfg.trials);
  const std::size_t workers = std::min(resolve_threads(threads), cfg.trials);
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t t = lo; t < hi; ++t) out[t] = engine.run(t);
  };
  if (workers <= 1) {
    work(0, cfg.trials);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (cfg.trials + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(cfg.trials, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(work, lo, hi);
  }
  for (auto& th : pool) th.join();
  return out;
}

inline CcdfCurve ccdf_from_samples(std::span<const double> paprs,
                                   const std::vector<double>& gamma_grid, std::string label) {
  if (paprs.empty()) throw ConfigError("no trials to summarize");
  CcdfCurve curve;
  curve.scheme = std::move(label);
  curve.gamma_db = gamma_grid;
  curve.trials = paprs.size();
  curve.exceed.assign(gamma_grid.size(), 0);
  std::vector<double> sorted(paprs.begin(), paprs.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t g = 0; g < gamma_grid.size(); ++g) {
    const auto it = std::upper_bound(sorted.begin(), sorted.end(), gamma_grid[g]);
    curve.exceed[g] = static_cast<std::size_t>(sorted.end() - it);
  }
  curve.prob.resize(gamma_grid.size());
  for (std::size_t g = 0; g < gamma_grid.size(); ++g) {
    curve.prob[g] = static_cast<double>(curve.exceed[g]) / static_cast<double>(curve.trials);
  }
  return curve;
}

inline CcdfCurve estimate_ccdf(const SchemeConfig& cfg, std::size_t threads = 1) {
  cfg.validate();
  const auto paprs = simulate_paprs(cfg, threads);
  return ccdf_from_samples(paprs, cfg.gamma_grid, cfg.label());
}

inline std::vector<CcdfCurve> run_experiment(const std::vector<SchemeConfig>& configs,
                                             std::size_t threads = 1) {
  for (const auto& c : configs) {
    if (c.gamma_grid != configs.front().gamma_grid) {
      throw ConfigError("configurations in one experiment must share the gamma grid");
    }
  }
  std::vector<CcdfCurve> curves;
  curves.reserve(configs.size());
  for (const auto& c : configs) curves.push_back(estimate_ccdf(c, threads));
  return curves;
}

// Threshold (dB) at which the curve crosses probability p, interpolated
// linearly in log10(prob) between neighbouring grid points. NaN when the
// curve never drops to p or starts below it.
inline double papr_at_ccdf(const CcdfCurve& curve, double p) {
  const auto& g = curve.gamma_db;
  const auto& q = curve.prob;
  if (q.empty() || q.front() <= p) return std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 1; i < q.size(); ++i) {
    if (q[i] <= p) {
      const double q0 = q[i - 1];
      const double q1 = q[i];
      double frac;
      if (q1 > 0.0) {
        frac = (std::log10(q0) - std::log10(p)) / (std::log10(q0) - std::log10(q1));
      } else {
        frac = (q0 - p) / (q0 - q1);
      }
      return g[i - 1] + frac * (g[i] - g[i - 1]);
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

// Classic Nyquist-rate approximation 1 - (1 - e^{-gamma})^N, which treats the
// N samples as independent complex Gaussians.
inline double plain_ccdf_nyquist(double gamma_db, std::size_t n) {
  const double g = std::pow(10.0, gamma_db / 10.0);
  return -std::expm1(static_cast<double>(n) * std::log1p(-std::exp(-g)));
}

}  // namespace dsslm
