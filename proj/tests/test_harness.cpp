#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "dsslm/harness.hpp"
#include "oracles.hpp"

using namespace dsslm;

namespace {

SchemeConfig small_config(Scheme s, std::size_t n = 64, std::size_t U = 4) {
  SchemeConfig cfg;
  cfg.n = n;
  cfg.U = U;
  cfg.scheme = s;
  cfg.trials = 400;
  cfg.seed = 2024;
  return cfg;
}

double oracle_papr_db(const std::vector<oracle::cplx>& x) {
  double peak = 0.0;
  double sum = 0.0;
  for (const auto& s : x) {
    peak = std::max(peak, std::norm(s));
    sum += std::norm(s);
  }
  return 10.0 * std::log10(peak / (sum / static_cast<double>(x.size())));
}

}  // namespace

TEST_CASE("substreams are deterministic and uncorrelated", "[harness][rng]") {
  auto a = derive_substream(5, 17);
  auto b = derive_substream(5, 17);
  for (int i = 0; i < 100; ++i) CHECK(a() == b());

  const std::size_t m = 20000;
  for (std::uint64_t idx = 0; idx < 8; ++idx) {
    auto s = derive_substream(5, idx);
    auto t = derive_substream(5, idx + 1);
    std::vector<double> u(m), v(m);
    for (std::size_t i = 0; i < m; ++i) {
      u[i] = uniform_unit(s);
      v[i] = uniform_unit(t);
    }
    const double mu = std::accumulate(u.begin(), u.end(), 0.0) / m;
    const double mv = std::accumulate(v.begin(), v.end(), 0.0) / m;
    double cov = 0.0, su = 0.0, sv = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      cov += (u[i] - mu) * (v[i] - mv);
      su += (u[i] - mu) * (u[i] - mu);
      sv += (v[i] - mv) * (v[i] - mv);
    }
    CHECK(std::abs(cov / std::sqrt(su * sv)) < 0.05);
  }
  CHECK(derive_seed(1, "ds-opt") != derive_seed(1, "ds-sel1"));
  CHECK(derive_seed(1, "ds-opt") == derive_seed(1, "ds-opt"));
}

TEST_CASE("gamma grid and analytic curve", "[harness]") {
  const auto g = default_gamma_grid();
  REQUIRE(g.size() == 71);
  CHECK(g.front() == 5.0);
  CHECK(g[1] == 5.1);
  CHECK(g.back() == 12.0);
  CHECK_THROWS_AS(make_gamma_grid(1, 0, 0.1), ConfigError);
  CHECK_THROWS_AS(make_gamma_grid(0, 1, 0), ConfigError);

  const double gl = std::pow(10.0, 0.8);
  CHECK(plain_ccdf_nyquist(8.0, 256) == Catch::Approx(1.0 - std::pow(1.0 - std::exp(-gl), 256.0)).epsilon(1e-12));
}

TEST_CASE("plain trial equals the PAPR of the inverse DFT of its symbol", "[harness]") {
  const auto cfg = small_config(Scheme::plain, 32);
  const TrialEngine engine(cfg);
  for (std::uint64_t t = 0; t < 10; ++t) {
    const auto X = engine.symbol(t).vector();
    CHECK(engine.run(t) == Catch::Approx(oracle_papr_db(oracle::idft(X))).margin(1e-9));
    CHECK(run_trial(cfg, t) == engine.run(t));
  }
}

TEST_CASE("deterministic-shift candidates match a dense reference", "[harness]") {
  const std::size_t n = 32;
  auto cfg = small_config(Scheme::ds_opt, n, 4);
  const TrialEngine engine(cfg);
  for (std::uint64_t t = 0; t < 4; ++t) {
    const auto X = engine.symbol(t).vector();
    const auto cands = engine.candidate_paprs(t);
    REQUIRE(cands.size() == 4);
    for (std::size_t u = 1; u <= 4; ++u) {
      const std::size_t tau[4] = {0, u % (n / 4), 2 * u % (n / 4), 3 * u % (n / 4)};
      const unsigned c[4] = {0, 0, 0, 0};
      const auto P = oracle::dft(oracle::conversion_vector(n, tau, c));
      std::vector<oracle::cplx> Y(n);
      for (std::size_t k = 0; k < n; ++k) Y[k] = P[k] * X[k];  // 4 * (dft / 4)
      CHECK(cands[u - 1] == Catch::Approx(oracle_papr_db(oracle::idft(Y))).margin(1e-9));
    }
    CHECK(engine.run(t) == *std::min_element(cands.begin(), cands.end()));
    CHECK(engine.run(t) <= cands[0]);
  }
}

TEST_CASE("selection properties per trial", "[harness][property]") {
  SECTION("conventional SLM with U=1 is plain") {
    auto conv = small_config(Scheme::conv_slm);
    conv.U = 1;
    const TrialEngine a(conv), b(small_config(Scheme::plain));
    for (std::uint64_t t = 0; t < 50; ++t) CHECK(a.run(t) == b.run(t));
  }
  SECTION("conventional SLM never exceeds plain on paired symbols") {
    const TrialEngine a(small_config(Scheme::conv_slm)), b(small_config(Scheme::plain));
    for (std::uint64_t t = 0; t < 200; ++t) CHECK(a.run(t) <= b.run(t));
  }
  SECTION("identity-first deterministic set never exceeds plain") {
    auto cfg = small_config(Scheme::ds_opt);
    cfg.include_identity = true;
    const TrialEngine a(cfg), b(small_config(Scheme::plain));
    REQUIRE((*a.profiles())[0] == ShiftRotationProfile::identity(cfg.n));
    for (std::uint64_t t = 0; t < 100; ++t) {
      CHECK(a.candidate_paprs(t)[0] == Catch::Approx(b.run(t)).margin(1e-12));
      CHECK(a.run(t) <= b.run(t) + 1e-12);
    }
  }
  SECTION("a larger nested deterministic set never does worse") {
    for (Scheme s : {Scheme::ds_opt, Scheme::ds_sel1, Scheme::ds_sel2}) {
      auto small = small_config(s, 64, 3);
      auto large = small_config(s, 64, 8);
      const TrialEngine a(small), b(large);
      for (std::uint64_t t = 0; t < 100; ++t) CHECK(b.run(t) <= a.run(t));
    }
  }
  SECTION("paired symbols are shared across schemes") {
    const TrialEngine a(small_config(Scheme::ds_opt)), b(small_config(Scheme::c3_random));
    CHECK(a.symbol(3) == b.symbol(3));
    auto ind = small_config(Scheme::ds_opt);
    ind.paired_symbols = false;
    CHECK_FALSE(TrialEngine(ind).symbol(3) == a.symbol(3));
  }
}

TEST_CASE("random class III set is fixed per experiment unless redrawn", "[harness]") {
  auto cfg = small_config(Scheme::c3_random);
  const TrialEngine a(cfg), b(cfg);
  REQUIRE(a.profiles().has_value());
  CHECK(identical(*a.profiles(), *b.profiles()));
  cfg.redraw_per_symbol = true;
  const TrialEngine r(cfg), r2(cfg);
  CHECK_FALSE(r.profiles().has_value());
  for (std::uint64_t t = 0; t < 20; ++t) CHECK(r.run(t) == r2.run(t));
}

TEST_CASE("results do not depend on the worker count", "[harness][property]") {
  for (Scheme s : {Scheme::plain, Scheme::conv_slm, Scheme::c3_random, Scheme::ds_opt}) {
    auto cfg = small_config(s);
    cfg.trials = 301;
    cfg.oversample = 2;
    const auto one = simulate_paprs(cfg, 1);
    CHECK(simulate_paprs(cfg, 3) == one);
    CHECK(simulate_paprs(cfg, 8) == one);
  }
}

TEST_CASE("constellation scale does not change PAPR", "[harness][property]") {
  for (Scheme s : {Scheme::plain, Scheme::ds_opt, Scheme::conv_slm}) {
    auto base = small_config(s);
    base.trials = 200;
    auto rotated = base;
    rotated.constellation_scale = {0.0, 1.0};
    auto doubled = base;
    doubled.constellation_scale = {2.0, 0.0};
    auto general = base;
    general.constellation_scale = {0.37, -1.9};

    const auto p = simulate_paprs(base);
    CHECK(simulate_paprs(rotated) == p);
    CHECK(simulate_paprs(doubled) == p);
    const auto q = simulate_paprs(general);
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(q[i] == Catch::Approx(p[i]).margin(1e-9));
    const auto grid = make_gamma_grid(4.0, 11.0, 0.25);
    CHECK(ccdf_from_samples(q, grid, "x").exceed == ccdf_from_samples(p, grid, "x").exceed);
  }
  auto zero = small_config(Scheme::plain);
  zero.constellation_scale = {0.0, 0.0};
  CHECK_THROWS_AS(zero.validate(), ConfigError);
}

TEST_CASE("CCDF estimation", "[harness]") {
  SECTION("counts are strict exceedances") {
    const std::vector<double> s{1.0, 2.0, 2.0, 3.0};
    const auto c = ccdf_from_samples(s, {0.5, 1.0, 2.0, 2.5, 3.0}, "t");
    CHECK(c.exceed == std::vector<std::size_t>{4, 3, 1, 1, 0});
    CHECK(c.prob == std::vector<double>{1.0, 0.75, 0.25, 0.25, 0.0});
    CHECK(c.trials == 4);
    CHECK_THROWS_AS(ccdf_from_samples(std::vector<double>{}, {1.0}, "t"), ConfigError);
  }
  SECTION("curves start at 1 below every sample and never increase") {
    auto cfg = small_config(Scheme::ds_opt);
    cfg.gamma_grid = make_gamma_grid(0.0, 14.0, 0.05);
    const auto c = estimate_ccdf(cfg);
    CHECK(c.prob.front() == 1.0);
    CHECK(c.prob.back() == 0.0);
    for (std::size_t i = 1; i < c.prob.size(); ++i) CHECK(c.prob[i] <= c.prob[i - 1]);
  }
  SECTION("conventional SLM dominates plain on paired runs") {
    const auto curves = run_experiment({small_config(Scheme::plain), small_config(Scheme::conv_slm)});
    for (std::size_t i = 0; i < curves[0].prob.size(); ++i) CHECK(curves[1].prob[i] <= curves[0].prob[i]);
  }
  SECTION("papr_at_ccdf interpolates in log probability") {
    CcdfCurve c;
    c.gamma_db = {6.0, 7.0, 8.0};
    c.prob = {1e-1, 1e-2, 1e-4};
    CHECK(papr_at_ccdf(c, 1e-2) == Catch::Approx(7.0));
    CHECK(papr_at_ccdf(c, 1e-3) == Catch::Approx(7.5));
    CHECK(std::isnan(papr_at_ccdf(c, 1e-5)));
    CHECK(std::isnan(papr_at_ccdf(c, 0.5)));
    c.prob = {1e-1, 1e-2, 0.0};
    CHECK(papr_at_ccdf(c, 5e-3) == Catch::Approx(7.5));
  }
}

TEST_CASE("experiments", "[harness]") {
  CHECK(run_experiment({}).empty());

  auto a = small_config(Scheme::plain);
  auto b = small_config(Scheme::ds_opt);
  b.gamma_grid = make_gamma_grid(5.0, 12.0, 0.2);
  CHECK_THROWS_AS(run_experiment({a, b}), ConfigError);

  const auto alone = run_experiment({small_config(Scheme::ds_opt)});
  const auto together = run_experiment(
      {small_config(Scheme::plain), small_config(Scheme::ds_opt), small_config(Scheme::c3_random)});
  CHECK(together[1].exceed == alone[0].exceed);
  CHECK(together[1].scheme == "ds-opt");
}

TEST_CASE("configuration validation", "[harness]") {
  auto cfg = small_config(Scheme::ds_opt, 256, 33);
  CHECK_THROWS_AS(cfg.validate(), CapacityError);
  CHECK_THROWS_AS(TrialEngine(cfg), CapacityError);
  cfg.U = 32;
  CHECK_NOTHROW(cfg.validate());
  cfg.scheme = Scheme::c3_random;
  cfg.U = 40;
  CHECK_NOTHROW(cfg.validate());
  cfg.oversample = 3;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.oversample = 4;
  cfg.n = 100;
  CHECK_THROWS_AS(cfg.validate(), SizeError);
  cfg.n = 256;
  cfg.trials = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  CHECK(parse_scheme("ds-sel2") == Scheme::ds_sel2);
  CHECK_THROWS_AS(parse_scheme("ds"), ConfigError);
  CHECK(resolve_threads(3) == 3);
  CHECK(resolve_threads(0) >= 1);
}

TEST_CASE("plain 16-QAM stays near the Gaussian approximation", "[harness]") {
  SchemeConfig cfg;
  cfg.n = 256;
  cfg.trials = 20000;
  cfg.seed = 7;
  const auto c = estimate_ccdf(cfg);
  for (double g : {7.0, 8.0, 9.0}) {
    const auto i = static_cast<std::size_t>(std::lround((g - 5.0) / 0.1));
    CHECK(std::abs(c.prob[i] - plain_ccdf_nyquist(g, 256)) < 0.05);
  }
}
