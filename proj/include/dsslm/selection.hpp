#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dsslm/correlation.hpp"
#include "dsslm/error.hpp"
#include "dsslm/profile.hpp"
#include "dsslm/rng.hpp"

namespace dsslm {

enum class SelectionVariant { opt, sel1, sel2, random };

inline const char* to_string(SelectionVariant v) noexcept {
  switch (v) {
    case SelectionVariant::opt: return "opt";
    case SelectionVariant::sel1: return "sel1";
    case SelectionVariant::sel2: return "sel2";
    case SelectionVariant::random: return "random";
  }
  return "?";
}

inline SelectionVariant parse_variant(std::string_view s) {
  if (s == "opt") return SelectionVariant::opt;
  if (s == "sel1") return SelectionVariant::sel1;
  if (s == "sel2") return SelectionVariant::sel2;
  if (s == "random") return SelectionVariant::random;
  throw ConfigError("unknown selection variant '" + std::string(s) + "'");
}

// Largest U for which the deterministic shifts keep every pair optimal.
inline std::size_t max_alternatives(std::size_t n) {
  require_block_length(n);
  return n / 8;
}

namespace detail {

// Profiles u = first..first+U-1 with tau_v = mult[v] * u mod N/4 and all
// rotations one.
inline ProfileSet multiplier_profiles(std::size_t n, std::size_t U, const ShiftArray& mult,
                                      std::size_t first = 1) {
  const std::size_t cap = max_alternatives(n);
  if (U == 0) throw DomainError("U must be >= 1");
  if (U > cap) throw CapacityError(U, cap);
  const std::size_t q = n / 4;
  std::vector<ShiftRotationProfile> out;
  out.reserve(U);
  for (std::size_t u = first; u < first + U; ++u) {
    ShiftArray tau{};
    for (std::size_t v = 0; v < 4; ++v) tau[v] = (mult[v] * u) % q;
    out.emplace_back(n, tau, RotationArray{}, static_cast<long>(u));
  }
  return {n, std::move(out)};
}

}  // namespace detail

// Deterministic shifts: profile u has tau = (0, u, 2u, 3u) mod N/4 and
// c = (1, 1, 1, 1), u = 1..U. `first = 0` starts the set at the identity profile.
inline ProfileSet ds_profiles(std::size_t n, std::size_t U, std::size_t first = 1) {
  return detail::multiplier_profiles(n, U, {0, 1, 2, 3}, first);
}

// Degraded variant with tau_2 pinned to 0, so d_1 = d_2 = 0 for every pair.
inline ProfileSet sel1_profiles(std::size_t n, std::size_t U, std::size_t first = 1) {
  return detail::multiplier_profiles(n, U, {0, 0, 2, 3}, first);
}

// Degraded variant with tau_2 = tau_3 = 0, so d_1 = d_2 = d_3 = 0.
inline ProfileSet sel2_profiles(std::size_t n, std::size_t U, std::size_t first = 1) {
  return detail::multiplier_profiles(n, U, {0, 0, 0, 3}, first);
}

// Random shifts in [0, N/4) and random rotations, labelled u = 1..U.
// Duplicate profiles are redrawn while distinct profiles remain available.
template <class Gen>
ProfileSet random_profiles(std::size_t n, std::size_t U, Gen& rng) {
  require_block_length(n);
  if (U == 0) throw DomainError("U must be >= 1");
  const std::size_t q = n / 4;
  // (N/4)^4 * 4^4 = N^4 distinct profiles; saturates quickly, compare in double.
  const double available = static_cast<double>(n) * n * n * n;
  const bool dedupe = static_cast<double>(U) <= available;
  std::vector<ShiftRotationProfile> out;
  out.reserve(U);
  while (out.size() < U) {
    ShiftArray tau{};
    RotationArray c{};
    for (auto& t : tau) t = static_cast<std::size_t>(uniform_below(rng, q));
    for (auto& r : c) r = Rotation::from_exponent(static_cast<unsigned>(uniform_below(rng, 4)));
    ShiftRotationProfile p(n, tau, c, static_cast<long>(out.size() + 1));
    if (dedupe) {
      bool dup = false;
      for (const auto& e : out) dup = dup || e == p;
      if (dup) continue;
    }
    out.push_back(std::move(p));
  }
  return {n, std::move(out)};
}

template <class Gen>
ProfileSet make_profiles(SelectionVariant variant, std::size_t n, std::size_t U, Gen& rng,
                         std::size_t first = 1) {
  switch (variant) {
    case SelectionVariant::opt: return ds_profiles(n, U, first);
    case SelectionVariant::sel1: return sel1_profiles(n, U, first);
    case SelectionVariant::sel2: return sel2_profiles(n, U, first);
    case SelectionVariant::random: return random_profiles(n, U, rng);
  }
  throw ConfigError("unknown selection variant");
}

// One colliding pair of components (v < w, 1-based) within one profile pair.
struct Violation {
  std::size_t i;  // positions in the set, i < j
  std::size_t j;
  long u_i;  // labels of those profiles
  long u_j;
  int v;
  int w;
  std::size_t d_v;  // reduced mod N/4
  std::size_t d_w;
};

struct OptimalityReport {
  std::size_t n = 0;
  std::size_t pairs_checked = 0;
  std::vector<Violation> violations;

  bool passed() const noexcept { return violations.empty(); }
};

// Optimal condition: for every pair of profiles the four shift differences
// d_1..d_4 are pairwise distinct modulo N/4. Every colliding (v, w) is reported.
inline OptimalityReport check_optimal(const ProfileSet& set) {
  OptimalityReport report;
  report.n = set.n();
  const std::size_t q = set.n() / 4;
  const auto& ps = set.profiles();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      if (ps[i].n() != ps[j].n()) throw ConsistencyError("profiles disagree on N");
      const auto diff = ShiftDifference::between(ps[i], ps[j]);
      ++report.pairs_checked;
      for (int v = 0; v < 4; ++v) {
        for (int w = v + 1; w < 4; ++w) {
          const std::size_t dv = diff.d[static_cast<std::size_t>(v)] % q;
          const std::size_t dw = diff.d[static_cast<std::size_t>(w)] % q;
          if (dv == dw) {
            report.violations.push_back({i, j, ps[i].u(), ps[j].u(), v + 1, w + 1, dv, dw});
          }
        }
      }
    }
  }
  return report;
}

}  // namespace dsslm
