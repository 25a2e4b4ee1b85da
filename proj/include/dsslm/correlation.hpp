#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dsslm/class3.hpp"
#include "dsslm/error.hpp"
#include "dsslm/fft.hpp"
#include "dsslm/profile.hpp"
#include "dsslm/sequence.hpp"

// Correlation between sample powers of two alternative signals, expressed
// through their phase sequences:
//
//   rho_ij(tau) = |A(tau)|^2 / N^2,  A(tau) = sum_k P_i(k) conj(P_j(k)) e^{-j 2 pi k tau / N}
//
// For Class III profiles A splits by subcarrier class k mod 4 into four terms
// c_v^(i) conj(c_v^(j)) Abar_v(tau). Abar_v only depends on d_v = tau_v^(i) - tau_v^(j)
// and is nonzero (magnitude N/4) exactly when tau + d_v is a multiple of N/4.

namespace dsslm {

inline constexpr double kSpikeThreshold = 1e-9;

inline std::size_t reduce_mod(long long value, std::size_t n) {
  const auto m = static_cast<long long>(n);
  long long r = value % m;
  if (r < 0) r += m;
  return static_cast<std::size_t>(r);
}

// Per-component shift differences d_v = tau_v^(i) - tau_v^(j) (mod N).
struct ShiftDifference {
  std::size_t n;
  std::array<std::size_t, 4> d;

  static ShiftDifference between(const ShiftRotationProfile& pi, const ShiftRotationProfile& pj) {
    if (pi.n() != pj.n()) throw ConsistencyError("profiles disagree on N");
    ShiftDifference out{pi.n(), {}};
    for (std::size_t v = 0; v < 4; ++v) {
      out.d[v] = reduce_mod(static_cast<long long>(pi.tau(v)) - static_cast<long long>(pj.tau(v)),
                            pi.n());
    }
    return out;
  }

  // d_v reduced into [0, N/4).
  std::size_t quarter(std::size_t v) const { return d.at(v) % (n / 4); }
};

// rho_ij(tau) for every lag, tagged with the pair it came from.
struct CorrelationProfile {
  std::vector<double> rho;
  std::pair<std::size_t, std::size_t> pair{0, 0};

  double sum() const {
    double s = 0.0;
    for (double r : rho) s += r;
    return s;
  }
  double max() const {
    double m = 0.0;
    for (double r : rho) m = std::max(m, r);
    return m;
  }
  // Population variance over lags.
  double variance() const {
    const double n = static_cast<double>(rho.size());
    double mean = 0.0;
    for (double r : rho) mean += r;
    mean /= n;
    double acc = 0.0;
    for (double r : rho) acc += (r - mean) * (r - mean);
    return acc / n;
  }
  std::size_t spike_count(double threshold = kSpikeThreshold) const {
    std::size_t c = 0;
    for (double r : rho) c += r > threshold ? 1 : 0;
    return c;
  }
};

inline void require_same_length(const ComplexSequence& a, const ComplexSequence& b,
                                const char* op) {
  if (a.size() != b.size()) {
    throw SizeError(std::string(op) + ": lengths " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()) + " differ");
  }
}

// Single lag by direct summation.
inline double correlation_coefficient(const ComplexSequence& Pi, const ComplexSequence& Pj,
                                      std::size_t tau) {
  require_same_length(Pi, Pj, "correlation_coefficient");
  const std::size_t n = Pi.size();
  if (tau >= n) throw DomainError("correlation lag outside [0, N)");
  cplx acc{};
  for (std::size_t k = 0; k < n; ++k) acc += Pi[k] * std::conj(Pj[k]) * unit_phase(k, tau, n);
  const double nn = static_cast<double>(n);
  return std::norm(acc) / (nn * nn);
}

// All lags at once: A(tau) is the forward DFT of P_i .* conj(P_j).
inline CorrelationProfile correlation_profile(const ComplexSequence& Pi, const ComplexSequence& Pj,
                                              std::pair<std::size_t, std::size_t> pair = {0, 0}) {
  require_same_length(Pi, Pj, "correlation_profile");
  const std::size_t n = Pi.size();
  std::vector<cplx> q(n);
  for (std::size_t k = 0; k < n; ++k) q[k] = Pi[k] * std::conj(Pj[k]);
  fft_inplace(q);
  CorrelationProfile out;
  out.pair = pair;
  out.rho.resize(n);
  const double nn = static_cast<double>(n) * static_cast<double>(n);
  for (std::size_t t = 0; t < n; ++t) out.rho[t] = std::norm(q[t]) / nn;
  return out;
}

inline CorrelationProfile correlation_profile(const ShiftRotationProfile& pi,
                                              const ShiftRotationProfile& pj,
                                              std::pair<std::size_t, std::size_t> pair = {0, 0}) {
  if (pi.n() != pj.n()) throw ConsistencyError("profiles disagree on N");
  return correlation_profile(phase_sequence(pi), phase_sequence(pj), pair);
}

// Abar_v(tau) = sum_{w<N/4} exp(-j 2 pi (w + (v-1)/4) (tau + d) / (N/4)), v in 1..4,
// summed term by term.
inline cplx a_bar_component(int v, long long d, long long tau, std::size_t n) {
  if (v < 1 || v > 4) throw DomainError("component index must be in 1..4");
  require_block_length(n);
  const std::size_t shift = reduce_mod(tau + d, n);
  cplx acc{};
  for (std::size_t w = 0; w < n / 4; ++w) acc += unit_phase(4 * w + static_cast<std::size_t>(v - 1), shift, n);
  return acc;
}

// A(tau) assembled from the four rotated Abar components.
inline cplx a_tau(const ShiftRotationProfile& pi, const ShiftRotationProfile& pj, long long tau) {
  const auto diff = ShiftDifference::between(pi, pj);
  cplx acc{};
  for (int v = 1; v <= 4; ++v) {
    const auto idx = static_cast<std::size_t>(v - 1);
    const cplx rot = (pi.c(idx) * conj(pj.c(idx))).value();
    acc += rot * a_bar_component(v, static_cast<long long>(diff.d[idx]), tau, pi.n());
  }
  return acc;
}

struct Spike {
  std::size_t tau;
  cplx value;
};

// Per component v (row v-1): the four lags tau = m*N/4 - d_v (mod N), m = 0..3,
// and the Abar_v value there.
using SpikeTable = std::array<std::array<Spike, 4>, 4>;

inline SpikeTable spike_table(const ShiftDifference& diff) {
  require_block_length(diff.n);
  const std::size_t n = diff.n;
  SpikeTable table{};
  for (std::size_t v = 0; v < 4; ++v) {
    for (std::size_t m = 0; m < 4; ++m) {
      const std::size_t tau =
          reduce_mod(static_cast<long long>(m * (n / 4)) - static_cast<long long>(diff.d[v]), n);
      table[v][m] = {tau, a_bar_component(static_cast<int>(v + 1),
                                          static_cast<long long>(diff.d[v]),
                                          static_cast<long long>(tau), n)};
    }
  }
  return table;
}

inline std::size_t distinct_spike_positions(const SpikeTable& table) {
  std::set<std::size_t> taus;
  for (const auto& row : table) {
    for (const auto& s : row) taus.insert(s.tau);
  }
  return taus.size();
}

// Mean over all pairs i < j of the variance over lags of rho_ij.
inline double variance_of_correlation(const ProfileSet& set) {
  if (set.size() < 2) throw DomainError("variance_of_correlation needs U >= 2");
  std::vector<ComplexSequence> phases;
  phases.reserve(set.size());
  for (const auto& p : set) phases.push_back(phase_sequence(p));
  double total = 0.0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < phases.size(); ++i) {
    for (std::size_t j = i + 1; j < phases.size(); ++j) {
      total += correlation_profile(phases[i], phases[j]).variance();
      ++pairs;
    }
  }
  return total / static_cast<double>(pairs);
}

}  // namespace dsslm
