#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dsslm/error.hpp"
#include "dsslm/fft.hpp"
#include "dsslm/profile.hpp"
#include "dsslm/rng.hpp"
#include "dsslm/sequence.hpp"

namespace dsslm {

// Gain of base vector `i` (0-based) at its m-th nonzero position m*N/4:
// j^(i*m). Rows: (1,1,1,1), (1,j,-1,-j), (1,-1,1,-1), (1,-j,-1,j).
constexpr Rotation base_gain(std::size_t i, std::size_t m) noexcept {
  return Rotation::from_exponent(static_cast<unsigned>((i * m) & 3u));
}

// The four base vectors p_1..p_4 of length n. fft(p_i) is 4 on the bins
// k = i-1 (mod 4) and zero elsewhere.
inline std::array<ComplexSequence, 4> base_vectors(std::size_t n) {
  require_block_length(n);
  auto make = [n](std::size_t i) {
    std::vector<cplx> v(n);
    for (std::size_t m = 0; m < 4; ++m) v[m * (n / 4)] = base_gain(i, m).value();
    return ComplexSequence(std::move(v), Domain::time);
  };
  return {make(0), make(1), make(2), make(3)};
}

// Sparse form of p^(u) = sum_i c_i * (p_i cyclically shifted right by tau_i).
// Coinciding taps are summed exactly (all gains are Gaussian integers) and
// dropped when they cancel. Taps are ordered by offset.
inline std::vector<Tap> conversion_vector(const ShiftRotationProfile& profile) {
  const std::size_t n = profile.n();
  struct Acc {
    std::size_t offset;
    int re;
    int im;
  };
  std::vector<Acc> acc;
  acc.reserve(16);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t m = 0; m < 4; ++m) {
      const std::size_t offset = (profile.tau(i) + m * (n / 4)) % n;
      const cplx g = (profile.c(i) * base_gain(i, m)).value();
      const int re = static_cast<int>(g.real());
      const int im = static_cast<int>(g.imag());
      auto it = std::find_if(acc.begin(), acc.end(),
                             [offset](const Acc& a) { return a.offset == offset; });
      if (it == acc.end()) {
        acc.push_back({offset, re, im});
      } else {
        it->re += re;
        it->im += im;
      }
    }
  }
  std::sort(acc.begin(), acc.end(),
            [](const Acc& a, const Acc& b) { return a.offset < b.offset; });
  std::vector<Tap> taps;
  taps.reserve(acc.size());
  for (const auto& a : acc) {
    if (a.re != 0 || a.im != 0) taps.push_back({a.offset, cplx(a.re, a.im)});
  }
  return taps;
}

// e^{-j 2 pi (k*tau mod N) / N}, with the product reduced exactly first.
inline cplx unit_phase(std::size_t k, std::size_t tau, std::size_t n) {
  const std::size_t r = (k * tau) % n;
  return std::polar(1.0, -2.0 * kPi * static_cast<double>(r) / static_cast<double>(n));
}

// Unit-magnitude phase sequence: P(k) = c_m e^{-j 2 pi k tau_m / N} with
// m - 1 = k mod 4. Equals fft(conversion vector) / 4.
inline ComplexSequence phase_sequence(const ShiftRotationProfile& profile) {
  const std::size_t n = profile.n();
  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t m = k & 3u;
    out[k] = profile.c(m).value() * unit_phase(k, profile.tau(m), n);
  }
  return {std::move(out), Domain::frequency};
}

inline void require_profile_length(std::size_t len, const ShiftRotationProfile& p,
                                   const char* op) {
  if (len != p.n()) {
    throw SizeError(std::string(op) + ": sequence length " + std::to_string(len) +
                    " does not match profile N=" + std::to_string(p.n()));
  }
}

// Low-complexity path: circular convolution of the OFDM symbol with the
// sparse conversion vector. No transform involved.
inline ComplexSequence generate_alternative_time(const ComplexSequence& x,
                                                 const ShiftRotationProfile& profile) {
  require_domain(x, Domain::time, "generate_alternative_time");
  require_profile_length(x.size(), profile, "generate_alternative_time");
  const auto taps = conversion_vector(profile);
  return sparse_circular_convolve(x, taps);
}

// Reference path: ifft(4 * P^(u) .* X). The factor 4 matches the amplitude of
// fft(p_i), so both paths produce the same samples.
inline ComplexSequence generate_alternative_freq(const ComplexSequence& X,
                                                 const ShiftRotationProfile& profile) {
  require_domain(X, Domain::frequency, "generate_alternative_freq");
  require_profile_length(X.size(), profile, "generate_alternative_freq");
  const auto phase = phase_sequence(profile);
  std::vector<cplx> prod(X.size());
  for (std::size_t k = 0; k < prod.size(); ++k) prod[k] = 4.0 * phase[k] * X[k];
  ifft_inplace(prod);
  return {std::move(prod), Domain::time};
}

// Random phase sequences for conventional SLM. The first one is all ones so
// the unmodified symbol is always a candidate.
template <class Gen>
std::vector<ComplexSequence> conventional_slm_phases(std::size_t n, std::size_t U, Gen& rng) {
  require_block_length(n);
  if (U == 0) throw DomainError("conventional_slm_phases: U must be >= 1");
  std::vector<ComplexSequence> out;
  out.reserve(U);
  out.emplace_back(std::vector<cplx>(n, cplx{1.0, 0.0}), Domain::frequency);
  for (std::size_t u = 1; u < U; ++u) {
    std::vector<cplx> v(n);
    std::uint64_t word = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if ((k & 31u) == 0) word = rng();
      v[k] = Rotation::from_exponent(static_cast<unsigned>(word & 3u)).value();
      word >>= 2;
    }
    out.emplace_back(std::move(v), Domain::frequency);
  }
  return out;
}

// A time-domain block split into its four interleaved partitions
// y_i = x (*) p_i, each holding the subcarriers k = i-1 (mod 4). Every Class III
// alternative is then sum_i c_i * (y_i shifted right by tau_i): 4 taps per
// sample instead of 16. Works on any length divisible by 4, including an
// oversampled block of length L*N, where a shift tau becomes L*tau.
class PartitionedSignal {
 public:
  explicit PartitionedSignal(std::span<const cplx> x) : m_(x.size()) {
    if (m_ < 4 || m_ % 4 != 0) throw SizeError("PartitionedSignal: length not divisible by 4");
    const std::size_t q = m_ / 4;
    for (std::size_t i = 0; i < 4; ++i) {
      auto& y = parts_[i];
      y.assign(m_, cplx{});
      for (std::size_t m = 0; m < 4; ++m) {
        const cplx g = base_gain(i, m).value();
        const std::size_t off = m * q;
        for (std::size_t t = 0; t < m_; ++t) y[t] += g * x[(t + m_ - off) % m_];
      }
    }
  }

  std::size_t size() const noexcept { return m_; }
  std::span<const cplx> partition(std::size_t i) const { return parts_.at(i); }

  // Writes the alternative for `profile` into `out` (length size()).
  // `shift_scale` is the oversampling factor L (size() == L * profile.n()).
  void alternative(const ShiftRotationProfile& profile, std::size_t shift_scale,
                   std::span<cplx> out) const {
    if (profile.n() * shift_scale != m_ || out.size() != m_) {
      throw SizeError("PartitionedSignal::alternative: length mismatch");
    }
    std::fill(out.begin(), out.end(), cplx{});
    for (std::size_t i = 0; i < 4; ++i) {
      const cplx c = profile.c(i).value();
      const std::size_t s = (profile.tau(i) * shift_scale) % m_;
      const auto& y = parts_[i];
      for (std::size_t t = 0; t < s; ++t) out[t] += c * y[m_ - s + t];
      for (std::size_t t = s; t < m_; ++t) out[t] += c * y[t - s];
    }
  }

 private:
  std::size_t m_;
  std::array<std::vector<cplx>, 4> parts_;
};

}  // namespace dsslm
