#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "dsslm/error.hpp"
#include "dsslm/sequence.hpp"

namespace dsslm {

// Precomputed twiddles and bit-reversal permutation for one radix-2 size.
class FftPlan {
 public:
  explicit FftPlan(std::size_t n) : n_(n), twiddle_(n / 2), bitrev_(n) {
    if (!is_power_of_two(n)) {
      throw SizeError("FFT length " + std::to_string(n) + " is not a power of two");
    }
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) ++bits;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r = 0;
      for (std::size_t b = 0; b < bits; ++b) r |= ((i >> b) & 1u) << (bits - 1 - b);
      bitrev_[i] = r;
    }
    // Each twiddle is evaluated directly; a running product drifts at n = 4096.
    for (std::size_t k = 0; k < n / 2; ++k) {
      twiddle_[k] = std::polar(1.0, -2.0 * kPi * static_cast<double>(k) /
                                        static_cast<double>(n));
    }
  }

  std::size_t size() const noexcept { return n_; }

  // Unnormalized forward transform; the inverse applies the 1/N factor.
  void execute(std::span<cplx> data, bool inverse) const {
    if (data.size() != n_) throw SizeError("FftPlan: buffer length mismatch");
    for (std::size_t i = 0; i < n_; ++i) {
      if (i < bitrev_[i]) std::swap(data[i], data[bitrev_[i]]);
    }
    for (std::size_t len = 2; len <= n_; len <<= 1) {
      const std::size_t half = len / 2;
      const std::size_t stride = n_ / len;
      for (std::size_t start = 0; start < n_; start += len) {
        for (std::size_t k = 0; k < half; ++k) {
          cplx w = twiddle_[k * stride];
          if (inverse) w = std::conj(w);
          const cplx t = w * data[start + k + half];
          data[start + k + half] = data[start + k] - t;
          data[start + k] += t;
        }
      }
    }
    if (inverse) {
      const double scale = 1.0 / static_cast<double>(n_);
      for (auto& v : data) v *= scale;
    }
  }

 private:
  std::size_t n_;
  std::vector<cplx> twiddle_;
  std::vector<std::size_t> bitrev_;
};

// Per-thread plan cache; plans are immutable once built.
inline const FftPlan& plan_for(std::size_t n) {
  thread_local std::map<std::size_t, std::unique_ptr<FftPlan>> cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<FftPlan>(n);
  return *slot;
}

inline void fft_inplace(std::span<cplx> data) { plan_for(data.size()).execute(data, false); }
inline void ifft_inplace(std::span<cplx> data) { plan_for(data.size()).execute(data, true); }

// X[k] = sum_n x[n] e^{-j 2 pi k n / N}
inline ComplexSequence fft(const ComplexSequence& x) {
  require_domain(x, Domain::time, "fft");
  std::vector<cplx> out = x.vector();
  fft_inplace(out);
  return {std::move(out), Domain::frequency};
}

// x[n] = (1/N) sum_k X[k] e^{+j 2 pi k n / N}
inline ComplexSequence ifft(const ComplexSequence& X) {
  require_domain(X, Domain::frequency, "ifft");
  std::vector<cplx> out = X.vector();
  ifft_inplace(out);
  return {std::move(out), Domain::time};
}

// out[n] = sum_m a[m] b[(n - m) mod N], evaluated through the spectrum.
inline ComplexSequence circular_convolve(const ComplexSequence& a,
                                         const ComplexSequence& b) {
  require_domain(a, Domain::time, "circular_convolve");
  require_domain(b, Domain::time, "circular_convolve");
  if (a.size() != b.size()) {
    throw SizeError("circular_convolve: lengths " + std::to_string(a.size()) +
                    " and " + std::to_string(b.size()) + " differ");
  }
  std::vector<cplx> fa = a.vector();
  std::vector<cplx> fb = b.vector();
  fft_inplace(fa);
  fft_inplace(fb);
  for (std::size_t k = 0; k < fa.size(); ++k) fa[k] *= fb[k];
  ifft_inplace(fa);
  return {std::move(fa), Domain::time};
}

// One nonzero entry of a sparse time-domain kernel.
struct Tap {
  std::size_t offset;
  cplx gain;

  friend bool operator==(const Tap&, const Tap&) = default;
};

// Kernel of the given length with the taps written in (coinciding offsets add).
inline ComplexSequence densify(std::span<const Tap> taps, std::size_t n) {
  std::vector<cplx> dense(n);
  for (const auto& t : taps) {
    if (t.offset >= n) throw DomainError("tap offset outside [0, N)");
    dense[t.offset] += t.gain;
  }
  return {std::move(dense), Domain::time};
}

// out[n] = sum_taps gain * x[(n - offset) mod N]. O(N * taps) with no FFT.
inline ComplexSequence sparse_circular_convolve(const ComplexSequence& x,
                                                std::span<const Tap> taps) {
  require_domain(x, Domain::time, "sparse_circular_convolve");
  if (taps.empty()) throw DomainError("sparse_circular_convolve: no taps");
  const std::size_t n = x.size();
  for (const auto& t : taps) {
    if (t.offset >= n) {
      throw DomainError("tap offset " + std::to_string(t.offset) +
                        " outside [0, " + std::to_string(n) + ")");
    }
  }
  std::vector<cplx> out(n);
  const auto src = x.samples();
  for (const auto& t : taps) {
    // out[n] gets x[n - offset]: two contiguous runs instead of a modulo per sample.
    const std::size_t head = t.offset;
    for (std::size_t i = 0; i < head; ++i) out[i] += t.gain * src[n - head + i];
    for (std::size_t i = head; i < n; ++i) out[i] += t.gain * src[i - head];
  }
  return {std::move(out), Domain::time};
}

}  // namespace dsslm
