#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dsslm/error.hpp"
#include "dsslm/sequence.hpp"

namespace dsslm {

inline bool is_supported_oversampling(std::size_t factor) noexcept {
  return factor == 1 || factor == 2 || factor == 4 || factor == 8;
}

inline void require_oversampling(std::size_t factor) {
  if (!is_supported_oversampling(factor)) {
    throw ConfigError("oversampling factor " + std::to_string(factor) +
                      " not in {1, 2, 4, 8}");
  }
}

// Mid-spectrum zero padding into `out` (length L*N). Bins [0, N/2) stay at
// the front, bins [N/2, N) (negative frequencies, Nyquist included) move to
// the tail. Bin values are copied unscaled, so the inverse transform of the
// padded spectrum carries an extra 1/L amplitude factor.
inline void zero_pad_spectrum(std::span<const cplx> spectrum, std::span<cplx> out) {
  const std::size_t n = spectrum.size();
  const std::size_t m = out.size();
  if (m < n || m % n != 0) throw SizeError("zero_pad_spectrum: bad output length");
  const std::size_t half = n / 2;
  std::fill(out.begin(), out.end(), cplx{});
  for (std::size_t k = 0; k < half; ++k) out[k] = spectrum[k];
  for (std::size_t k = half; k < n; ++k) out[m - n + k] = spectrum[k];
}

inline ComplexSequence oversample_spectrum(const ComplexSequence& X, std::size_t factor) {
  require_domain(X, Domain::frequency, "oversample_spectrum");
  require_oversampling(factor);
  if (factor == 1) return X;
  std::vector<cplx> out(X.size() * factor);
  zero_pad_spectrum(X.samples(), out);
  return {std::move(out), Domain::frequency};
}

}  // namespace dsslm
