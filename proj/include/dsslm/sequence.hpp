#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dsslm/error.hpp"

namespace dsslm {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

enum class Domain { time, frequency };

inline const char* to_string(Domain d) noexcept {
  return d == Domain::time ? "time" : "frequency";
}

constexpr bool is_power_of_two(std::size_t n) noexcept {
  return n != 0 && (n & (n - 1)) == 0;
}

// Smallest block length the library accepts: N/4 >= 2 keeps the mod-4
// subcarrier partition meaningful.
inline constexpr std::size_t kMinLength = 8;

inline void require_block_length(std::size_t n) {
  if (!is_power_of_two(n) || n < kMinLength) {
    throw SizeError("length " + std::to_string(n) +
                    " is not a power of two >= " + std::to_string(kMinLength));
  }
}

// Block of complex baseband samples tagged with the domain it lives in.
// Length is a power of two >= 8 and every sample is finite.
class ComplexSequence {
 public:
  ComplexSequence(std::vector<cplx> samples, Domain domain)
      : samples_(std::move(samples)), domain_(domain) {
    require_block_length(samples_.size());
    for (const auto& s : samples_) {
      if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
        throw DomainError("ComplexSequence holds a non-finite sample");
      }
    }
  }

  static ComplexSequence zeros(std::size_t n, Domain domain) {
    return ComplexSequence(std::vector<cplx>(n), domain);
  }

  std::size_t size() const noexcept { return samples_.size(); }
  Domain domain() const noexcept { return domain_; }

  std::span<const cplx> samples() const noexcept { return samples_; }
  const std::vector<cplx>& vector() const noexcept { return samples_; }

  const cplx& operator[](std::size_t i) const { return samples_[i]; }

  auto begin() const noexcept { return samples_.begin(); }
  auto end() const noexcept { return samples_.end(); }

  // Same samples, reinterpreted in the other domain.
  ComplexSequence retagged(Domain domain) const& { return {samples_, domain}; }
  ComplexSequence retagged(Domain domain) && {
    return {std::move(samples_), domain};
  }

  std::vector<cplx> release() && { return std::move(samples_); }

  friend bool operator==(const ComplexSequence&, const ComplexSequence&) = default;

 private:
  std::vector<cplx> samples_;
  Domain domain_;
};

inline void require_domain(const ComplexSequence& s, Domain expected,
                           const char* op) {
  if (s.domain() != expected) {
    throw DomainError(std::string(op) + " expects a " + to_string(expected) +
                      "-domain sequence, got " + to_string(s.domain()));
  }
}

inline double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw SizeError("max_abs_diff: length mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_abs_diff(const ComplexSequence& a, const ComplexSequence& b) {
  return max_abs_diff(a.samples(), b.samples());
}

}  // namespace dsslm
