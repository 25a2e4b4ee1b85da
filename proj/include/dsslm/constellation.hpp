#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dsslm/error.hpp"
#include "dsslm/sequence.hpp"

namespace dsslm {

enum class Modulation { qpsk, qam16 };

inline const char* to_string(Modulation m) noexcept {
  return m == Modulation::qpsk ? "qpsk" : "16qam";
}

inline Modulation parse_modulation(std::string_view s) {
  if (s == "qpsk") return Modulation::qpsk;
  if (s == "16qam") return Modulation::qam16;
  throw ConfigError("unknown modulation '" + std::string(s) + "'");
}

// Gray-labelled square constellation with unit average energy. points[label]
// is the symbol for the bit label read MSB first (first bit of the group is
// the label's top bit). The upper half of the label drives the in-phase axis,
// the lower half the quadrature axis.
class Constellation {
 public:
  static Constellation qpsk() {
    // Per axis: bit 0 -> +1, bit 1 -> -1, so label 00 sits at (1 + j)/sqrt(2).
    const double a = 1.0 / std::sqrt(2.0);
    const double level[2] = {a, -a};
    std::vector<cplx> pts(4);
    for (unsigned label = 0; label < 4; ++label) {
      pts[label] = {level[(label >> 1) & 1u], level[label & 1u]};
    }
    return Constellation(Modulation::qpsk, 2, std::move(pts));
  }

  static Constellation qam16() {
    // Per-axis Gray code: 00 -> -3, 01 -> -1, 11 -> +1, 10 -> +3.
    const double a = 1.0 / std::sqrt(10.0);
    const double level[4] = {-3 * a, -1 * a, 3 * a, 1 * a};
    std::vector<cplx> pts(16);
    for (unsigned label = 0; label < 16; ++label) {
      pts[label] = {level[(label >> 2) & 3u], level[label & 3u]};
    }
    return Constellation(Modulation::qam16, 4, std::move(pts));
  }

  static Constellation of(Modulation m) { return m == Modulation::qpsk ? qpsk() : qam16(); }

  Modulation name() const noexcept { return name_; }
  std::size_t bits_per_symbol() const noexcept { return bits_; }
  std::span<const cplx> points() const noexcept { return points_; }
  const cplx& point(std::size_t label) const { return points_.at(label); }

 private:
  Constellation(Modulation name, std::size_t bits, std::vector<cplx> points)
      : name_(name), bits_(bits), points_(std::move(points)) {}

  Modulation name_;
  std::size_t bits_;
  std::vector<cplx> points_;
};

// Maps N * bits_per_symbol bits (each 0 or 1) onto N frequency-domain symbols.
inline ComplexSequence map_constellation(std::span<const std::uint8_t> bits,
                                         const Constellation& c, std::size_t n) {
  const std::size_t b = c.bits_per_symbol();
  if (bits.size() != n * b) {
    throw SizeError("map_constellation: got " + std::to_string(bits.size()) +
                    " bits, need " + std::to_string(n * b));
  }
  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t label = 0;
    for (std::size_t i = 0; i < b; ++i) {
      const auto bit = bits[k * b + i];
      if (bit > 1) throw DomainError("map_constellation: bit value other than 0/1");
      label = (label << 1) | bit;
    }
    out[k] = c.point(label);
  }
  return {std::move(out), Domain::frequency};
}

// Length is implied by the bit count.
inline ComplexSequence map_constellation(std::span<const std::uint8_t> bits,
                                         const Constellation& c) {
  return map_constellation(bits, c, bits.size() / c.bits_per_symbol());
}

}  // namespace dsslm
