#pragma once

#include <algorithm>
#include <cmath>
#include <span>

#include "dsslm/error.hpp"
#include "dsslm/sequence.hpp"

namespace dsslm {

// 10 log10(max |x|^2 / mean |x|^2) over a raw sample buffer.
inline double papr_db(std::span<const cplx> x) {
  double peak = 0.0;
  double total = 0.0;
  for (const auto& s : x) {
    const double p = std::norm(s);
    total += p;
    peak = std::max(peak, p);
  }
  if (x.empty() || !(total > 0.0)) throw DomainError("PAPR of an all-zero block");
  return 10.0 * std::log10(peak * static_cast<double>(x.size()) / total);
}

inline double papr_db(const ComplexSequence& x) {
  require_domain(x, Domain::time, "papr_db");
  return papr_db(x.samples());
}

}  // namespace dsslm
