#pragma once

// Test-only reference computations. Each one evaluates a defining formula
// directly (O(N^2) sums, explicit shifts) and shares no code path with the
// library routine it checks.

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
inline constexpr double kPi = 3.14159265358979323846;

inline cplx expj(double angle) { return {std::cos(angle), std::sin(angle)}; }

inline std::vector<cplx> dft(const std::vector<cplx>& x) {
  const std::size_t n = x.size();
  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc{};
    for (std::size_t t = 0; t < n; ++t) {
      acc += x[t] * expj(-2.0 * kPi * static_cast<double>((k * t) % n) / static_cast<double>(n));
    }
    out[k] = acc;
  }
  return out;
}

inline std::vector<cplx> idft(const std::vector<cplx>& X) {
  const std::size_t n = X.size();
  std::vector<cplx> out(n);
  for (std::size_t t = 0; t < n; ++t) {
    cplx acc{};
    for (std::size_t k = 0; k < n; ++k) {
      acc += X[k] * expj(2.0 * kPi * static_cast<double>((k * t) % n) / static_cast<double>(n));
    }
    out[t] = acc / static_cast<double>(n);
  }
  return out;
}

// out[n] = sum_m a[m] b[(n - m) mod N]
inline std::vector<cplx> circular_convolution(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  const std::size_t n = a.size();
  std::vector<cplx> out(n);
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t m = 0; m < n; ++m) out[t] += a[m] * b[(t + n - m) % n];
  }
  return out;
}

inline std::vector<cplx> right_shift(const std::vector<cplx>& x, std::size_t s) {
  const std::size_t n = x.size();
  std::vector<cplx> out(n);
  for (std::size_t t = 0; t < n; ++t) out[(t + s) % n] = x[t];
  return out;
}

// Base vector p_i (i = 1..4) written out row by row from its definition.
inline std::vector<cplx> base_vector(int i, std::size_t n) {
  static const cplx rows[4][4] = {{1, 1, 1, 1},
                                  {1, cplx(0, 1), -1, cplx(0, -1)},
                                  {1, -1, 1, -1},
                                  {1, cplx(0, -1), -1, cplx(0, 1)}};
  std::vector<cplx> p(n);
  for (std::size_t m = 0; m < 4; ++m) p[m * n / 4] = rows[i - 1][m];
  return p;
}

inline cplx rotation_value(unsigned k) {
  static const cplx table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[k & 3u];
}

// Dense conversion vector sum_i c_i * shift(p_i, tau_i).
inline std::vector<cplx> conversion_vector(std::size_t n, const std::size_t tau[4],
                                           const unsigned c_exp[4]) {
  std::vector<cplx> out(n);
  for (int i = 1; i <= 4; ++i) {
    const auto shifted = right_shift(base_vector(i, n), tau[i - 1]);
    for (std::size_t t = 0; t < n; ++t) out[t] += rotation_value(c_exp[i - 1]) * shifted[t];
  }
  return out;
}

// (1/N^2) |sum_k P_i(k) conj(P_j(k)) e^{-j 2 pi k tau / N}|^2, plain floating exponent.
inline double rho(const std::vector<cplx>& Pi, const std::vector<cplx>& Pj, std::size_t tau) {
  const std::size_t n = Pi.size();
  cplx acc{};
  for (std::size_t k = 0; k < n; ++k) {
    acc += Pi[k] * std::conj(Pj[k]) *
           expj(-2.0 * kPi * static_cast<double>(k) * static_cast<double>(tau) / static_cast<double>(n));
  }
  return std::norm(acc) / (static_cast<double>(n) * static_cast<double>(n));
}

// Abar_v summed with the literal exponent -j 2 pi (w + (v-1)/4)(tau + d)/(N/4).
inline cplx a_bar(int v, long long d, long long tau, std::size_t n) {
  const double q = static_cast<double>(n) / 4.0;
  cplx acc{};
  for (std::size_t w = 0; w < n / 4; ++w) {
    acc += expj(-2.0 * kPi * (static_cast<double>(w) + (v - 1) / 4.0) *
                static_cast<double>(tau + d) / q);
  }
  return acc;
}

inline std::vector<cplx> random_vector(std::size_t n, std::mt19937_64& g) {
  std::normal_distribution<double> d(0.0, 1.0);
  std::vector<cplx> v(n);
  for (auto& s : v) s = {d(g), d(g)};
  return v;
}

inline double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace oracle
