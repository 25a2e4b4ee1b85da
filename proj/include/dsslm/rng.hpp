#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string_view>

namespace dsslm {

// splitmix64 output finalizer; a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// FNV-1a, used to fold text labels into seeds.
constexpr std::uint64_t hash_label(std::string_view s) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (const char ch : s) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001B3ull;
  }
  return h;
}

// xoshiro256** (Blackman & Vigna). Satisfies UniformRandomBitGenerator.
class Xoshiro256ss {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256ss(std::uint64_t seed) noexcept {
    std::uint64_t x = seed;
    for (auto& w : s_) {
      x += 0x9E3779B97F4A7C15ull;
      w = mix64(x);
    }
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  friend bool operator==(const Xoshiro256ss&, const Xoshiro256ss&) = default;

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> s_{};
};

using Rng = Xoshiro256ss;

// Independent stream for one Monte Carlo trial. The stream depends only on
// (seed, index), never on which worker asks for it or in what order.
inline Rng derive_substream(std::uint64_t seed, std::uint64_t index) noexcept {
  return Rng(mix64(mix64(seed) ^ mix64(index ^ 0xD1B54A32D192ED03ull)));
}

// Seed for a named sub-experiment (scheme label) under a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view label) noexcept {
  return mix64(master ^ mix64(hash_label(label)));
}

// Uniform integer in [0, bound) via Lemire's multiply-and-reject. bound > 0.
template <class Gen>
std::uint64_t uniform_below(Gen& g, std::uint64_t bound) {
  unsigned __int128 m = static_cast<unsigned __int128>(g()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(g()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

// Uniform double in [0, 1) with 53 random bits.
template <class Gen>
double uniform_unit(Gen& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

}  // namespace dsslm
