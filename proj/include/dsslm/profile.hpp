#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dsslm/error.hpp"
#include "dsslm/sequence.hpp"

namespace dsslm {

// Fourth root of unity j^k, stored as the exponent k.
class Rotation {
 public:
  constexpr Rotation() noexcept = default;

  static constexpr Rotation from_exponent(unsigned k) noexcept { return Rotation(k & 3u); }
  static constexpr Rotation one() noexcept { return Rotation(0); }
  static constexpr Rotation j() noexcept { return Rotation(1); }
  static constexpr Rotation minus_one() noexcept { return Rotation(2); }
  static constexpr Rotation minus_j() noexcept { return Rotation(3); }

  constexpr unsigned exponent() const noexcept { return k_; }

  cplx value() const noexcept {
    constexpr cplx table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[k_];
  }

  // Literal token used in profile files: 1, j, -1, -j.
  std::string_view token() const noexcept {
    constexpr std::string_view table[4] = {"1", "j", "-1", "-j"};
    return table[k_];
  }

  static Rotation parse(std::string_view s) {
    if (s == "1") return one();
    if (s == "j") return j();
    if (s == "-1") return minus_one();
    if (s == "-j") return minus_j();
    throw DomainError("rotation token '" + std::string(s) + "' not in {1,-1,j,-j}");
  }

  friend constexpr Rotation operator*(Rotation a, Rotation b) noexcept {
    return from_exponent(a.k_ + b.k_);
  }
  friend constexpr Rotation conj(Rotation a) noexcept { return from_exponent(4u - a.k_); }
  friend constexpr bool operator==(Rotation, Rotation) = default;
  friend constexpr auto operator<=>(Rotation, Rotation) = default;

 private:
  explicit constexpr Rotation(unsigned k) noexcept : k_(static_cast<std::uint8_t>(k)) {}
  std::uint8_t k_ = 0;
};

using ShiftArray = std::array<std::size_t, 4>;
using RotationArray = std::array<Rotation, 4>;

// Cyclic shifts tau_1..tau_4 in [0, N/4) and rotations c_1..c_4 selecting one
// alternative signal. `u` is the alternative's index label; it does not take
// part in comparisons.
class ShiftRotationProfile {
 public:
  ShiftRotationProfile(std::size_t n, ShiftArray tau, RotationArray c = {}, long u = 0)
      : n_(n), tau_(tau), c_(c), u_(u) {
    require_block_length(n_);
    for (std::size_t i = 0; i < 4; ++i) {
      if (tau_[i] >= n_ / 4) {
        throw DomainError("tau" + std::to_string(i + 1) + "=" + std::to_string(tau_[i]) +
                          " outside [0, N/4) for N=" + std::to_string(n_));
      }
    }
  }

  // All shifts zero and all rotations one: conversion vector 4*delta.
  static ShiftRotationProfile identity(std::size_t n, long u = 0) {
    return ShiftRotationProfile(n, {0, 0, 0, 0}, {}, u);
  }

  std::size_t n() const noexcept { return n_; }
  const ShiftArray& tau() const noexcept { return tau_; }
  const RotationArray& c() const noexcept { return c_; }
  std::size_t tau(std::size_t i) const { return tau_.at(i); }
  Rotation c(std::size_t i) const { return c_.at(i); }
  long u() const noexcept { return u_; }

  ShiftRotationProfile with_label(long u) const {
    ShiftRotationProfile p = *this;
    p.u_ = u;
    return p;
  }

  friend bool operator==(const ShiftRotationProfile& a, const ShiftRotationProfile& b) noexcept {
    return a.n_ == b.n_ && a.tau_ == b.tau_ && a.c_ == b.c_;
  }

 private:
  std::size_t n_;
  ShiftArray tau_;
  RotationArray c_;
  long u_;
};

// U >= 1 profiles over a common FFT size. Duplicates are representable (the
// checker and analyzer need to see them) and reported by has_duplicates().
class ProfileSet {
 public:
  ProfileSet(std::size_t n, std::vector<ShiftRotationProfile> profiles)
      : n_(n), profiles_(std::move(profiles)) {
    require_block_length(n_);
    if (profiles_.empty()) throw ConsistencyError("profile set is empty");
    for (const auto& p : profiles_) {
      if (p.n() != n_) {
        throw ConsistencyError("profile u=" + std::to_string(p.u()) + " has N=" +
                               std::to_string(p.n()) + ", set has N=" + std::to_string(n_));
      }
    }
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return profiles_.size(); }
  const std::vector<ShiftRotationProfile>& profiles() const noexcept { return profiles_; }
  const ShiftRotationProfile& operator[](std::size_t i) const { return profiles_.at(i); }
  auto begin() const noexcept { return profiles_.begin(); }
  auto end() const noexcept { return profiles_.end(); }

  bool has_duplicates() const {
    for (std::size_t i = 0; i < profiles_.size(); ++i) {
      for (std::size_t j = i + 1; j < profiles_.size(); ++j) {
        if (profiles_[i] == profiles_[j]) return true;
      }
    }
    return false;
  }

  // Exact equality including labels; used for file round trips.
  friend bool identical(const ProfileSet& a, const ProfileSet& b) {
    if (a.n_ != b.n_ || a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!(a.profiles_[i] == b.profiles_[i]) || a.profiles_[i].u() != b.profiles_[i].u()) {
        return false;
      }
    }
    return true;
  }

 private:
  std::size_t n_;
  std::vector<ShiftRotationProfile> profiles_;
};

}  // namespace dsslm
