#pragma once

#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dsslm/error.hpp"
#include "dsslm/profile.hpp"

// Profile file:
//
//   n=<N>
//   u,tau1,tau2,tau3,tau4,c1,c2,c3,c4
//   ...
//
// with c_i written as the literal tokens 1, -1, j, -j. Blank lines are ignored.

namespace dsslm {

inline void write_profiles(std::ostream& os, const ProfileSet& set) {
  os << "n=" << set.n() << '\n';
  for (const auto& p : set) {
    os << p.u();
    for (auto t : p.tau()) os << ',' << t;
    for (auto c : p.c()) os << ',' << c.token();
    os << '\n';
  }
}

inline std::string format_profiles(const ProfileSet& set) {
  std::ostringstream os;
  write_profiles(os, set);
  return os.str();
}

namespace detail {

template <class Int>
Int parse_int(std::string_view s, std::size_t line, const char* what) {
  Int value{};
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end || s.empty()) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return value;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::string_view trim_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

}  // namespace detail

inline ProfileSet read_profiles(std::istream& is) {
  std::string raw;
  std::size_t line = 0;
  std::size_t n = 0;
  bool have_header = false;
  std::vector<ShiftRotationProfile> profiles;
  while (std::getline(is, raw)) {
    ++line;
    const auto text = detail::trim_cr(raw);
    if (text.empty()) continue;
    if (!have_header) {
      if (text.substr(0, 2) != "n=") throw ParseError(line, "expected header 'n=<N>'");
      n = detail::parse_int<std::size_t>(text.substr(2), line, "N");
      try {
        require_block_length(n);
      } catch (const SizeError& e) {
        throw ParseError(line, e.what());
      }
      have_header = true;
      continue;
    }
    const auto fields = detail::split(text, ',');
    if (fields.size() != 9) {
      throw ParseError(line, "expected 9 comma-separated fields, got " +
                                 std::to_string(fields.size()));
    }
    const long u = detail::parse_int<long>(fields[0], line, "u");
    ShiftArray tau{};
    RotationArray c{};
    try {
      for (std::size_t i = 0; i < 4; ++i) {
        tau[i] = detail::parse_int<std::size_t>(fields[1 + i], line, "tau");
      }
      for (std::size_t i = 0; i < 4; ++i) c[i] = Rotation::parse(fields[5 + i]);
      profiles.emplace_back(n, tau, c, u);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line, e.what());
    }
  }
  if (!have_header) throw ParseError(line, "missing header 'n=<N>'");
  if (profiles.empty()) throw ParseError(line, "no profiles listed");
  return {n, std::move(profiles)};
}

inline ProfileSet parse_profiles(const std::string& text) {
  std::istringstream is(text);
  return read_profiles(is);
}

inline ProfileSet load_profiles(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open profile file '" + path + "'");
  return read_profiles(in);
}

inline void save_profiles(const std::string& path, const ProfileSet& set) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(0, "cannot write profile file '" + path + "'");
  write_profiles(out, set);
}

}  // namespace dsslm
