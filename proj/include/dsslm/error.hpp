#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dsslm {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Length is not a supported power of two, or two operands disagree in length.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation (all-zero PAPR
// input, offset outside [0, N), wrong time/frequency tag, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Profile set mixes FFT sizes or otherwise contradicts itself.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// More alternatives requested than the deterministic generator can supply.
class CapacityError : public Error {
 public:
  CapacityError(std::size_t requested, std::size_t max_alternatives)
      : Error("requested U=" + std::to_string(requested) +
              " alternatives but at most U=" + std::to_string(max_alternatives) +
              " (N/8) satisfy the optimal condition"),
        requested_(requested),
        max_(max_alternatives) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t max_alternatives() const noexcept { return max_; }

 private:
  std::size_t requested_;
  std::size_t max_;
};

// Malformed input file. line() is 1-based; 0 means the file itself could not
// be opened.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace dsslm
