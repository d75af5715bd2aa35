#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace expectile {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidAlpha : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class EmptySample : public Error {
 public:
  EmptySample() : Error("sample is empty") {}
};

class NonFiniteDatum : public Error {
 public:
  explicit NonFiniteDatum(std::size_t index)
      : Error("sample entry " + std::to_string(index) + " is not finite"),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Raised when an operation needs a capability the oracle does not offer
/// (second partial moments, empirical data for the sample solvers).
class UnsupportedOracle : public Error {
 public:
  using Error::Error;
};

class BracketingFailed : public Error {
 public:
  using Error::Error;
};

/// The sample solvers only run the α < 1/2 branch; callers reflect first.
class AlphaBranchMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace expectile
