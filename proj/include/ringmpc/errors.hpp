#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringmpc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different rings (or skew contexts).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A ring map failed one of its axioms on a concrete pair of elements.
class AxiomViolation : public Error {
 public:
  AxiomViolation(const std::string& what, std::string a, std::string b)
      : Error(what), a_(std::move(a)), b_(std::move(b)) {}
  const std::string& first() const { return a_; }
  const std::string& second() const { return b_; }

 private:
  std::string a_;
  std::string b_;
};

/// Matrix or vector shapes are incompatible.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive computation would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A theorem-backed operation was called outside its hypotheses.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Minimum distance requested for the zero code.
class UndefinedDistance : public Error {
 public:
  using Error::Error;
};

/// Malformed literal, expression or configuration.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ringmpc
