#pragma once

#include <stdexcept>
#include <string>

namespace h4 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DegenerateSpan : public Error {
 public:
  using Error::Error;
};

class IdenticalLines : public Error {
 public:
  IdenticalLines() : Error("lines are identical") {}
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("matrix is singular") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroDivisor : public Error {
 public:
  ZeroDivisor() : Error("divisor form is zero") {}
};

class NotAGrid : public Error {
 public:
  using Error::Error;
};

class RejectionBudgetExhausted : public Error {
 public:
  using Error::Error;
};

class PencilDegenerate : public Error {
 public:
  using Error::Error;
};

/// Internal consistency violation (a computed invariant did not hold).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace h4
