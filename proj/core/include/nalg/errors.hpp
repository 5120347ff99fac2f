#ifndef NALG_ERRORS_HPP
#define NALG_ERRORS_HPP

#include <array>
#include <stdexcept>
#include <string>

namespace nalg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class BothZero : public Error {
 public:
  BothZero() : Error("gcd of two zero polynomials is undefined") {}
};

/// Raised when a rational function has a pole at t = 0.
class LimitDiverges : public Error {
 public:
  explicit LimitDiverges(const std::string& what) : Error(what) {}

  /// 1-based (i, j, k) of the offending structure constant, or zeros when
  /// the failure is not attached to a tensor entry.
  LimitDiverges(const std::string& what, std::array<int, 3> where)
      : Error(what), where_(where) {}

  [[nodiscard]] const std::array<int, 3>& where() const noexcept { return where_; }

 private:
  std::array<int, 3> where_{0, 0, 0};
};

class Singular : public Error {
 public:
  Singular() : Error("matrix is singular") {}
  explicit Singular(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class FieldMismatch : public Error {
 public:
  explicit FieldMismatch(const std::string& what) : Error(what) {}
};

class HypothesisViolated : public Error {
 public:
  explicit HypothesisViolated(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

class UnknownName : public Error {
 public:
  explicit UnknownName(const std::string& name) : Error("unknown catalog name: " + name) {}
};

class DimTooSmall : public Error {
 public:
  explicit DimTooSmall(const std::string& what) : Error(what) {}
};

class MissingParam : public Error {
 public:
  explicit MissingParam(const std::string& what) : Error(what) {}
};

class ForbiddenParam : public Error {
 public:
  explicit ForbiddenParam(const std::string& what) : Error(what) {}
};

}  // namespace nalg

#endif  // NALG_ERRORS_HPP
