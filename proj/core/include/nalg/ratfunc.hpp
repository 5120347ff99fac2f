#ifndef NALG_RATFUNC_HPP
#define NALG_RATFUNC_HPP

#include <ostream>
#include <string>
#include <string_view>

#include "nalg/polynomial.hpp"

namespace nalg {

/// Element of Q(t) in canonical form: coprime numerator and denominator, the
/// denominator monic. Zero is 0/1, so equality is representation equality.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(std::int64_t c) : RatFunc(Rational(c)) {}           // NOLINT(google-explicit-constructor)
  RatFunc(const Polynomial& p) : num_(p), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  /// Normalizes; throws DivisionByZero when den is zero.
  RatFunc(Polynomial num, Polynomial den);

  static RatFunc zero() { return {}; }
  static RatFunc one() { return {Rational(1)}; }
  static RatFunc t() { return {Polynomial::t()}; }
  /// c * t^k for any integer k.
  static RatFunc monomial(const Rational& c, int k);

  [[nodiscard]] const Polynomial& num() const { return num_; }
  [[nodiscard]] const Polynomial& den() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_one() const { return den_.is_constant() && num_ == den_; }
  [[nodiscard]] bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  /// Order of vanishing at t = 0 (negative for a pole). Zero has no
  /// valuation; callers must check is_zero() first.
  [[nodiscard]] int valuation() const { return num_.low_degree() - den_.low_degree(); }

  /// Value at a rational point; throws DivisionByZero at a pole.
  [[nodiscard]] Rational eval(const Rational& x) const;
  [[nodiscard]] RatFunc inverse() const;
  /// f(t) -> f(t^power)
  [[nodiscard]] RatFunc substitute_power(int power) const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(const RatFunc& a);

  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

  /// `<poly>` when the denominator is 1, otherwise `(<poly>)/(<poly>)`.
  [[nodiscard]] std::string to_string() const;
  static RatFunc parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

 private:
  struct Raw {};
  RatFunc(Raw, Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

/// Value of f as t -> 0. Throws LimitDiverges when f has a pole at 0.
Rational limit_at_zero(const RatFunc& f);

}  // namespace nalg

#endif  // NALG_RATFUNC_HPP
