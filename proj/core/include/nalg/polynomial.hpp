#ifndef NALG_POLYNOMIAL_HPP
#define NALG_POLYNOMIAL_HPP

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "nalg/rational.hpp"

namespace nalg {

/// Dense univariate polynomial in t over the rationals.
///
/// coeffs()[d] is the coefficient of t^d. Trailing zeros are always trimmed,
/// so the zero polynomial has no coefficients and equality is structural.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Rational> coeffs);

  /// c * t^degree
  static Polynomial monomial(const Rational& c, int degree);
  static Polynomial t() { return monomial(Rational(1), 1); }

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
  [[nodiscard]] Rational coeff(int d) const;
  [[nodiscard]] Rational leading() const;
  /// Multiplicity of t as a factor; 0 for nonzero constants, -1 for zero.
  [[nodiscard]] int low_degree() const;

  [[nodiscard]] Rational eval(const Rational& x) const;
  [[nodiscard]] Rational at_zero() const { return coeff(0); }
  [[nodiscard]] Polynomial monic() const;
  [[nodiscard]] Polynomial scaled(const Rational& c) const;
  /// p(t) -> p(t^power)
  [[nodiscard]] Polynomial substitute_power(int power) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return a.scaled(Rational(-1)); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// Euclidean division; throws DivisionByZero on a zero divisor.
  [[nodiscard]] std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Sum of `c`, `c*t`, `c*t^k` terms, highest degree first; "0" for zero.
  [[nodiscard]] std::string to_string() const;
  static Polynomial parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd by the Euclidean algorithm over Q. Throws BothZero.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

}  // namespace nalg

#endif  // NALG_POLYNOMIAL_HPP
