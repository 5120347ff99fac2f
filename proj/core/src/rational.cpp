#include "nalg/rational.hpp"

#include <cctype>

namespace nalg {

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t pos = 0;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) pos = 1;
  if (pos == s.size()) return false;
  for (; pos < s.size(); ++pos) {
    if (std::isdigit(static_cast<unsigned char>(s[pos])) == 0) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string text(s);
  if (!text.empty() && text[0] == '+') text.erase(0, 1);
  return mpz_class(text, 10);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DivisionByZero();
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) == 0) compact.push_back(c);
  }
  const auto slash = compact.find('/');
  std::string_view num = compact;
  std::string_view den = "1";
  if (slash != std::string::npos) {
    num = std::string_view(compact).substr(0, slash);
    den = std::string_view(compact).substr(slash + 1);
    if (!den.empty() && (den[0] == '+' || den[0] == '-')) {
      throw ParseError("sign not allowed on denominator: '" + std::string(text) + "'");
    }
  }
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  }
  mpz_class d = parse_integer(den);
  if (d == 0) throw DivisionByZero();
  return Rational(mpq_class(parse_integer(num), d));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1) / value_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  value_ /= o.value_;
  return *this;
}

}  // namespace nalg
