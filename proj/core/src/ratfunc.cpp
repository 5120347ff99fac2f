#include "nalg/ratfunc.hpp"

#include <cctype>

namespace nalg {

RatFunc::RatFunc(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

RatFunc RatFunc::monomial(const Rational& c, int k) {
  if (c.is_zero()) return {};
  if (k >= 0) return {Polynomial::monomial(c, k)};
  return {Raw{}, Polynomial(c), Polynomial::monomial(Rational(1), -k)};
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    Polynomial g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
  }
  const Rational lead = den_.leading();
  if (!lead.is_one()) {
    const Rational inv = lead.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Rational RatFunc::eval(const Rational& x) const {
  const Rational d = den_.eval(x);
  if (d.is_zero()) throw DivisionByZero();
  return num_.eval(x) / d;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return {den_, num_};
}

RatFunc RatFunc::substitute_power(int power) const {
  return {Raw{}, num_.substitute_power(power), den_.substitute_power(power)};
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.is_constant()) {
      if (num_.is_zero()) den_ = Polynomial(Rational(1));
      return *this;
    }
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc();
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ = num_ * o.num_;
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc operator-(const RatFunc& a) { return {RatFunc::Raw{}, -a.num_, a.den_}; }

std::string RatFunc::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) == 0) out.push_back(c);
  }
  return out;
}

// Index one past the ')' matching the '(' at `open`, or npos.
std::size_t match_paren(const std::string& s, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0) return i + 1;
  }
  return std::string::npos;
}

Polynomial parse_operand(const std::string& s, std::string_view original) {
  if (!s.empty() && s.front() == '(') {
    if (match_paren(s, 0) != s.size()) {
      throw ParseError("unbalanced parentheses in '" + std::string(original) + "'");
    }
    return Polynomial::parse(std::string_view(s).substr(1, s.size() - 2));
  }
  return Polynomial::parse(s);
}

}  // namespace

RatFunc RatFunc::parse(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty rational function");
  if (s.front() == '(') {
    const std::size_t end = match_paren(s, 0);
    if (end == std::string::npos) throw ParseError("unbalanced parentheses in '" + s + "'");
    if (end == s.size()) return {parse_operand(s, text)};
    if (s[end] != '/') throw ParseError("expected '/' after ')' in '" + s + "'");
    Polynomial num = parse_operand(s.substr(0, end), text);
    Polynomial den = parse_operand(s.substr(end + 1), text);
    if (den.is_zero()) throw DivisionByZero();
    return {std::move(num), std::move(den)};
  }
  return {Polynomial::parse(s)};
}

Rational limit_at_zero(const RatFunc& f) {
  const Rational d = f.den().at_zero();
  if (d.is_zero()) throw LimitDiverges("pole at t = 0 in " + f.to_string());
  return f.num().at_zero() / d;
}

}  // namespace nalg
