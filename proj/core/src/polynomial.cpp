#include "nalg/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nalg {

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  Polynomial p;
  if (c.is_zero()) return p;
  p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational());
  p.coeffs_.back() = c;
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return {};
  return coeffs_[static_cast<std::size_t>(d)];
}

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

int Polynomial::low_degree() const {
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    if (!coeffs_[d].is_zero()) return static_cast<int>(d);
  }
  return -1;
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return scaled(leading().inverse());
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return {};
  Polynomial out = *this;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

Polynomial Polynomial::substitute_power(int power) const {
  if (power < 1) throw Error("substitute_power needs a positive exponent");
  if (is_constant()) return *this;
  std::vector<Rational> out(static_cast<std::size_t>(degree() * power) + 1);
  for (std::size_t d = 0; d < coeffs_.size(); ++d) out[d * static_cast<std::size_t>(power)] = coeffs_[d];
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t d = 0; d < o.coeffs_.size(); ++d) coeffs_[d] += o.coeffs_[d];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t d = 0; d < o.coeffs_.size(); ++d) coeffs_[d] -= o.coeffs_[d];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  if (degree() < divisor.degree()) return {Polynomial(), *this};
  std::vector<Rational> rem = coeffs_;
  std::vector<Rational> quot(coeffs_.size() - divisor.coeffs_.size() + 1);
  const Rational lead_inv = divisor.leading().inverse();
  const std::size_t dd = divisor.coeffs_.size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational q = rem[k + dd] * lead_inv;
    quot[k] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * divisor.coeffs_[j];
  }
  rem.resize(dd);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) throw BothZero();
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = coeffs_.size(); d-- > 0;) {
    const Rational& c = coeffs_[d];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (c.sign() < 0) {
      os << "-";
    } else if (!first) {
      os << "+";
    }
    first = false;
    if (d == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << "*";
    os << "t";
    if (d > 1) os << "^" << d;
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : original_(text) {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c)) == 0) s_.push_back(c);
    }
  }

  Polynomial parse() {
    if (s_.empty()) fail("empty polynomial");
    Polynomial out;
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      out += term().scaled(Rational(sign));
    }
    return out;
  }

 private:
  Polynomial term() {
    Rational coeff(1);
    bool have_coeff = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) {
      std::string num = digits();
      std::string den = "1";
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        den = digits();
      }
      coeff = Rational::parse(num + "/" + den);
      have_coeff = true;
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
      } else {
        return Polynomial(coeff);
      }
    }
    if (pos_ >= s_.size() || s_[pos_] != 't') {
      fail(have_coeff ? "expected 't' after '*'" : "expected a term");
    }
    ++pos_;
    int degree = 1;
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      degree = std::stoi(digits());
    }
    return Polynomial::monomial(coeff, degree);
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("bad polynomial '" + std::string(original_) + "': " + why);
  }

  std::string_view original_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace nalg
