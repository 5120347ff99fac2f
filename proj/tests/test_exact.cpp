#include <gtest/gtest.h>

#include "nalg/ratfunc.hpp"
#include "support.hpp"

using namespace nalg;

namespace {

RatFunc rf(const char* text) { return RatFunc::parse(text); }
Polynomial poly(const char* text) { return Polynomial::parse(text); }

}  // namespace

TEST(Rational, NormalizesSignAndGcd) {
  const Rational r(6, -4);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(0, 5).to_string(), "0");
  EXPECT_EQ(Rational(0, 5).denominator(), 1);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("-2/6"), Rational(-1, 3));
  EXPECT_EQ(Rational::parse("+5/10").to_string(), "1/2");
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("abc"), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), DivisionByZero);
  EXPECT_THROW(Rational(0).inverse(), DivisionByZero);
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
}

TEST(Polynomial, PrintsHighestDegreeFirst) {
  EXPECT_EQ(poly("3*t + t^2").to_string(), "t^2+3*t");
  EXPECT_EQ(poly("1/2*t").to_string(), "1/2*t");
  EXPECT_EQ(poly("0").to_string(), "0");
  EXPECT_EQ(poly("-t^3+2").to_string(), "-t^3+2");
  EXPECT_EQ(Polynomial().degree(), -1);
}

TEST(Polynomial, DivmodReconstructs) {
  std::mt19937_64 rng(11);
  for (int s = 0; s < 200; ++s) {
    const auto a = testutil::random_polynomial(rng, 6);
    auto b = testutil::random_polynomial(rng, 3);
    if (b.is_zero()) continue;
    const auto [q, r] = a.divmod(b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
  EXPECT_THROW((void)poly("t").divmod(Polynomial()), DivisionByZero);
}

TEST(PolyGcd, Examples) {
  EXPECT_EQ(poly_gcd(poly("t^2-1"), poly("t-1")), poly("t-1"));
  EXPECT_EQ(poly_gcd(poly("t"), poly("t+1")), poly("1"));
  EXPECT_EQ(poly_gcd(poly("2*t+2"), poly("4*t+4")), poly("t+1"));
  EXPECT_EQ(poly_gcd(Polynomial(), poly("3*t")), poly("t"));
  EXPECT_THROW(poly_gcd(Polynomial(), Polynomial()), BothZero);
}

TEST(PolyGcd, DividesBothAndIsMonic) {
  std::mt19937_64 rng(12);
  for (int s = 0; s < 200; ++s) {
    const auto common = testutil::random_polynomial(rng, 2);
    const auto a = common * testutil::random_polynomial(rng, 3);
    const auto b = common * testutil::random_polynomial(rng, 3);
    if (a.is_zero() && b.is_zero()) continue;
    const auto g = poly_gcd(a, b);
    EXPECT_TRUE(g.leading().is_one());
    EXPECT_TRUE(a.divmod(g).second.is_zero());
    EXPECT_TRUE(b.divmod(g).second.is_zero());
    if (!common.is_zero()) EXPECT_TRUE(g.divmod(common.monic()).second.is_zero());
  }
}

TEST(RatFunc, ArithmeticExamples) {
  EXPECT_EQ(rf("(t)/(t+1)") + rf("(1)/(t+1)"), RatFunc(1));
  EXPECT_EQ(rf("(t^2-1)/(t-1)"), rf("t+1"));
  EXPECT_EQ(RatFunc::monomial(1, -1) * rf("t"), RatFunc(1));
  EXPECT_THROW(rf("t") / RatFunc(), DivisionByZero);
  EXPECT_THROW(RatFunc(poly("1"), Polynomial()), DivisionByZero);
}

TEST(RatFunc, NormalFormHasMonicCoprimeDenominator) {
  const RatFunc f(poly("2*t^2+2*t"), poly("4*t+4"));
  EXPECT_EQ(f.num(), poly("1/2*t"));
  EXPECT_EQ(f.den(), poly("1"));
  const RatFunc g(poly("3"), poly("2*t"));
  EXPECT_EQ(g.to_string(), "(3/2)/(t)");
  EXPECT_TRUE(g.den().leading().is_one());
}

TEST(RatFunc, ParseRoundTrip) {
  std::mt19937_64 rng(13);
  for (int s = 0; s < 200; ++s) {
    const auto f = testutil::random_ratfunc(rng);
    EXPECT_EQ(RatFunc::parse(f.to_string()), f) << f;
  }
  EXPECT_THROW(RatFunc::parse("(t+1"), ParseError);
  EXPECT_THROW(RatFunc::parse("t^x"), ParseError);
}

TEST(RatFunc, Valuation) {
  EXPECT_EQ(rf("(t^2+3*t)/(t+1)").valuation(), 1);
  EXPECT_EQ(rf("(1)/(t^2)").valuation(), -2);
  EXPECT_EQ(rf("5/7").valuation(), 0);
}

TEST(LimitAtZero, Examples) {
  EXPECT_EQ(limit_at_zero(rf("(t^2+3*t)/(t+1)")), Rational(0));
  EXPECT_EQ(limit_at_zero(rf("5/7")), Rational(5, 7));
  EXPECT_THROW(limit_at_zero(rf("(1)/(t)")), LimitDiverges);
  EXPECT_EQ(limit_at_zero(rf("(t+2)/(t+4)")), Rational(1, 2));
}

TEST(RatFuncProperty, FieldAxioms) {
  std::mt19937_64 rng(20240601);
  for (int s = 0; s < 1000; ++s) {
    const auto a = testutil::random_ratfunc(rng);
    const auto b = testutil::random_ratfunc(rng);
    const auto c = testutil::random_ratfunc(rng);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a - a, RatFunc());
    if (!a.is_zero()) ASSERT_EQ(a / a, RatFunc(1));
  }
}

TEST(RatFuncProperty, LimitIsPartialHomomorphism) {
  std::mt19937_64 rng(7);
  int tested = 0;
  for (int s = 0; s < 500; ++s) {
    const auto a = testutil::random_ratfunc(rng, 3);
    const auto b = testutil::random_ratfunc(rng, 3);
    if (a.valuation() < 0 || b.valuation() < 0) continue;
    ++tested;
    EXPECT_EQ(limit_at_zero(a + b), limit_at_zero(a) + limit_at_zero(b));
    EXPECT_EQ(limit_at_zero(a * b), limit_at_zero(a) * limit_at_zero(b));
  }
  EXPECT_GT(tested, 100);
}

TEST(RatFuncProperty, NormalizationIsIdempotent) {
  std::mt19937_64 rng(8);
  for (int s = 0; s < 300; ++s) {
    const auto f = testutil::random_ratfunc(rng);
    const RatFunc again(f.num(), f.den());
    EXPECT_EQ(again.num(), f.num());
    EXPECT_EQ(again.den(), f.den());
  }
}

TEST(RatFuncProperty, EvaluationMatchesArithmetic) {
  std::mt19937_64 rng(9);
  const Rational x(2, 7);
  for (int s = 0; s < 300; ++s) {
    const auto a = testutil::random_ratfunc(rng, 3);
    const auto b = testutil::random_ratfunc(rng, 3);
    if (a.den().eval(x).is_zero() || b.den().eval(x).is_zero()) continue;
    EXPECT_EQ((a * b).eval(x), a.eval(x) * b.eval(x));
    EXPECT_EQ((a - b).eval(x), a.eval(x) - b.eval(x));
  }
}

TEST(RatFunc, SubstitutePower) {
  EXPECT_EQ(rf("(t+1)/(t^2)").substitute_power(3), rf("(t^3+1)/(t^6)"));
}
