#include <gtest/gtest.h>

#include "nalg/catalog.hpp"
#include "nalg/io.hpp"
#include "nalg/witnesses.hpp"
#include "support.hpp"

using namespace nalg;

namespace {

std::string algebra_text(const std::string& products, int dim = 3, const std::string& extra = "") {
  return R"({"dim": )" + std::to_string(dim) + extra + R"(, "products": [)" + products + "]}";
}

}  // namespace

TEST(AlgebraIo, ParsesStringsAndIntegers) {
  const auto a = io::parse_algebra(
      algebra_text(R"({"i":1,"j":1,"k":3,"c":"1/2"}, {"i":2,"j":1,"k":3,"c":-4})", 3, R"(, "name": "x")"));
  EXPECT_EQ(a.name(), "x");
  EXPECT_EQ(a(0, 0, 2), Rational(1, 2));
  EXPECT_EQ(a(1, 0, 2), Rational(-4));
  EXPECT_EQ(a.nonzeros().size(), 2u);
}

TEST(AlgebraIo, AntisymmetricClosure) {
  const auto a = io::parse_algebra(algebra_text(R"({"i":1,"j":2,"k":3,"c":"1"})", 3, R"(, "closure": "antisymmetric")"));
  EXPECT_EQ(a, catalog::make("n3minus", 3));
  // Spelling out the partner consistently is allowed.
  EXPECT_NO_THROW(io::parse_algebra(algebra_text(R"({"i":1,"j":2,"k":3,"c":"1"}, {"i":2,"j":1,"k":3,"c":"-1"})", 3,
                                                 R"(, "closure": "antisymmetric")")));
}

TEST(AlgebraIo, RoundTripCatalog) {
  for (const auto& e : catalog::entries()) {
    const std::size_t n = e.min_dim + 1;
    const auto a = e.needs_alpha ? catalog::make(e.name, n, Rational(-2, 5)) : catalog::make(e.name, n);
    const auto back = io::parse_algebra(io::write_algebra(a));
    EXPECT_EQ(back, a) << e.name;
    EXPECT_EQ(back.name(), a.name());
  }
}

TEST(AlgebraIo, RoundTripOverQt) {
  const auto moved = transport(catalog::make("lambda2_lambda2", 4), witness::lambda2_lambda2_family());
  const auto text = io::write_algebra(moved);
  EXPECT_NE(text.find("\"field\": \"Qt\""), std::string::npos);
  EXPECT_EQ(io::parse_algebra_qt(text), moved);
  EXPECT_THROW(io::parse_algebra(text), FieldMismatch);
  EXPECT_EQ(io::parse_algebra_qt(io::write_algebra(catalog::make("L5", 3))), lift(catalog::make("L5", 3)));
}

TEST(AlgebraIo, Errors) {
  EXPECT_THROW(io::parse_algebra("{"), ParseError);
  EXPECT_THROW(io::parse_algebra(R"({"products": []})"), ParseError);
  EXPECT_THROW(io::parse_algebra(algebra_text("", 0)), ParseError);
  EXPECT_THROW(io::parse_algebra(algebra_text("", -2)), ParseError);
  EXPECT_THROW(io::parse_algebra(algebra_text(R"({"i":4,"j":1,"k":1,"c":"1"})")), ParseError);
  EXPECT_THROW(io::parse_algebra(algebra_text(R"({"i":0,"j":1,"k":1,"c":"1"})")), ParseError);
  EXPECT_THROW(io::parse_algebra(algebra_text(R"({"i":1,"j":1,"k":1})")), ParseError);
  EXPECT_THROW(io::parse_algebra(algebra_text(R"({"i":1,"j":1,"k":1,"c":"1/0"})")), ParseError);
  EXPECT_THROW(io::parse_algebra(algebra_text(R"({"i":1,"j":1,"k":1,"c":1.5})")), ParseError);
  EXPECT_THROW(io::parse_algebra(algebra_text(R"({"i":1,"j":1,"k":1,"c":"1"}, {"i":1,"j":1,"k":1,"c":"2"})")),
               ParseError);
  EXPECT_THROW(io::parse_algebra(algebra_text(R"({"i":1,"j":2,"k":3,"c":"1"}, {"i":2,"j":1,"k":3,"c":"1"})", 3,
                                              R"(, "closure": "antisymmetric")")),
               ParseError);
  EXPECT_THROW(io::parse_algebra(algebra_text(R"({"i":1,"j":1,"k":3,"c":"1"})", 3, R"(, "closure": "antisymmetric")")),
               ParseError);
  EXPECT_THROW(io::parse_algebra(algebra_text("", 3, R"(, "closure": "symmetric")")), ParseError);
  EXPECT_THROW(io::parse_algebra(algebra_text("", 3, R"(, "field": "R")")), ParseError);
}

TEST(FamilyIo, RoundTrip) {
  for (const auto& fam : {witness::n3minus_lambda2_family(), witness::lambda2_pminus_family(6),
                          witness::split_squares_family(5), DegenerationFamily::constant(Matrix<Rational>::identity(2))}) {
    const auto back = io::parse_family(io::write_family(fam));
    EXPECT_EQ(back.given, fam.given);
    EXPECT_EQ(back.matrix, fam.matrix);
  }
}

TEST(FamilyIo, ParsesRationalFunctions) {
  const auto fam = io::parse_family(R"j({"dim": 2, "given": "g_inverse", "matrix": [["t", "(1)/(t+1)"], [0, "t^2"]]})j");
  EXPECT_EQ(fam.given, DegenerationFamily::Given::Inverse);
  EXPECT_EQ(fam.matrix(0, 1), RatFunc::parse("(1)/(t+1)"));
  EXPECT_EQ(fam.matrix(1, 1), RatFunc::parse("t^2"));
}

TEST(FamilyIo, Errors) {
  EXPECT_THROW(io::parse_family(R"({"dim": 2, "given": "h", "matrix": [["1","0"],["0","1"]]})"), ParseError);
  EXPECT_THROW(io::parse_family(R"({"dim": 2, "given": "g", "matrix": [["1","0"]]})"), ParseError);
  EXPECT_THROW(io::parse_family(R"({"dim": 2, "given": "g", "matrix": [["1"],["0","1"]]})"), ParseError);
  EXPECT_THROW(io::parse_family(R"({"dim": 2, "given": "g"})"), ParseError);
  EXPECT_THROW(io::parse_family(R"({"dim": 2, "given": "g", "matrix": [["1/0","0"],["0","1"]]})"), ParseError);
  EXPECT_THROW(io::parse_family(R"({"dim": 2, "given": "g", "matrix": [["(t","0"],["0","1"]]})"), ParseError);
}

TEST(FileIo, MissingFile) { EXPECT_THROW(io::read_file("/nonexistent/nalg.json"), ParseError); }
