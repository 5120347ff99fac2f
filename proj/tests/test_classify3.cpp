#include <gtest/gtest.h>

#include "nalg/catalog.hpp"
#include "nalg/classify3.hpp"
#include "nalg/degeneration.hpp"
#include "support.hpp"

using namespace nalg;

namespace {

using MatQ = Matrix<Rational>;
using Label = TwoGenClass::Label;

MatQ small_matrix(std::mt19937_64& rng, int range) { return testutil::random_matrix(rng, 2, 2, range); }

// Searches P with entries in [-3, 3] and a scalar s with s P^T a P = b.
bool congruent_by_search(const MatQ& a, const MatQ& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  for (int p00 = -3; p00 <= 3; ++p00) {
    for (int p01 = -3; p01 <= 3; ++p01) {
      for (int p10 = -3; p10 <= 3; ++p10) {
        for (int p11 = -3; p11 <= 3; ++p11) {
          if (p00 * p11 - p01 * p10 == 0) continue;
          const MatQ p{{p00, p01}, {p10, p11}};
          const MatQ c = p.transpose() * a * p;
          std::optional<Rational> s;
          bool ok = true;
          for (std::size_t i = 0; i < 2 && ok; ++i) {
            for (std::size_t j = 0; j < 2 && ok; ++j) {
              if (c(i, j).is_zero() != b(i, j).is_zero()) {
                ok = false;
              } else if (!c(i, j).is_zero()) {
                const Rational ratio = b(i, j) / c(i, j);
                if (s && *s != ratio) ok = false;
                s = ratio;
              }
            }
          }
          if (ok) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

TEST(Classify3, Examples) {
  EXPECT_EQ(classify(MatQ(2, 2)).label, Label::Abelian);
  EXPECT_EQ(classify(MatQ{{1, 0}, {0, 0}}).label, Label::Lambda2);
  EXPECT_EQ(classify(MatQ{{1, 2}, {2, 4}}).label, Label::Lambda2);
  EXPECT_EQ(classify(MatQ{{0, 1}, {-1, 0}}).label, Label::N3minus);
  EXPECT_EQ(classify(MatQ{{1, 1}, {1, 0}}).label, Label::L5);
  EXPECT_EQ(classify(MatQ{{1, 0}, {0, 1}}).label, Label::L5);
  EXPECT_EQ(classify(MatQ{{1, 1}, {0, Rational(1, 4)}}), TwoGenClass::l4(Rational(1, 4)));
  EXPECT_EQ(classify(MatQ{{1, 1}, {0, 0}}), TwoGenClass::l4(Rational(0)));
  EXPECT_EQ(classify(MatQ{{0, 1}, {0, 0}}), TwoGenClass::l4(Rational(0)));
  EXPECT_THROW(classify(MatQ(3, 3)), DimensionMismatch);
}

TEST(Classify3, ToString) {
  EXPECT_EQ(TwoGenClass::l4(Rational(1, 4)).to_string(), "L4(1/4)");
  EXPECT_EQ(classify(MatQ{{1, 1}, {1, 0}}).to_string(), "L5");
  EXPECT_EQ(classify(MatQ{{0, 1}, {-1, 0}}).to_string(), "N3minus");
}

TEST(Classify3, L4ParameterIsRecovered) {
  std::mt19937_64 rng(71);
  for (int s = 0; s < 100; ++s) {
    const Rational alpha = testutil::random_rational(rng);
    EXPECT_EQ(classify(MatQ{{1, 1}, {0, alpha}}), TwoGenClass::l4(alpha));
  }
}

TEST(Classify3Property, CongruenceInvariance) {
  std::mt19937_64 rng(72);
  for (int s = 0; s < 1000; ++s) {
    const auto m = small_matrix(rng, 3);
    const auto p = testutil::random_invertible(rng, 2, 4);
    Rational scale = testutil::random_rational(rng, 5, 4);
    if (scale.is_zero()) scale = Rational(-2, 3);
    const MatQ moved = (p.transpose() * m * p).map([&](const Rational& x) { return scale * x; });
    ASSERT_EQ(classify(moved), classify(m)) << m.to_string() << " vs " << moved.to_string();
  }
}

TEST(Classify3Property, AgreesWithBruteForceSearch) {
  // A congruence found by search forces equal labels; among matrices with
  // entries in {-1, 0, 1} most equal labels are also witnessed.
  std::mt19937_64 rng(73);
  int witnessed = 0;
  for (int s = 0; s < 200; ++s) {
    const auto a = small_matrix(rng, 1);
    const auto b = small_matrix(rng, 1);
    const bool found = congruent_by_search(a, b);
    if (found) {
      ++witnessed;
      ASSERT_EQ(classify(a), classify(b)) << a.to_string() << " ~ " << b.to_string();
    }
  }
  EXPECT_GT(witnessed, 10);
}

TEST(Classify3Property, ExcludedTuplesAreExactlyTheDegenerateClasses) {
  std::mt19937_64 rng(74);
  for (int s = 0; s < 2000; ++s) {
    const auto m = small_matrix(rng, 2);
    const std::array<Rational, 4> tuple{m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
    const auto label = classify(m).label;
    ASSERT_EQ(lemma_excluded(tuple), label != Label::L4 && label != Label::L5) << m.to_string();
  }
}

TEST(CoreMatrix, CatalogAlgebras) {
  EXPECT_EQ(classify_algebra(catalog::make("L4", 5, Rational(2, 3))), TwoGenClass::l4(Rational(2, 3)));
  EXPECT_EQ(classify_algebra(catalog::make("L4_thm3", 4, Rational(2, 3))), TwoGenClass::l4(Rational(2, 3)));
  EXPECT_EQ(classify_algebra(catalog::make("L5", 4))->label, Label::L5);
  EXPECT_EQ(classify_algebra(catalog::make("n3minus", 4))->label, Label::N3minus);
  EXPECT_EQ(classify_algebra(catalog::make("lambda2", 4))->label, Label::Lambda2);
  EXPECT_EQ(classify_algebra(catalog::make("abelian", 3))->label, Label::Abelian);
  EXPECT_FALSE(core_matrix(catalog::make("rn", 3)).has_value());
  EXPECT_FALSE(core_matrix(catalog::make("lambda2_lambda2", 4)).has_value());
}

TEST(CoreMatrix, InvariantUnderBasisChange) {
  std::mt19937_64 rng(75);
  for (int s = 0; s < 50; ++s) {
    const auto m = small_matrix(rng, 3);
    AlgebraQ a(5);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) a.set(i, j, 2, m(i, j));
    }
    const auto g = testutil::random_invertible(rng, 5, 2);
    const auto cls = classify_algebra(basis_change(a, g));
    ASSERT_TRUE(cls.has_value());
    ASSERT_EQ(*cls, classify(m));
  }
}
