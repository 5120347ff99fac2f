#include <gtest/gtest.h>

#include <iostream>

#include "nalg/catalog.hpp"
#include "nalg/classify3.hpp"
#include "nalg/invariants.hpp"

using namespace nalg;

namespace {

std::vector<AlgebraQ> instances_from(const std::string& source, std::size_t n) {
  std::vector<AlgebraQ> out;
  for (const auto& e : catalog::entries()) {
    if (e.source != source || n < e.min_dim) continue;
    if (e.needs_alpha) {
      for (const Rational& alpha : {Rational(1, 4), Rational(2), Rational(-1)}) {
        if (e.name == "g1" && (alpha.is_zero() || alpha.is_one())) continue;
        out.push_back(catalog::make(e.name, n, alpha));
      }
    } else {
      out.push_back(catalog::make(e.name, n));
    }
  }
  return out;
}

bool distinguishable(const AlgebraQ& a, const AlgebraQ& b) {
  if (fingerprint(a) != fingerprint(b)) return true;
  const auto ca = classify_algebra(a);
  const auto cb = classify_algebra(b);
  return ca && cb && !(*ca == *cb);
}

}  // namespace

TEST(Catalog, MakeExamples) {
  const auto l5 = catalog::make("L5", 4);
  EXPECT_EQ(l5.dim(), 4u);
  EXPECT_EQ(l5.table(), "e1e1=e3, e1e2=e3, e2e1=e3");
  EXPECT_EQ(l5.name(), "L5+a1");
  EXPECT_EQ(catalog::make("rn", 3).table(), "e2e1=e2, e3e1=e3");
  EXPECT_EQ(catalog::make("nu", 2, Rational(1, 3)).table(), "e1e1=e1, e1e2=1/3*e2, e2e1=2/3*e2");
  EXPECT_EQ(catalog::make("n52", 5).nonzeros().size(), 4u);
  EXPECT_TRUE(catalog::make("abelian", 3).is_abelian());
}

TEST(Catalog, DisplayName) {
  EXPECT_EQ(catalog::display_name("L4", 5, Rational(1, 4)), "L4(1/4)+a2");
  EXPECT_EQ(catalog::display_name("L5", 3, std::nullopt), "L5");
}

TEST(Catalog, Errors) {
  EXPECT_THROW(catalog::make("nope", 3), UnknownName);
  EXPECT_THROW(catalog::entry("nope"), UnknownName);
  EXPECT_THROW(catalog::make("L5", 2), DimTooSmall);
  EXPECT_THROW(catalog::make("n51", 4), DimTooSmall);
  EXPECT_THROW(catalog::make("L4", 3), MissingParam);
  EXPECT_THROW(catalog::make("L5", 3, Rational(1)), ForbiddenParam);
  EXPECT_THROW(catalog::make("g1", 3, Rational(0)), ForbiddenParam);
  EXPECT_THROW(catalog::make("g1", 3, Rational(1)), ForbiddenParam);
  EXPECT_NO_THROW(catalog::make("g1", 3, Rational(2)));
}

TEST(Catalog, AssertedIdentitiesHold) {
  for (const auto& e : catalog::entries()) {
    if (!e.asserted) continue;
    for (std::size_t n = e.min_dim; n <= e.min_dim + 2; ++n) {
      const auto a = e.needs_alpha ? catalog::make(e.name, n, Rational(3, 7)) : catalog::make(e.name, n);
      const auto r = check_identity(a, *e.asserted);
      EXPECT_TRUE(r.holds) << a.name() << " fails " << to_string(*e.asserted);
    }
  }
}

TEST(Catalog, NuIsNotLeibniz) {
  // x(yz) - (xy)z + (xz)y at x = y = z = e1 equals e1.
  for (const Rational& alpha : {Rational(0), Rational(1, 2), Rational(1), Rational(5)}) {
    const auto nu = catalog::make("nu", 3, alpha);
    EXPECT_FALSE(check_identity(nu, IdentityKind::LeibnizRight).holds);
  }
  EXPECT_FALSE(catalog::entry("nu").asserted.has_value());
}

TEST(Catalog, FirstListAtDimensionFour) {
  // Pairwise comparison by invariants; pairs the invariants cannot tell
  // apart are reported rather than failed, since equal fingerprints do not
  // prove isomorphism.
  const auto list = instances_from("Theorem 1", 4);
  ASSERT_GE(list.size(), 4u);
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      if (!distinguishable(list[i], list[j])) {
        std::cout << "[ collision ] " << list[i].name() << " vs " << list[j].name() << '\n';
      }
    }
  }
}

TEST(Catalog, ThirdListIsPairwiseDistinctAtDimensionFive) {
  const auto list = instances_from("Theorem 3", 5);
  ASSERT_GE(list.size(), 5u);
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      EXPECT_TRUE(distinguishable(list[i], list[j])) << list[i].name() << " vs " << list[j].name();
    }
  }
}

TEST(Catalog, EntriesAreOrderedAndUnique) {
  const auto& all = catalog::entries();
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(catalog::entry(all[i].name).name, all[i].name);
    for (std::size_t j = 0; j < i; ++j) EXPECT_NE(all[i].name, all[j].name);
    EXPECT_FALSE(all[i].description.empty());
  }
}
