#include <gtest/gtest.h>

#include <gmpxx.h>

#include "nalg/catalog.hpp"
#include "nalg/invariants.hpp"
#include "support.hpp"

using namespace nalg;

namespace {

// Rank by fraction-free (Bareiss) elimination over Z, choosing the pivot from
// the bottom of each column. Rows are cleared of denominators first.
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = m.size();
    for (std::size_t i = m.size(); i-- > r;) {
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    }
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

// Der(A) written out coordinate by coordinate: unknown d(p, q) is the e_p
// coefficient of D(e_q), stored at column p * n + q.
std::size_t derivation_dimension_oracle(const AlgebraQ& a) {
  const std::size_t n = a.dim();
  std::vector<std::vector<mpz_class>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t m = 0; m < n; ++m) {
        std::vector<mpq_class> row(n * n, 0);
        // D(e_i e_j)_m
        for (std::size_t k = 0; k < n; ++k) row[m * n + k] += a(i, j, k).raw();
        // (D e_i) e_j and e_i (D e_j)
        for (std::size_t l = 0; l < n; ++l) {
          row[l * n + i] -= a(l, j, m).raw();
          row[l * n + j] -= a(i, l, m).raw();
        }
        mpz_class lcm = 1;
        for (const auto& x : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
        std::vector<mpz_class> zrow;
        bool nonzero = false;
        for (const auto& x : row) {
          const mpq_class scaled = x * lcm;
          zrow.push_back(scaled.get_num());
          nonzero = nonzero || scaled != 0;
        }
        if (nonzero) rows.push_back(std::move(zrow));
      }
    }
  }
  return n * n - bareiss_rank(std::move(rows));
}

std::vector<AlgebraQ> catalog_instances(std::size_t n) {
  std::vector<AlgebraQ> out;
  for (const auto& e : catalog::entries()) {
    if (n < e.min_dim) continue;
    if (e.needs_alpha) {
      for (const Rational& alpha : {Rational(1, 4), Rational(2), Rational(-3, 5)}) {
        out.push_back(catalog::make(e.name, n, alpha));
      }
    } else {
      out.push_back(catalog::make(e.name, n));
    }
  }
  return out;
}

}  // namespace

TEST(DerivationDimension, HandComputedExamples) {
  EXPECT_EQ(derivation_dimension(catalog::make("abelian", 3)), 9u);
  EXPECT_EQ(derivation_dimension(catalog::make("lambda2", 2)), 2u);
  EXPECT_EQ(derivation_dimension(catalog::make("L5", 3)), 4u);
}

TEST(DerivationDimension, MatchesFractionFreeOracleOnCatalog) {
  for (std::size_t n = 3; n <= 6; ++n) {
    for (const auto& a : catalog_instances(n)) {
      EXPECT_EQ(derivation_dimension(a), derivation_dimension_oracle(a)) << a.name();
    }
  }
}

TEST(DerivationDimension, MatchesOracleOnRandomTensors) {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<int> pct(0, 99);
  for (int s = 0; s < 40; ++s) {
    AlgebraQ a(3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t k = 0; k < 3; ++k) {
          if (pct(rng) < 15) a.set(i, j, k, testutil::random_rational(rng, 3, 3));
        }
      }
    }
    ASSERT_EQ(derivation_dimension(a), derivation_dimension_oracle(a)) << a.table();
  }
}

TEST(Fingerprint, L5) {
  const auto fp = fingerprint(catalog::make("L5", 4));
  EXPECT_EQ(fp.dim, 4u);
  EXPECT_EQ(fp.dim_square, 1u);
  EXPECT_EQ(fp.dim_rann, 2u);
  EXPECT_EQ(fp.dim_lann, 2u);
  EXPECT_EQ(fp.lcs_dims, (std::vector<std::size_t>{4, 1, 0}));
  EXPECT_TRUE(fp.is_nilpotent);
  EXPECT_TRUE(fp.identity_flags.at(IdentityKind::LeibnizRight));
  EXPECT_TRUE(fp.identity_flags.at(IdentityKind::LeibnizLeft));
  EXPECT_FALSE(fp.identity_flags.at(IdentityKind::Lie));
}

TEST(Fingerprint, RnAndJson) {
  const auto fp = fingerprint(catalog::make("rn", 3));
  EXPECT_FALSE(fp.is_nilpotent);
  EXPECT_TRUE(fp.is_solvable);
  EXPECT_EQ(fp.dim_rann, 2u);
  EXPECT_EQ(fp.dim_lann, 1u);
  const auto json = fp.to_json();
  EXPECT_EQ(json.find("{\"dim\":3,\"dim_der\":"), 0u) << json;
  EXPECT_NE(json.find("\"is_nilpotent\":false"), std::string::npos);
}

TEST(Fingerprint, InvariantUnderBasisChange) {
  std::mt19937_64 rng(52);
  for (const auto& a : catalog_instances(4)) {
    for (int s = 0; s < 3; ++s) {
      const auto g = testutil::random_invertible(rng, 4, 2);
      EXPECT_EQ(fingerprint(basis_change(a, g)), fingerprint(a)) << a.name();
    }
  }
}

TEST(Obstructions, NilpotencyRule) {
  const auto rep = obstructions(fingerprint(catalog::make("L5", 3)), fingerprint(catalog::make("rn", 3)));
  EXPECT_TRUE(rep.obstructed());
  EXPECT_TRUE(rep.violates("R1"));
}

TEST(Obstructions, AnnihilatorAndDerivationRules) {
  // The abelian algebra degenerates to nothing else: its annihilators and
  // derivation algebra are already maximal.
  const auto rep = obstructions(fingerprint(catalog::make("abelian", 3)), fingerprint(catalog::make("L5", 3)));
  EXPECT_TRUE(rep.violates("R3"));
  EXPECT_TRUE(rep.violates("R4"));
  EXPECT_TRUE(rep.violates("R6"));
  EXPECT_FALSE(rep.violates("R1"));
  EXPECT_NE(rep.to_json().find("\"verdict\":\"Obstructed\""), std::string::npos);
}

TEST(Obstructions, KnownDegenerationIsUnobstructed) {
  // L5 -> lambda2 + a1 -> abelian
  const auto l5 = fingerprint(catalog::make("L5", 3));
  const auto lam = fingerprint(catalog::make("lambda2", 3));
  const auto ab = fingerprint(catalog::make("abelian", 3));
  EXPECT_FALSE(obstructions(l5, lam).obstructed());
  EXPECT_FALSE(obstructions(lam, ab).obstructed());
  EXPECT_FALSE(obstructions(l5, l5).obstructed());
}

TEST(Obstructions, IdentityRule) {
  // The Leibniz identity of L5 does not hold in nu.
  const auto rep = obstructions(fingerprint(catalog::make("L5", 3)), fingerprint(catalog::make("nu", 3, Rational(1, 2))));
  EXPECT_TRUE(rep.violates("R7"));
}
