#ifndef NALG_DEGENERATION_HPP
#define NALG_DEGENERATION_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nalg/classify3.hpp"
#include "nalg/invariants.hpp"

namespace nalg {

/// Invertible n x n matrix over Q(t), given either as g_t or as g_t^-1.
/// Entry (i, j) is the coefficient of e_i in the image of e_j.
struct DegenerationFamily {
  enum class Given { Direct, Inverse };

  Given given = Given::Direct;
  Matrix<RatFunc> matrix;

  DegenerationFamily() = default;
  DegenerationFamily(Given g, Matrix<RatFunc> m);

  static DegenerationFamily constant(const Matrix<Rational>& g);

  [[nodiscard]] std::size_t dim() const { return matrix.rows(); }
  /// g_t; inverts when the family was given as g_t^-1. Throws Singular.
  [[nodiscard]] Matrix<RatFunc> g() const;
  /// g_t^-1; inverts when the family was given as g_t. Throws Singular.
  [[nodiscard]] Matrix<RatFunc> g_inverse() const;
};

/// Diagonal family g_t(e_i) = t^exponents[i] e_i.
DegenerationFamily scaling_family(std::size_t n, const std::vector<int>& exponents);

/// The algebra in the moving basis: (g_t * a) over Q(t).
AlgebraQt transport(const AlgebraQ& a, const DegenerationFamily& fam);
AlgebraQt transport(const AlgebraQt& a, const DegenerationFamily& fam);

/// Entrywise t -> 0. Throws LimitDiverges naming the first (1-based) entry
/// with a pole at 0.
AlgebraQ limit_algebra(const AlgebraQt& a);

/// Largest pole order at t = 0 among the entries of m (0 when none).
int pole_order(const Matrix<RatFunc>& m);

/// Single family whose limit equals the limit of `outer` applied to the
/// limit of `inner`: g_outer(t) * g_inner(t^m), with m larger than the pole
/// order the outer action can produce.
DegenerationFamily compose(const DegenerationFamily& outer, const DegenerationFamily& inner);

struct Verification {
  enum class Kind { ExactMatch, FingerprintMatch, Mismatch };

  Kind kind = Kind::Mismatch;
  AlgebraQ limit;
  /// For ExactMatch: relabeling (old index -> new) taking limit to target.
  std::vector<std::size_t> permutation;
  /// For Mismatch: first (1-based) entry where limit and target differ.
  std::array<int, 3> first_difference{0, 0, 0};
  std::string detail;

  [[nodiscard]] bool matched() const { return kind != Kind::Mismatch; }
};

std::string to_string(Verification::Kind kind);

/// Compares an algebra with a target: exact equality, then (dim <= 6) a
/// search over basis permutations, then fingerprint equality.
Verification match_target(const AlgebraQ& limit, const AlgebraQ& target);

/// Transport, take the limit, and compare with the target.
Verification verify_degeneration(const AlgebraQ& source, const DegenerationFamily& fam, const AlgebraQ& target);

/// (gamma_ii^k, gamma_ij^k, gamma_ji^k, gamma_jj^k) at distinct 0-based i, j, k.
struct LemmaHypothesis {
  std::size_t i = 0;
  std::size_t j = 1;
  std::size_t k = 2;
  std::array<Rational, 4> tuple;
};

LemmaHypothesis read_hypothesis(const AlgebraQ& a, std::size_t i, std::size_t j, std::size_t k);

/// True when the tuple lies in {(0, b, -b, 0)} or in the closure of
/// {(d, b, b, b^2/d) : d != 0}, i.e. b = c and p s = b^2. The closure adds
/// (0, 0, 0, s), which is lambda_2 after swapping the two generators.
bool lemma_excluded(const std::array<Rational, 4>& tuple);

struct LemmaOutcome {
  AlgebraQ permuted;  // basis relabeled so (i, j, k) -> (1, 2, 3)
  AlgebraQ stage1;    // after g_t = diag(t^-1, t^-1, t^-2, ..., t^-2)
  AlgebraQ limit;     // after g_t = diag(t^-1, t^-1, t^-2, t^-1, ..., t^-1)
  Matrix<Rational> core;
  TwoGenClass label;
};

/// Two sequential scaling degenerations isolating the products of e_i, e_j
/// along e_k, followed by classification of the resulting 2x2 core.
/// Throws HypothesisViolated when the tuple is excluded, DimensionMismatch
/// on invalid indices.
LemmaOutcome lemma_degenerate(const AlgebraQ& a, std::size_t i, std::size_t j, std::size_t k);

}  // namespace nalg

#endif  // NALG_DEGENERATION_HPP
