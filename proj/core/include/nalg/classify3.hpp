#ifndef NALG_CLASSIFY3_HPP
#define NALG_CLASSIFY3_HPP

#include <optional>
#include <string>

#include "nalg/tensor.hpp"

namespace nalg {

/// Isomorphism class over C of a 3-dimensional algebra
///   e1e1 = m11 e3, e1e2 = m12 e3, e2e1 = m21 e3, e2e2 = m22 e3
/// with e3 annihilating everything.
struct TwoGenClass {
  enum class Label { Abelian, Lambda2, N3minus, L4, L5 };

  Label label = Label::Abelian;
  std::optional<Rational> alpha;  // set only for L4

  static TwoGenClass l4(const Rational& a) { return {Label::L4, a}; }

  /// "Abelian", "Lambda2", "N3minus", "L4(1/4)", "L5"
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const TwoGenClass&, const TwoGenClass&) = default;
};

/// Classifies M up to M -> s * P^T M P (P invertible, s nonzero).
///
/// With S and K the symmetric and antisymmetric parts of M, K transforms by
/// s det(P) and S by s P^T S P, so det(S)/det(K) is invariant whenever
/// K != 0. Decision tree:
///   M = 0                      -> Abelian
///   K = 0, rank S = 1          -> Lambda2
///   K = 0, rank S = 2          -> L5
///   K != 0, S = 0              -> N3minus
///   K != 0, S != 0             -> L4(alpha), alpha = (det S / det K + 1) / 4
/// Throws DimensionMismatch unless m is 2x2.
TwoGenClass classify(const Matrix<Rational>& m);

/// For an algebra with dim A^2 <= 1, A^2 annihilating, and a two-sided
/// radical of codimension <= 2, returns the 2x2 coefficient matrix of its
/// 3-dimensional core (the algebra is then core + abelian). Returns nullopt
/// outside that stratum.
std::optional<Matrix<Rational>> core_matrix(const AlgebraQ& a);

/// classify(core_matrix(a)) when the algebra lies in the stratum.
std::optional<TwoGenClass> classify_algebra(const AlgebraQ& a);

}  // namespace nalg

#endif  // NALG_CLASSIFY3_HPP
