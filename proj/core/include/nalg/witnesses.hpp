#ifndef NALG_WITNESSES_HPP
#define NALG_WITNESSES_HPP

#include <cstddef>
#include <random>

#include "nalg/degeneration.hpp"

namespace nalg::witness {

// Families from the printed degeneration arguments. All indices are 1-based
// in comments and 0-based in code.

/// g_t^-1 on n3minus_lambda2: x1 -> t(x1+x3), x2 -> t/2 (x1+x4), x3 -> t^2 x2,
/// x4 -> t^2 x1, x5 -> t(x5+x2).
DegenerationFamily n3minus_lambda2_family();

/// g_t^-1 on lambda2_lambda2: x1 -> t x1, x2 -> t(x1+x3), x3 -> t^2 x2,
/// x4 -> t(x2+x4). For n > 4 the extra basis vectors are fixed.
DegenerationFamily lambda2_lambda2_family(std::size_t n = 4);

/// g_t^-1 on lambda2_pminus: x1 -> t(x1+x4), x2 -> t(x1/2+x3), x3 -> t^2 x2,
/// x4 -> t(x4+x2/2), xi -> t xi (i >= 5).
DegenerationFamily lambda2_pminus_family(std::size_t n);

/// g_t on an algebra with A^2 = span(en) and a Lie subalgebra on e2..en:
/// e1 -> t^-2 en, e2 -> 2t^-1 e2 - t^-2 en, e3 -> t^-1 e1 - t^-2 en,
/// en -> t^-2 e3, ei -> t^-2 ei.
DegenerationFamily square_line_lie_family(std::size_t n);

/// g_t = diag(1, 1, t^-1, ..., t^-1, 1).
DegenerationFamily square_line_nonlie_family(std::size_t n);

/// g_t = diag(t^-1, t^-1, t^-2, ..., t^-2).
DegenerationFamily split_squares_family(std::size_t n);

/// Weighted scaling isolating e1e1 = e_{k+1}, e2e3 = -e3e2 = e_{k+2}, where
/// k is 1-based. Weights 2, 3, 3 on e1, e2, e3, 4 on e_{k+1}, 6 on e_{k+2}
/// and 5 elsewhere. With `as_printed` the weight of e_{k+2} is 5, which
/// sends e2e3 to zero.
DegenerationFamily mixed_products_family(std::size_t n, std::size_t k, bool as_printed = false);

/// g_t = diag(t^-2, t^-2, t^-2, t^-4, t^-4, t^-3, ..., t^-3).
DegenerationFamily antisymmetric_family(std::size_t n);

// Random algebras satisfying each case hypothesis. Parameters are drawn
// from small rationals.

Rational random_rational(std::mt19937_64& rng);

/// e1e1 = en, e_i e_j = a_ij en (2 <= i, j <= n-1), a antisymmetric, a_23 = 1.
AlgebraQ square_line_lie_instance(std::size_t n, std::mt19937_64& rng);

/// e1e1 = en, e2e2 = en, e_i e_j = a_ij en for the other 2 <= i, j <= n-1.
AlgebraQ square_line_nonlie_instance(std::size_t n, std::mt19937_64& rng);

/// k = n - 2 generators: e1e1 = e_{k+1}, e2e2 = e_{k+2}, e1ei, eie1 in
/// span(e_{k+1}) for i >= 3, e1e2 = e2e1 = 0, other generator products
/// random in A^2.
AlgebraQ split_squares_instance(std::size_t n, std::mt19937_64& rng);

/// k = n - 2 generators: squares and products with e1 in span(e_{k+1}),
/// e2e3 = e_{k+2} = -e3e2, remaining generator products random in A^2.
AlgebraQ mixed_products_instance(std::size_t n, std::mt19937_64& rng);

/// k = n - 2 generators, every generator product in span(e_{k+1}),
/// e1e1 = e_{k+1}, e1e_{k+1} = e_{k+2}, e_{k+1}e1 = r e_{k+2} with r = -1
/// when `opposite` and r != -1 otherwise.
AlgebraQ square_chain_instance(std::size_t n, std::mt19937_64& rng, bool opposite);

/// Two-step nilpotent Lie algebra: e1e2 = e4, e1e3 = e5, e2e3 random in
/// span(e4, ..., en), antisymmetric.
AlgebraQ antisymmetric_instance(std::size_t n, std::mt19937_64& rng);

/// Limit expected from mixed_products_family: e1e1 = e_{k+1},
/// e2e3 = e_{k+2}, e3e2 = -e_{k+2}.
AlgebraQ mixed_products_limit(std::size_t n, std::size_t k);

/// Relabeling sending e1, e_{k+1}, e2, e_{k+2} to x1, x2, x3, x4, so that the
/// split_squares limit is in the printed lambda2_lambda2 basis.
std::vector<std::size_t> split_squares_relabeling(std::size_t n);

}  // namespace nalg::witness

#endif  // NALG_WITNESSES_HPP
