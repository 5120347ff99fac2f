#ifndef NALG_TESTS_SUPPORT_HPP
#define NALG_TESTS_SUPPORT_HPP

#include <random>

#include "nalg/algebra.hpp"

namespace nalg::testutil {

inline Rational random_rational(std::mt19937_64& rng, int range = 9, int max_den = 6) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, max_den);
  return {num(rng), den(rng)};
}

inline Polynomial random_polynomial(std::mt19937_64& rng, int max_degree = 4) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = random_rational(rng, 5, 3);
  return Polynomial(std::move(c));
}

inline RatFunc random_ratfunc(std::mt19937_64& rng, int max_degree = 4) {
  Polynomial den;
  while (den.is_zero()) den = random_polynomial(rng, max_degree);
  return {random_polynomial(rng, max_degree), den};
}

inline Matrix<Rational> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range = 9) {
  std::uniform_int_distribution<int> entry(-range, range);
  Matrix<Rational> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
  }
  return m;
}

/// Random invertible matrix with small integer entries.
inline Matrix<Rational> random_invertible(std::mt19937_64& rng, std::size_t n, int range = 3) {
  for (;;) {
    auto m = random_matrix(rng, n, n, range);
    if (rank(m) == n) return m;
  }
}

}  // namespace nalg::testutil

#endif  // NALG_TESTS_SUPPORT_HPP
