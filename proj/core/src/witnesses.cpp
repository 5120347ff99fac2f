#include "nalg/witnesses.hpp"

namespace nalg::witness {

namespace {

using Given = DegenerationFamily::Given;

RatFunc tpow(const Rational& c, int k) { return RatFunc::monomial(c, k); }

DegenerationFamily diagonal_exponents(std::size_t n, std::vector<int> exps) { return scaling_family(n, exps); }

}  // namespace

DegenerationFamily n3minus_lambda2_family() {
  Matrix<RatFunc> h(5, 5);
  const Rational half(1, 2);
  h(0, 0) = tpow(1, 1);
  h(2, 0) = tpow(1, 1);
  h(0, 1) = tpow(half, 1);
  h(3, 1) = tpow(half, 1);
  h(1, 2) = tpow(1, 2);
  h(0, 3) = tpow(1, 2);
  h(4, 4) = tpow(1, 1);
  h(1, 4) = tpow(1, 1);
  return {Given::Inverse, std::move(h)};
}

DegenerationFamily lambda2_lambda2_family(std::size_t n) {
  if (n < 4) throw DimTooSmall("lambda2_lambda2_family needs n >= 4");
  Matrix<RatFunc> h(n, n);
  h(0, 0) = tpow(1, 1);
  h(0, 1) = tpow(1, 1);
  h(2, 1) = tpow(1, 1);
  h(1, 2) = tpow(1, 2);
  h(1, 3) = tpow(1, 1);
  h(3, 3) = tpow(1, 1);
  for (std::size_t i = 4; i < n; ++i) h(i, i) = RatFunc::one();
  return {Given::Inverse, std::move(h)};
}

DegenerationFamily lambda2_pminus_family(std::size_t n) {
  if (n < 4) throw DimTooSmall("lambda2_pminus_family needs n >= 4");
  Matrix<RatFunc> h(n, n);
  const Rational half(1, 2);
  h(0, 0) = tpow(1, 1);
  h(3, 0) = tpow(1, 1);
  h(0, 1) = tpow(half, 1);
  h(2, 1) = tpow(1, 1);
  h(1, 2) = tpow(1, 2);
  h(3, 3) = tpow(1, 1);
  h(1, 3) = tpow(half, 1);
  for (std::size_t i = 4; i < n; ++i) h(i, i) = tpow(1, 1);
  return {Given::Inverse, std::move(h)};
}

DegenerationFamily square_line_lie_family(std::size_t n) {
  if (n < 4) throw DimTooSmall("square_line_lie_family needs n >= 4");
  const std::size_t last = n - 1;
  Matrix<RatFunc> g(n, n);
  g(last, 0) = tpow(1, -2);
  g(1, 1) = tpow(2, -1);
  g(last, 1) = tpow(-1, -2);
  g(0, 2) = tpow(1, -1);
  g(last, 2) = tpow(-1, -2);
  g(2, last) = tpow(1, -2);
  for (std::size_t i = 3; i < last; ++i) g(i, i) = tpow(1, -2);
  return {Given::Direct, std::move(g)};
}

DegenerationFamily square_line_nonlie_family(std::size_t n) {
  if (n < 3) throw DimTooSmall("square_line_nonlie_family needs n >= 3");
  std::vector<int> exps(n, -1);
  exps[0] = exps[1] = exps[n - 1] = 0;
  return diagonal_exponents(n, exps);
}

DegenerationFamily split_squares_family(std::size_t n) {
  std::vector<int> exps(n, -2);
  exps[0] = exps[1] = -1;
  return diagonal_exponents(n, exps);
}

DegenerationFamily mixed_products_family(std::size_t n, std::size_t k, bool as_printed) {
  if (k < 3 || k + 2 > n) throw DimensionMismatch("mixed_products_family needs 3 <= k <= n - 2");
  std::vector<int> exps(n, -5);
  exps[0] = -2;
  exps[1] = exps[2] = -3;
  exps[k] = -4;
  exps[k + 1] = as_printed ? -5 : -6;
  return diagonal_exponents(n, exps);
}

DegenerationFamily antisymmetric_family(std::size_t n) {
  if (n < 5) throw DimTooSmall("antisymmetric_family needs n >= 5");
  std::vector<int> exps(n, -3);
  exps[0] = exps[1] = exps[2] = -2;
  exps[3] = exps[4] = -4;
  return diagonal_exponents(n, exps);
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  return {num(rng), den(rng)};
}

AlgebraQ square_line_lie_instance(std::size_t n, std::mt19937_64& rng) {
  if (n < 4) throw DimTooSmall("square_line_lie_instance needs n >= 4");
  const std::size_t last = n - 1;
  AlgebraQ a(n, "square_line_lie");
  a.set(0, 0, last, 1);
  for (std::size_t i = 1; i < last; ++i) {
    for (std::size_t j = i + 1; j < last; ++j) {
      const Rational c = (i == 1 && j == 2) ? Rational(1) : random_rational(rng);
      a.set(i, j, last, c);
      a.set(j, i, last, -c);
    }
  }
  return a;
}

AlgebraQ square_line_nonlie_instance(std::size_t n, std::mt19937_64& rng) {
  if (n < 3) throw DimTooSmall("square_line_nonlie_instance needs n >= 3");
  const std::size_t last = n - 1;
  AlgebraQ a(n, "square_line_nonlie");
  a.set(0, 0, last, 1);
  for (std::size_t i = 1; i < last; ++i) {
    for (std::size_t j = 1; j < last; ++j) a.set(i, j, last, (i == 1 && j == 1) ? Rational(1) : random_rational(rng));
  }
  return a;
}

AlgebraQ split_squares_instance(std::size_t n, std::mt19937_64& rng) {
  if (n < 4) throw DimTooSmall("split_squares_instance needs n >= 4");
  const std::size_t k = n - 2;
  AlgebraQ a(n, "split_squares");
  a.set(0, 0, k, 1);
  a.set(1, 1, k + 1, 1);
  for (std::size_t i = 2; i < k; ++i) {
    a.set(0, i, k, random_rational(rng));
    a.set(i, 0, k, random_rational(rng));
  }
  for (std::size_t i = 1; i < k; ++i) {
    for (std::size_t j = 1; j < k; ++j) {
      if (i == 1 && j == 1) continue;
      for (std::size_t s = k; s < n; ++s) a.set(i, j, s, random_rational(rng));
    }
  }
  return a;
}

AlgebraQ mixed_products_instance(std::size_t n, std::mt19937_64& rng) {
  if (n < 5) throw DimTooSmall("mixed_products_instance needs n >= 5");
  const std::size_t k = n - 2;
  AlgebraQ a(n, "mixed_products");
  a.set(0, 0, k, 1);
  for (std::size_t i = 1; i < k; ++i) {
    a.set(0, i, k, random_rational(rng));
    a.set(i, 0, k, random_rational(rng));
    a.set(i, i, k, random_rational(rng));
  }
  a.set(1, 2, k + 1, 1);
  a.set(2, 1, k + 1, -1);
  for (std::size_t i = 1; i < k; ++i) {
    for (std::size_t j = 1; j < k; ++j) {
      if (i == j || (i <= 2 && j <= 2)) continue;
      for (std::size_t s = k; s < n; ++s) a.set(i, j, s, random_rational(rng));
    }
  }
  return a;
}

AlgebraQ square_chain_instance(std::size_t n, std::mt19937_64& rng, bool opposite) {
  if (n < 4) throw DimTooSmall("square_chain_instance needs n >= 4");
  const std::size_t k = n - 2;
  AlgebraQ a(n, "square_chain");
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) a.set(i, j, k, (i == 0 && j == 0) ? Rational(1) : random_rational(rng));
  }
  a.set(0, k, k + 1, 1);
  Rational r = Rational(-1);
  while (!opposite && r == Rational(-1)) r = random_rational(rng);
  a.set(k, 0, k + 1, r);
  a.set(k, k, k + 1, random_rational(rng));
  for (std::size_t i = 1; i < k; ++i) a.set(i, k, k + 1, random_rational(rng));
  return a;
}

AlgebraQ antisymmetric_instance(std::size_t n, std::mt19937_64& rng) {
  if (n < 5) throw DimTooSmall("antisymmetric_instance needs n >= 5");
  AlgebraQ a(n, "antisymmetric");
  a.set(0, 1, 3, 1);
  a.set(1, 0, 3, -1);
  a.set(0, 2, 4, 1);
  a.set(2, 0, 4, -1);
  for (std::size_t s = 3; s < n; ++s) {
    const Rational c = random_rational(rng);
    a.set(1, 2, s, c);
    a.set(2, 1, s, -c);
  }
  return a;
}

AlgebraQ mixed_products_limit(std::size_t n, std::size_t k) {
  AlgebraQ a(n, "mixed_products_limit");
  a.set(0, 0, k, 1);
  a.set(1, 2, k + 1, 1);
  a.set(2, 1, k + 1, -1);
  return a;
}

std::vector<std::size_t> split_squares_relabeling(std::size_t n) {
  const std::size_t k = n - 2;
  std::vector<std::size_t> perm(n);
  perm[0] = 0;
  perm[k] = 1;
  perm[1] = 2;
  perm[k + 1] = 3;
  std::size_t next = 4;
  for (std::size_t i = 2; i < k; ++i) perm[i] = next++;
  return perm;
}

}  // namespace nalg::witness
