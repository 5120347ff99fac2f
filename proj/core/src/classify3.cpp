#include "nalg/classify3.hpp"

#include "nalg/algebra.hpp"

namespace nalg {

std::string TwoGenClass::to_string() const {
  switch (label) {
    case Label::Abelian: return "Abelian";
    case Label::Lambda2: return "Lambda2";
    case Label::N3minus: return "N3minus";
    case Label::L4: return "L4(" + (alpha ? alpha->to_string() : std::string("?")) + ")";
    case Label::L5: return "L5";
  }
  return "?";
}

TwoGenClass classify(const Matrix<Rational>& m) {
  if (m.rows() != 2 || m.cols() != 2) throw DimensionMismatch("classify expects a 2x2 matrix");
  if (m.is_zero()) return {TwoGenClass::Label::Abelian, std::nullopt};
  const Rational half(1, 2);
  const Rational k = (m(0, 1) - m(1, 0)) * half;
  const Rational s00 = m(0, 0);
  const Rational s01 = (m(0, 1) + m(1, 0)) * half;
  const Rational s11 = m(1, 1);
  const bool sym_zero = s00.is_zero() && s01.is_zero() && s11.is_zero();
  const Rational det_s = s00 * s11 - s01 * s01;
  if (k.is_zero()) {
    return {det_s.is_zero() ? TwoGenClass::Label::Lambda2 : TwoGenClass::Label::L5, std::nullopt};
  }
  if (sym_zero) return {TwoGenClass::Label::N3minus, std::nullopt};
  const Rational invariant = det_s / (k * k);
  return TwoGenClass::l4((invariant + Rational(1)) / Rational(4));
}

std::optional<Matrix<Rational>> core_matrix(const AlgebraQ& a) {
  const std::size_t n = a.dim();
  const auto sq = square(a);
  if (sq.dim() == 0) return Matrix<Rational>(2, 2);
  if (sq.dim() > 1 || n < 3) return std::nullopt;
  const Vector<Rational> w = sq.basis().row(0);
  std::size_t pivot = 0;
  while (w[pivot].is_zero()) ++pivot;
  // w must annihilate A from both sides.
  for (std::size_t i = 0; i < n; ++i) {
    const auto e = unit_vector<Rational>(n, i);
    if (!is_zero_vector(product(a, e, w)) || !is_zero_vector(product(a, w, e))) return std::nullopt;
  }
  // e_i e_j = form(i, j) w, read off at the RREF pivot where w has entry 1.
  Matrix<Rational> form(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) form(i, j) = a(i, j, pivot);
  }
  std::vector<Vector<Rational>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back(form.row(i));
    rows.push_back(form.column(i));
  }
  const auto radical = solve_homogeneous(Matrix<Rational>::from_rows(rows, n));
  if (n - radical.dim() > 2) return std::nullopt;
  // Complete the radical with standard basis vectors.
  std::vector<std::size_t> gens;
  Subspace<Rational> acc = radical;
  for (std::size_t i = 0; i < n && gens.size() < n - radical.dim(); ++i) {
    const auto e = unit_vector<Rational>(n, i);
    if (acc.contains(e)) continue;
    gens.push_back(i);
    acc = subspace_sum(acc, Subspace<Rational>::span({e}, n));
  }
  Matrix<Rational> core(2, 2);
  for (std::size_t p = 0; p < gens.size(); ++p) {
    for (std::size_t q = 0; q < gens.size(); ++q) core(p, q) = form(gens[p], gens[q]);
  }
  return core;
}

std::optional<TwoGenClass> classify_algebra(const AlgebraQ& a) {
  auto m = core_matrix(a);
  if (!m) return std::nullopt;
  return classify(*m);
}

}  // namespace nalg
