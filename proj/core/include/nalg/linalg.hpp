#ifndef NALG_LINALG_HPP
#define NALG_LINALG_HPP

#include <cstddef>
#include <vector>

#include "nalg/matrix.hpp"

namespace nalg {

template <Field S>
struct RrefResult {
  Matrix<S> reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by Gauss-Jordan elimination. The pivot in each
/// column is the first nonzero entry at or below the current row.
template <Field S>
RrefResult<S> rref(Matrix<S> m) {
  RrefResult<S> out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    }
    const S inv = S::one() / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) {
      if (!m(row, j).is_zero()) m(row, j) = m(row, j) * inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const S factor = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(r, j) -= factor * m(row, j);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  out.reduced = std::move(m);
  return out;
}

template <Field S>
std::size_t rank(const Matrix<S>& m) {
  return rref(m).rank;
}

/// Determinant by elimination.
template <Field S>
S determinant(Matrix<S> m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  S det = S::one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col).is_zero()) ++piv;
    if (piv == n) return S::zero();
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      det = -det;
    }
    det = det * m(col, col);
    const S inv = S::one() / m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const S factor = m(r, col) * inv;
      for (std::size_t j = col; j < n; ++j) {
        if (!m(col, j).is_zero()) m(r, j) -= factor * m(col, j);
      }
    }
  }
  return det;
}

/// Inverse of a square matrix; throws Singular when rank < n.
template <Field S>
Matrix<S> invert(const Matrix<S>& m) {
  if (!m.is_square()) throw DimensionMismatch("cannot invert a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<S> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = S::one();
  }
  auto r = rref(std::move(aug));
  if (r.rank < n || r.pivots[n - 1] != n - 1) throw Singular();
  Matrix<S> inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  }
  return inv;
}

/// Linear subspace of S^n, stored as the nonzero rows of an RREF matrix.
/// The representation is canonical, so equality is subspace equality.
template <Field S>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace span(const std::vector<Vector<S>>& vectors, std::size_t ambient_dim) {
    Subspace s(ambient_dim);
    if (vectors.empty()) return s;
    auto r = rref(Matrix<S>::from_rows(vectors, ambient_dim));
    s.basis_ = Matrix<S>(r.rank, ambient_dim);
    for (std::size_t i = 0; i < r.rank; ++i) {
      for (std::size_t j = 0; j < ambient_dim; ++j) s.basis_(i, j) = r.reduced(i, j);
    }
    return s;
  }

  static Subspace full(std::size_t ambient_dim) {
    std::vector<Vector<S>> rows;
    for (std::size_t i = 0; i < ambient_dim; ++i) rows.push_back(unit_vector<S>(ambient_dim, i));
    return span(rows, ambient_dim);
  }

  [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
  [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
  [[nodiscard]] bool is_zero() const { return dim() == 0; }
  [[nodiscard]] const Matrix<S>& basis() const { return basis_; }

  [[nodiscard]] std::vector<Vector<S>> vectors() const {
    std::vector<Vector<S>> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
  }

  [[nodiscard]] bool contains(const Vector<S>& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector length differs from ambient dimension");
    if (is_zero_vector(v)) return true;
    auto rows = vectors();
    rows.push_back(v);
    return rank(Matrix<S>::from_rows(rows, ambient_)) == dim();
  }

  [[nodiscard]] bool contains(const Subspace& other) const {
    for (const auto& v : other.vectors()) {
      if (!contains(v)) return false;
    }
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

  [[nodiscard]] std::string to_string() const { return basis_.to_string(); }

 private:
  std::size_t ambient_ = 0;
  Matrix<S> basis_;
};

/// Null space {x : m x = 0}.
template <Field S>
Subspace<S> solve_homogeneous(const Matrix<S>& m) {
  const std::size_t n = m.cols();
  auto r = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector<S>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector<S> v(n, S::zero());
    v[f] = S::one();
    for (std::size_t row = 0; row < r.rank; ++row) v[r.pivots[row]] = -r.reduced(row, f);
    basis.push_back(std::move(v));
  }
  return Subspace<S>::span(basis, n);
}

template <Field S>
Subspace<S> subspace_sum(const Subspace<S>& a, const Subspace<S>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace_sum: ambient dimensions differ");
  auto rows = a.vectors();
  for (auto& v : b.vectors()) rows.push_back(std::move(v));
  return Subspace<S>::span(rows, a.ambient_dim());
}

template <Field S>
Subspace<S> subspace_intersection(const Subspace<S>& a, const Subspace<S>& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionMismatch("subspace_intersection: ambient dimensions differ");
  }
  // x in both <=> x is orthogonal to both annihilators.
  const std::size_t n = a.ambient_dim();
  auto ann_a = solve_homogeneous(a.basis().rows() ? a.basis() : Matrix<S>(0, n));
  auto ann_b = solve_homogeneous(b.basis().rows() ? b.basis() : Matrix<S>(0, n));
  auto rows = ann_a.vectors();
  for (auto& v : ann_b.vectors()) rows.push_back(std::move(v));
  if (rows.empty()) return Subspace<S>::full(n);
  return solve_homogeneous(Matrix<S>::from_rows(rows, n));
}

}  // namespace nalg

#endif  // NALG_LINALG_HPP
