#ifndef NALG_ALGEBRA_HPP
#define NALG_ALGEBRA_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nalg/linalg.hpp"
#include "nalg/tensor.hpp"

namespace nalg {

enum class IdentityKind { LeibnizRight, LeibnizLeft, Antisymmetric, Jacobi, Lie };

inline constexpr std::array<IdentityKind, 5> kAllIdentities = {
    IdentityKind::LeibnizRight, IdentityKind::LeibnizLeft, IdentityKind::Antisymmetric,
    IdentityKind::Jacobi, IdentityKind::Lie};

/// CLI spelling: leibniz-right, leibniz-left, antisym, jacobi, lie.
std::string_view to_string(IdentityKind kind);
std::optional<IdentityKind> parse_identity_kind(std::string_view text);

/// Verdict of an identity check. On failure `witness` holds the 0-based basis
/// triple (pairs for Antisymmetric leave the third slot at -1) and
/// `residual` the nonzero value of the defining expression there.
template <Field S>
struct IdentityResult {
  bool holds = true;
  std::array<int, 3> witness{-1, -1, -1};
  Vector<S> residual;
};

enum class SeriesKind { LowerCentral, Derived };
enum class Side { Left, Right, TwoSided };

/// Bilinear product of coordinate vectors.
template <Field S>
Vector<S> product(const StructureTensor<S>& a, const Vector<S>& x, const Vector<S>& y) {
  const std::size_t n = a.dim();
  if (x.size() != n || y.size() != n) throw DimensionMismatch("product: vector length differs from algebra dimension");
  Vector<S> out(n, S::zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const S w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const S& c = a(i, j, k);
        if (!c.is_zero()) out[k] += w * c;
      }
    }
  }
  return out;
}

/// Matrix of y -> x y (left multiplication by x).
template <Field S>
Matrix<S> left_mult_matrix(const StructureTensor<S>& a, const Vector<S>& x) {
  const std::size_t n = a.dim();
  if (x.size() != n) throw DimensionMismatch("left_mult_matrix: vector length differs from algebra dimension");
  Matrix<S> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!a(i, j, k).is_zero()) m(k, j) += x[i] * a(i, j, k);
      }
    }
  }
  return m;
}

/// Matrix of y -> y x (right multiplication by x).
template <Field S>
Matrix<S> right_mult_matrix(const StructureTensor<S>& a, const Vector<S>& x) {
  const std::size_t n = a.dim();
  if (x.size() != n) throw DimensionMismatch("right_mult_matrix: vector length differs from algebra dimension");
  Matrix<S> m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!a(i, j, k).is_zero()) m(k, i) += x[j] * a(i, j, k);
      }
    }
  }
  return m;
}

/// Matrix of phi_x : y -> y x + x y.
template <Field S>
Matrix<S> phi_matrix(const StructureTensor<S>& a, const Vector<S>& x) {
  return left_mult_matrix(a, x) + right_mult_matrix(a, x);
}

namespace detail {

template <Field S>
std::vector<Vector<S>> all_basis_products(const StructureTensor<S>& a) {
  const std::size_t n = a.dim();
  std::vector<Vector<S>> out;
  out.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.push_back(a.basis_product(i, j));
  }
  return out;
}

// e_i * v
template <Field S>
Vector<S> left_basis_times(const StructureTensor<S>& a, std::size_t i, const Vector<S>& v) {
  const std::size_t n = a.dim();
  Vector<S> out(n, S::zero());
  for (std::size_t b = 0; b < n; ++b) {
    if (v[b].is_zero()) continue;
    for (std::size_t k = 0; k < n; ++k) {
      if (!a(i, b, k).is_zero()) out[k] += v[b] * a(i, b, k);
    }
  }
  return out;
}

// v * e_j
template <Field S>
Vector<S> right_basis_times(const StructureTensor<S>& a, const Vector<S>& v, std::size_t j) {
  const std::size_t n = a.dim();
  Vector<S> out(n, S::zero());
  for (std::size_t b = 0; b < n; ++b) {
    if (v[b].is_zero()) continue;
    for (std::size_t k = 0; k < n; ++k) {
      if (!a(b, j, k).is_zero()) out[k] += v[b] * a(b, j, k);
    }
  }
  return out;
}

template <Field S>
Vector<S> combine(const Vector<S>& p, const Vector<S>& q, const Vector<S>& r, int sp, int sq, int sr) {
  Vector<S> out(p.size(), S::zero());
  for (std::size_t k = 0; k < p.size(); ++k) {
    S v = S::zero();
    if (sp != 0 && !p[k].is_zero()) v = sp > 0 ? v + p[k] : v - p[k];
    if (sq != 0 && !q[k].is_zero()) v = sq > 0 ? v + q[k] : v - q[k];
    if (sr != 0 && !r[k].is_zero()) v = sr > 0 ? v + r[k] : v - r[k];
    out[k] = v;
  }
  return out;
}

}  // namespace detail

/// Decides an identity on basis elements; by multilinearity this decides it
/// on the whole algebra. Triples are scanned in lexicographic order; the
/// antisymmetry scan visits pairs (i, j) with j <= i.
template <Field S>
IdentityResult<S> check_identity(const StructureTensor<S>& a, IdentityKind kind) {
  const std::size_t n = a.dim();
  IdentityResult<S> res;
  if (kind == IdentityKind::Lie) {
    res = check_identity(a, IdentityKind::Antisymmetric);
    return res.holds ? check_identity(a, IdentityKind::Jacobi) : res;
  }
  if (kind == IdentityKind::Antisymmetric) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        Vector<S> r = add(a.basis_product(i, j), a.basis_product(j, i));
        if (!is_zero_vector(r)) {
          res.holds = false;
          res.witness = {static_cast<int>(i), static_cast<int>(j), -1};
          res.residual = std::move(r);
          return res;
        }
      }
    }
    return res;
  }
  const auto prods = detail::all_basis_products(a);
  auto pr = [&](std::size_t i, std::size_t j) -> const Vector<S>& { return prods[i * n + j]; };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        Vector<S> r;
        switch (kind) {
          case IdentityKind::LeibnizRight:
            // x(yz) - (xy)z + (xz)y
            r = detail::combine(detail::left_basis_times(a, x, pr(y, z)), detail::right_basis_times(a, pr(x, y), z),
                                detail::right_basis_times(a, pr(x, z), y), 1, -1, 1);
            break;
          case IdentityKind::LeibnizLeft:
            // (xy)z - x(yz) + y(xz)
            r = detail::combine(detail::right_basis_times(a, pr(x, y), z), detail::left_basis_times(a, x, pr(y, z)),
                                detail::left_basis_times(a, y, pr(x, z)), 1, -1, 1);
            break;
          case IdentityKind::Jacobi:
            // x(yz) + y(zx) + z(xy)
            r = detail::combine(detail::left_basis_times(a, x, pr(y, z)), detail::left_basis_times(a, y, pr(z, x)),
                                detail::left_basis_times(a, z, pr(x, y)), 1, 1, 1);
            break;
          default:
            break;
        }
        if (!is_zero_vector(r)) {
          res.holds = false;
          res.witness = {static_cast<int>(x), static_cast<int>(y), static_cast<int>(z)};
          res.residual = std::move(r);
          return res;
        }
      }
    }
  }
  return res;
}

/// span{u v : u in U, v in V}
template <Field S>
Subspace<S> subspace_product(const StructureTensor<S>& a, const Subspace<S>& u, const Subspace<S>& v) {
  std::vector<Vector<S>> gens;
  const auto us = u.vectors();
  const auto vs = v.vectors();
  for (const auto& x : us) {
    for (const auto& y : vs) {
      auto p = product(a, x, y);
      if (!is_zero_vector(p)) gens.push_back(std::move(p));
    }
  }
  return Subspace<S>::span(gens, a.dim());
}

/// A^2 = span of all basis products.
template <Field S>
Subspace<S> square(const StructureTensor<S>& a) {
  return Subspace<S>::span(detail::all_basis_products(a), a.dim());
}

/// Lower central: A^1 = A, A^m = sum_{i+j=m} A^i A^j. Derived: A^(0) = A,
/// A^(m+1) = A^(m) A^(m). The list ends at the first zero term or, when the
/// series stalls, with a single copy of the stable term.
template <Field S>
std::vector<Subspace<S>> power_series(const StructureTensor<S>& a, SeriesKind kind) {
  const std::size_t n = a.dim();
  std::vector<Subspace<S>> terms{Subspace<S>::full(n)};
  if (kind == SeriesKind::Derived) {
    while (!terms.back().is_zero()) {
      auto next = subspace_product(a, terms.back(), terms.back());
      if (next == terms.back()) break;
      terms.push_back(std::move(next));
    }
    return terms;
  }
  // terms[m - 1] holds A^m. A plateau is followed for n extra steps before
  // the series is declared stable, since the convolution can in principle
  // resume shrinking after a repeat.
  std::size_t repeats = 0;
  while (!terms.back().is_zero() && repeats <= n) {
    const std::size_t m = terms.size() + 1;
    Subspace<S> next(n);
    for (std::size_t i = 1; i < m; ++i) {
      next = subspace_sum(next, subspace_product(a, terms[i - 1], terms[m - i - 1]));
    }
    repeats = next == terms.back() ? repeats + 1 : 0;
    terms.push_back(std::move(next));
  }
  while (terms.size() >= 2 && terms[terms.size() - 1] == terms[terms.size() - 2]) terms.pop_back();
  return terms;
}

template <Field S>
bool is_nilpotent(const StructureTensor<S>& a) {
  return power_series(a, SeriesKind::LowerCentral).back().is_zero();
}

template <Field S>
bool is_solvable(const StructureTensor<S>& a) {
  return power_series(a, SeriesKind::Derived).back().is_zero();
}

/// Right: {v : e_i v = 0 for all i}. Left: {v : v e_i = 0 for all i}.
template <Field S>
Subspace<S> annihilator(const StructureTensor<S>& a, Side side) {
  const std::size_t n = a.dim();
  std::vector<Vector<S>> rows;
  auto stack = [&](bool right) {
    for (std::size_t i = 0; i < n; ++i) {
      const Matrix<S> m = right ? left_mult_matrix(a, unit_vector<S>(n, i)) : right_mult_matrix(a, unit_vector<S>(n, i));
      for (std::size_t r = 0; r < n; ++r) {
        auto row = m.row(r);
        if (!is_zero_vector(row)) rows.push_back(std::move(row));
      }
    }
  };
  if (side != Side::Left) stack(true);
  if (side != Side::Right) stack(false);
  if (rows.empty()) return Subspace<S>::full(n);
  return solve_homogeneous(Matrix<S>::from_rows(rows, n));
}

/// Block tensor; cross products vanish.
template <Field S>
StructureTensor<S> direct_sum(const StructureTensor<S>& a, const StructureTensor<S>& b) {
  const std::size_t na = a.dim();
  StructureTensor<S> out(na + b.dim(), a.name() + "+" + b.name());
  for (const auto& e : a.nonzeros()) out.set(e.i, e.j, e.k, e.c);
  for (const auto& e : b.nonzeros()) out.set(na + e.i, na + e.j, na + e.k, e.c);
  return out;
}

/// Abelian algebra of dimension n.
template <Field S>
StructureTensor<S> abelian(std::size_t n) {
  return StructureTensor<S>(n, "a" + std::to_string(n));
}

/// (g * a)(x, y) = g(a(h x, h y)) with h = g^-1 supplied by the caller.
/// Column j of g holds the image of e_j.
template <Field S>
StructureTensor<S> transport_with_inverse(const StructureTensor<S>& a, const Matrix<S>& g, const Matrix<S>& h) {
  const std::size_t n = a.dim();
  if (g.rows() != n || g.cols() != n || h.rows() != n || h.cols() != n) {
    throw DimensionMismatch("basis change matrix does not match algebra dimension");
  }
  auto at = [n](std::size_t x, std::size_t y, std::size_t z) { return (x * n + y) * n + z; };
  // t1(i, b, c) = sum_a h(a, i) gamma(a, b, c)
  std::vector<S> t1(n * n * n, S::zero());
  for (std::size_t a0 = 0; a0 < n; ++a0) {
    for (std::size_t i = 0; i < n; ++i) {
      const S& hai = h(a0, i);
      if (hai.is_zero()) continue;
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          const S& g0 = a(a0, b, c);
          if (!g0.is_zero()) t1[at(i, b, c)] += hai * g0;
        }
      }
    }
  }
  // t2(i, j, c) = sum_b h(b, j) t1(i, b, c)
  std::vector<S> t2(n * n * n, S::zero());
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t j = 0; j < n; ++j) {
      const S& hbj = h(b, j);
      if (hbj.is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < n; ++c) {
          const S& v = t1[at(i, b, c)];
          if (!v.is_zero()) t2[at(i, j, c)] += hbj * v;
        }
      }
    }
  }
  StructureTensor<S> out(n, a.name());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t c = 0; c < n; ++c) {
        const S& v = t2[at(i, j, c)];
        if (v.is_zero()) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (!g(k, c).is_zero()) out.add(i, j, k, g(k, c) * v);
        }
      }
    }
  }
  return out;
}

/// g * a. Throws Singular when g is not invertible.
template <Field S>
StructureTensor<S> basis_change(const StructureTensor<S>& a, const Matrix<S>& g) {
  if (!g.is_square() || g.rows() != a.dim()) throw DimensionMismatch("basis change matrix does not match algebra dimension");
  return transport_with_inverse(a, g, invert(g));
}

/// Relabel basis vectors: old e_i becomes new e_{perm[i]}.
template <Field S>
StructureTensor<S> permute(const StructureTensor<S>& a, const std::vector<std::size_t>& perm) {
  if (perm.size() != a.dim()) throw DimensionMismatch("permutation length differs from algebra dimension");
  StructureTensor<S> out(a.dim(), a.name());
  for (const auto& e : a.nonzeros()) out.set(perm[e.i], perm[e.j], perm[e.k], e.c);
  return out;
}

/// Matrix of the relabeling used by permute(): column i is e_{perm[i]}.
template <Field S>
Matrix<S> permutation_matrix(const std::vector<std::size_t>& perm) {
  Matrix<S> m(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) m(perm[i], i) = S::one();
  return m;
}

}  // namespace nalg

#endif  // NALG_ALGEBRA_HPP
