#include "nalg/degeneration.hpp"

#include <algorithm>
#include <numeric>

namespace nalg {

DegenerationFamily::DegenerationFamily(Given g, Matrix<RatFunc> m) : given(g), matrix(std::move(m)) {
  if (!matrix.is_square()) throw DimensionMismatch("degeneration family matrix must be square");
}

DegenerationFamily DegenerationFamily::constant(const Matrix<Rational>& g) {
  return {Given::Direct, lift<RatFunc>(g)};
}

Matrix<RatFunc> DegenerationFamily::g() const { return given == Given::Direct ? matrix : invert(matrix); }

Matrix<RatFunc> DegenerationFamily::g_inverse() const {
  return given == Given::Inverse ? matrix : invert(matrix);
}

DegenerationFamily scaling_family(std::size_t n, const std::vector<int>& exponents) {
  if (exponents.size() != n) throw DimensionMismatch("scaling_family: need one exponent per basis vector");
  Matrix<RatFunc> m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RatFunc::monomial(Rational(1), exponents[i]);
  return {DegenerationFamily::Given::Direct, std::move(m)};
}

AlgebraQt transport(const AlgebraQt& a, const DegenerationFamily& fam) {
  if (fam.dim() != a.dim()) {
    throw DimensionMismatch("family has dimension " + std::to_string(fam.dim()) + ", algebra has " +
                            std::to_string(a.dim()));
  }
  Matrix<RatFunc> g;
  Matrix<RatFunc> h;
  if (fam.given == DegenerationFamily::Given::Direct) {
    g = fam.matrix;
    h = invert(g);
  } else {
    h = fam.matrix;
    g = invert(h);
  }
  return transport_with_inverse(a, g, h);
}

AlgebraQt transport(const AlgebraQ& a, const DegenerationFamily& fam) { return transport(lift(a), fam); }

AlgebraQ limit_algebra(const AlgebraQt& a) {
  AlgebraQ out(a.dim(), a.name());
  for (const auto& e : a.nonzeros()) {
    const std::array<int, 3> where{static_cast<int>(e.i) + 1, static_cast<int>(e.j) + 1, static_cast<int>(e.k) + 1};
    if (e.c.valuation() < 0) {
      throw LimitDiverges("structure constant (" + std::to_string(where[0]) + "," + std::to_string(where[1]) + "," +
                              std::to_string(where[2]) + ") = " + e.c.to_string() + " has a pole at t = 0",
                          where);
    }
    out.set(e.i, e.j, e.k, limit_at_zero(e.c));
  }
  return out;
}

int pole_order(const Matrix<RatFunc>& m) {
  int worst = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) worst = std::max(worst, -m(i, j).valuation());
    }
  }
  return worst;
}

DegenerationFamily compose(const DegenerationFamily& outer, const DegenerationFamily& inner) {
  if (outer.dim() != inner.dim()) throw DimensionMismatch("compose: families differ in dimension");
  const Matrix<RatFunc> g_out = outer.g();
  const int power = 2 * pole_order(outer.g_inverse()) + pole_order(g_out) + 1;
  const Matrix<RatFunc> g_in = inner.g().map([power](const RatFunc& f) { return f.substitute_power(power); });
  return {DegenerationFamily::Given::Direct, g_out * g_in};
}

std::string to_string(Verification::Kind kind) {
  switch (kind) {
    case Verification::Kind::ExactMatch: return "ExactMatch";
    case Verification::Kind::FingerprintMatch: return "FingerprintMatch";
    case Verification::Kind::Mismatch: return "Mismatch";
  }
  return "?";
}

Verification match_target(const AlgebraQ& limit, const AlgebraQ& target) {
  if (limit.dim() != target.dim()) throw DimensionMismatch("match_target: dimensions differ");
  const std::size_t n = limit.dim();
  Verification v;
  v.limit = limit;
  if (limit == target) {
    v.kind = Verification::Kind::ExactMatch;
    v.permutation.resize(n);
    std::iota(v.permutation.begin(), v.permutation.end(), std::size_t{0});
    v.detail = "limit equals target";
    return v;
  }
  const Fingerprint fl = fingerprint(limit);
  const Fingerprint ft = fingerprint(target);
  if (fl == ft) {
    if (n <= 6) {
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      while (std::next_permutation(perm.begin(), perm.end())) {
        if (permute(limit, perm) == target) {
          v.kind = Verification::Kind::ExactMatch;
          v.permutation = perm;
          v.detail = "limit equals target after relabeling basis";
          return v;
        }
      }
    }
    v.kind = Verification::Kind::FingerprintMatch;
    v.detail = "fingerprints agree; limit: " + limit.table();
    return v;
  }
  for (std::size_t i = 0; i < n && v.first_difference[0] == 0; ++i) {
    for (std::size_t j = 0; j < n && v.first_difference[0] == 0; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (limit(i, j, k) != target(i, j, k)) {
          v.first_difference = {static_cast<int>(i) + 1, static_cast<int>(j) + 1, static_cast<int>(k) + 1};
          break;
        }
      }
    }
  }
  v.kind = Verification::Kind::Mismatch;
  v.detail = "first difference at (" + std::to_string(v.first_difference[0]) + "," +
             std::to_string(v.first_difference[1]) + "," + std::to_string(v.first_difference[2]) +
             "); limit fingerprint " + fl.to_json() + " vs target " + ft.to_json();
  return v;
}

Verification verify_degeneration(const AlgebraQ& source, const DegenerationFamily& fam, const AlgebraQ& target) {
  if (source.dim() != target.dim()) throw DimensionMismatch("verify_degeneration: source and target dimensions differ");
  return match_target(limit_algebra(transport(source, fam)), target);
}

LemmaHypothesis read_hypothesis(const AlgebraQ& a, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = a.dim();
  if (i >= n || j >= n || k >= n) throw DimensionMismatch("lemma indices out of range");
  if (i == j || i == k || j == k) throw DimensionMismatch("lemma indices must be distinct");
  return {i, j, k, {a(i, i, k), a(i, j, k), a(j, i, k), a(j, j, k)}};
}

bool lemma_excluded(const std::array<Rational, 4>& tuple) {
  const auto& [p, q, r, s] = tuple;
  const bool antisymmetric = p.is_zero() && s.is_zero() && q == -r;
  const bool symmetric_rank_one = q == r && p * s == q * q;
  return antisymmetric || symmetric_rank_one;
}

LemmaOutcome lemma_degenerate(const AlgebraQ& a, std::size_t i, std::size_t j, std::size_t k) {
  const LemmaHypothesis hyp = read_hypothesis(a, i, j, k);
  if (lemma_excluded(hyp.tuple)) {
    throw HypothesisViolated("tuple (" + hyp.tuple[0].to_string() + ", " + hyp.tuple[1].to_string() + ", " +
                             hyp.tuple[2].to_string() + ", " + hyp.tuple[3].to_string() + ") lies in an excluded set");
  }
  const std::size_t n = a.dim();
  std::vector<std::size_t> perm(n);
  perm[i] = 0;
  perm[j] = 1;
  perm[k] = 2;
  std::size_t next = 3;
  for (std::size_t x = 0; x < n; ++x) {
    if (x != i && x != j && x != k) perm[x] = next++;
  }
  LemmaOutcome out;
  out.permuted = permute(a, perm);

  std::vector<int> first(n, -2);
  first[0] = first[1] = -1;
  out.stage1 = limit_algebra(transport(out.permuted, scaling_family(n, first)));

  std::vector<int> second(n, -1);
  second[2] = -2;
  out.limit = limit_algebra(transport(out.stage1, scaling_family(n, second)));

  out.core = Matrix<Rational>(2, 2);
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) out.core(x, y) = out.limit(x, y, 2);
  }
  out.label = classify(out.core);
  return out;
}

}  // namespace nalg
