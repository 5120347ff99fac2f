#include "nalg/catalog.hpp"

#include <functional>

namespace nalg::catalog {

namespace {

using Builder = std::function<void(AlgebraQ&, std::size_t, const Rational&)>;

struct Spec {
  Entry entry;
  std::size_t core_dim;  // 0 when the table itself depends on n
  Builder build;
};

// Adds (j, i, k, -c) for every (i, j, k, c) with i != j.
void close_antisymmetric(AlgebraQ& a) {
  for (const auto& e : a.nonzeros()) {
    if (e.i != e.j) a.set(e.j, e.i, e.k, -e.c);
  }
}

const std::vector<Spec>& specs() {
  static const std::vector<Spec> table = [] {
    const auto lie = IdentityKind::Lie;
    const auto right = IdentityKind::LeibnizRight;
    const auto left = IdentityKind::LeibnizLeft;
    std::vector<Spec> t;
    t.push_back({{"abelian", 1, false, std::nullopt, "", "", "a_n: all products zero"}, 0,
                 [](AlgebraQ&, std::size_t, const Rational&) {}});
    t.push_back({{"pminus", 2, false, lie, "Theorem 1", "", "p_n^-: e1ei = ei, eie1 = -ei (2 <= i <= n)"}, 0,
                 [](AlgebraQ& a, std::size_t n, const Rational&) {
                   for (std::size_t i = 2; i <= n; ++i) a.with(1, i, i).with(i, 1, i, Rational(-1));
                 }});
    t.push_back({{"n3minus", 3, false, lie, "Theorem 1", "", "n_3^- + a_{n-3}: e1e2 = e3, e2e1 = -e3"}, 3,
                 [](AlgebraQ& a, std::size_t, const Rational&) { a.with(1, 2, 3).with(2, 1, 3, Rational(-1)); }});
    t.push_back({{"lambda2", 2, false, right, "Theorem 1", "", "lambda_2 + a_{n-2}: e1e1 = e2"}, 2,
                 [](AlgebraQ& a, std::size_t, const Rational&) { a.with(1, 1, 2); }});
    t.push_back({{"nu", 2, true, std::nullopt, "Theorem 1", "",
                  "nu_n(alpha): e1e1 = e1, e1ei = alpha ei, eie1 = (1 - alpha) ei (2 <= i <= n)"},
                 0, [](AlgebraQ& a, std::size_t n, const Rational& alpha) {
                   a.with(1, 1, 1);
                   for (std::size_t i = 2; i <= n; ++i) a.with(1, i, i, alpha).with(i, 1, i, Rational(1) - alpha);
                 }});
    t.push_back({{"n51", 5, false, lie, "Theorem 4",
                  "canonical: e1e2 = e5, e3e4 = e5 closed antisymmetrically; also printed as "
                  "'e1e3 = e5, e2e4 = e5' and as 'e1e3 = e5, e2e1 = e5'; a stray '2 <= i <= n' "
                  "on the first printing carries no index and is ignored",
                  "n_{5,1} + a_{n-5}: e1e2 = e5, e3e4 = e5 (antisymmetric)"},
                 5, [](AlgebraQ& a, std::size_t, const Rational&) {
                   a.with(1, 2, 5).with(3, 4, 5);
                   close_antisymmetric(a);
                 }});
    t.push_back({{"n52", 5, false, lie, "Theorem 2", "", "n_{5,2} + a_{n-5}: e1e2 = e4, e1e3 = e5 (antisymmetric)"}, 5,
                 [](AlgebraQ& a, std::size_t, const Rational&) {
                   a.with(1, 2, 4).with(1, 3, 5);
                   close_antisymmetric(a);
                 }});
    t.push_back({{"r2", 2, false, lie, "Theorem 2",
                  "printed as 'e1e1 = e2', which is not antisymmetric and repeats lambda_2; taken as the "
                  "two-dimensional non-abelian Lie algebra",
                  "r_2 + a_{n-2}: e1e2 = e2 (antisymmetric)"},
                 2, [](AlgebraQ& a, std::size_t, const Rational&) {
                   a.with(1, 2, 2);
                   close_antisymmetric(a);
                 }});
    t.push_back({{"g1", 3, true, lie, "Theorem 2", "",
                  "g_{n,1}(alpha): e1e2 = alpha e2, e1ei = ei (3 <= i <= n), antisymmetric, alpha not in {0, 1}"},
                 0, [](AlgebraQ& a, std::size_t n, const Rational& alpha) {
                   a.with(1, 2, 2, alpha);
                   for (std::size_t i = 3; i <= n; ++i) a.with(1, i, i);
                   close_antisymmetric(a);
                 }});
    t.push_back({{"g2", 3, false, lie, "Theorem 2",
                  "printed 'e1 e_i' has no right-hand side; completed as e1ei = ei (3 <= i <= n)",
                  "g_{n,2}: e1e2 = e2 + e3, e1ei = ei (3 <= i <= n), antisymmetric"},
                 0, [](AlgebraQ& a, std::size_t n, const Rational&) {
                   a.with(1, 2, 2).with(1, 2, 3);
                   for (std::size_t i = 3; i <= n; ++i) a.with(1, i, i);
                   close_antisymmetric(a);
                 }});
    t.push_back({{"L4", 3, true, right, "Theorem 4", "Theorem 3 prints the opposite table, available as L4_thm3",
                  "L_4(alpha) + a_{n-3}: e1e1 = e3, e1e2 = e3, e2e2 = alpha e3"},
                 3, [](AlgebraQ& a, std::size_t, const Rational& alpha) { a.with(1, 1, 3).with(1, 2, 3).with(2, 2, 3, alpha); }});
    t.push_back({{"L4_thm3", 3, true, right, "Theorem 3", "same class as L4 under classify3",
                  "L_4(alpha) + a_{n-3}: e1e1 = e3, e2e1 = e3, e2e2 = alpha e3"},
                 3, [](AlgebraQ& a, std::size_t, const Rational& alpha) { a.with(1, 1, 3).with(2, 1, 3).with(2, 2, 3, alpha); }});
    t.push_back({{"L5", 3, false, right, "Theorem 3", "", "L_5 + a_{n-3}: e1e1 = e3, e1e2 = e3, e2e1 = e3"}, 3,
                 [](AlgebraQ& a, std::size_t, const Rational&) { a.with(1, 1, 3).with(1, 2, 3).with(2, 1, 3); }});
    t.push_back({{"rn", 2, false, right, "Theorem 3", "", "r_n: eie1 = ei (2 <= i <= n)"}, 0,
                 [](AlgebraQ& a, std::size_t n, const Rational&) {
                   for (std::size_t i = 2; i <= n; ++i) a.with(i, 1, i);
                 }});
    t.push_back({{"elln", 2, false, left, "Remark 1", "", "l_n: e1ei = ei (2 <= i <= n)"}, 0,
                 [](AlgebraQ& a, std::size_t n, const Rational&) {
                   for (std::size_t i = 2; i <= n; ++i) a.with(1, i, i);
                 }});
    t.push_back({{"n3minus_lambda2", 5, false, right, "Example 1",
                  "basis as printed: the lambda_2 summand sits on x1, x2",
                  "x1x1 = x2, x3x4 = x5, x4x3 = -x5"},
                 5, [](AlgebraQ& a, std::size_t, const Rational&) { a.with(1, 1, 2).with(3, 4, 5).with(4, 3, 5, Rational(-1)); }});
    t.push_back({{"lambda2_lambda2", 4, false, right, "Example 1", "", "x1x1 = x2, x3x3 = x4"}, 4,
                 [](AlgebraQ& a, std::size_t, const Rational&) { a.with(1, 1, 2).with(3, 3, 4); }});
    t.push_back({{"lambda2_pminus", 4, false, right, "Example 1", "",
                  "x1x1 = x2, xix3 = xi, x3xi = -xi (4 <= i <= n)"},
                 0, [](AlgebraQ& a, std::size_t n, const Rational&) {
                   a.with(1, 1, 2);
                   for (std::size_t i = 4; i <= n; ++i) a.with(i, 3, i).with(3, i, i, Rational(-1));
                 }});
    return t;
  }();
  return table;
}

const Spec& find(const std::string& name) {
  for (const auto& s : specs()) {
    if (s.entry.name == name) return s;
  }
  throw UnknownName(name);
}

}  // namespace

const std::vector<Entry>& entries() {
  static const std::vector<Entry> out = [] {
    std::vector<Entry> e;
    for (const auto& s : specs()) e.push_back(s.entry);
    return e;
  }();
  return out;
}

const Entry& entry(const std::string& name) { return find(name).entry; }

std::string display_name(const std::string& name, std::size_t n, const std::optional<Rational>& alpha) {
  const Spec& s = find(name);
  std::string out = name;
  if (alpha) out += "(" + alpha->to_string() + ")";
  if (s.core_dim > 0 && n > s.core_dim) out += "+a" + std::to_string(n - s.core_dim);
  if (s.core_dim == 0 && name != "abelian") out += "[n=" + std::to_string(n) + "]";
  if (name == "abelian") out = "a" + std::to_string(n);
  return out;
}

AlgebraQ make(const std::string& name, std::size_t n, const std::optional<Rational>& alpha) {
  const Spec& s = find(name);
  if (n < s.entry.min_dim) {
    throw DimTooSmall(name + " needs dimension >= " + std::to_string(s.entry.min_dim) + ", got " + std::to_string(n));
  }
  if (s.entry.needs_alpha && !alpha) throw MissingParam(name + " needs --alpha");
  if (!s.entry.needs_alpha && alpha) throw ForbiddenParam(name + " takes no alpha");
  if (name == "g1" && (alpha->is_zero() || alpha->is_one())) {
    throw ForbiddenParam("g1 requires alpha not in {0, 1}");
  }
  AlgebraQ a(n, display_name(name, n, alpha));
  s.build(a, n, alpha.value_or(Rational()));
  return a;
}

}  // namespace nalg::catalog
