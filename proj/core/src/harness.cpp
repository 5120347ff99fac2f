#include "nalg/harness.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "nalg/catalog.hpp"
#include "nalg/classify3.hpp"
#include "nalg/degeneration.hpp"
#include "nalg/invariants.hpp"
#include "nalg/witnesses.hpp"

namespace nalg::harness {

namespace {

using nlohmann::ordered_json;

constexpr std::uint64_t kLemmaSeed = 0x4c656d6d61ULL;
constexpr std::uint64_t kCaseSeed = 0x436173657331ULL;
constexpr std::uint64_t kPhiSeed = 0x506869ULL;

void add(Report& out, std::string id, std::string location, bool ok, std::string detail) {
  out.checks.push_back({std::move(id), std::move(location), ok ? Status::Pass : Status::Fail, std::move(detail)});
}

std::string vector_text(const Vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

std::string witness_text(const IdentityResult<Rational>& r) {
  std::string s = "fails at (";
  for (int w : r.witness) {
    if (w >= 0) s += (s.back() == '(' ? "" : ",") + std::to_string(w + 1);
  }
  return s + "), residual " + vector_text(r.residual);
}

std::string class_text(const std::optional<TwoGenClass>& c) { return c ? c->to_string() : "none"; }

/// Empty when the pair passes R1-R7, otherwise the violated rule names.
std::string semicontinuity(const AlgebraQ& source, const AlgebraQ& limit) {
  const auto rep = obstructions(fingerprint(source), fingerprint(limit));
  std::string s;
  for (const auto& v : rep.violated) s += (s.empty() ? "" : ",") + v.rule_name;
  return s;
}

struct AlphaCase {
  std::string name;
  std::optional<Rational> alpha;
};

std::vector<AlphaCase> identity_cases() {
  std::vector<AlphaCase> out;
  for (const auto& e : catalog::entries()) {
    if (!e.asserted) continue;
    if (e.name == "L4") {
      for (const Rational& a : {Rational(0), Rational(1), Rational(1, 4), Rational(2)}) out.push_back({e.name, a});
    } else if (e.name == "L4_thm3") {
      out.push_back({e.name, Rational(1, 4)});
    } else if (e.name == "g1") {
      out.push_back({e.name, Rational(2)});
    } else {
      out.push_back({e.name, std::nullopt});
    }
  }
  return out;
}

AlgebraQ random_tensor(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-3, 3);
  AlgebraQ a(n, "random");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) a.set(i, j, k, entry(rng));
    }
  }
  return a;
}

std::array<std::size_t, 3> random_triple(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  return {idx[0], idx[1], idx[2]};
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "Pass";
    case Status::Fail: return "Fail";
    case Status::ExternalCitation: return "ExternalCitation";
  }
  return "?";
}

std::size_t Report::count(Status s) const {
  std::size_t c = 0;
  for (const auto& ch : checks) c += ch.status == s ? 1 : 0;
  return c;
}

const Check* Report::find(const std::string& id) const {
  for (const auto& ch : checks) {
    if (ch.id == id) return &ch;
  }
  return nullptr;
}

std::string Report::to_json(int indent) const {
  ordered_json doc;
  ordered_json arr = ordered_json::array();
  for (const auto& ch : checks) {
    ordered_json c;
    c["id"] = ch.id;
    c["paper_location"] = ch.paper_location;
    c["status"] = harness::to_string(ch.status);
    c["detail"] = ch.detail;
    arr.push_back(std::move(c));
  }
  doc["checks"] = std::move(arr);
  ordered_json summary;
  summary["total"] = checks.size();
  summary["pass"] = count(Status::Pass);
  summary["fail"] = count(Status::Fail);
  summary["external_citation"] = count(Status::ExternalCitation);
  doc["summary"] = std::move(summary);
  return doc.dump(indent);
}

Options default_options() {
  Options o;
  o.make = [](const std::string& name, std::size_t n, const std::optional<Rational>& alpha) {
    return catalog::make(name, n, alpha);
  };
  return o;
}

void check_identities(const Options& opts, Report& out) {
  constexpr std::size_t n = 5;
  for (const auto& c : identity_cases()) {
    const auto& entry = catalog::entry(c.name);
    const AlgebraQ a = opts.make(c.name, n, c.alpha);
    const auto r = check_identity(a, *entry.asserted);
    const std::string label = catalog::display_name(c.name, n, c.alpha);
    add(out, "a.identity." + label, entry.source, r.holds,
        std::string(nalg::to_string(*entry.asserted)) + (r.holds ? " holds" : " " + witness_text(r)));
  }
}

void check_example_families(const Options& opts, Report& out) {
  struct Case {
    std::string id;
    AlgebraQ source;
    DegenerationFamily family;
    AlgebraQ target;
  };
  const Rational quarter(1, 4);
  std::vector<Case> cases;
  cases.push_back({"b.example1.family1", opts.make("n3minus_lambda2", 5, std::nullopt), witness::n3minus_lambda2_family(),
                   opts.make("L4", 5, quarter)});
  cases.push_back({"b.example1.family2", opts.make("lambda2_lambda2", 4, std::nullopt), witness::lambda2_lambda2_family(),
                   opts.make("L5", 4, std::nullopt)});
  cases.push_back({"b.example1.family3", opts.make("lambda2_pminus", 6, std::nullopt), witness::lambda2_pminus_family(6),
                   opts.make("L4", 6, quarter)});
  for (const auto& c : cases) {
    try {
      const auto v = verify_degeneration(c.source, c.family, c.target);
      const auto got = classify_algebra(v.limit);
      const auto want = classify_algebra(c.target);
      bool ok = v.kind == Verification::Kind::ExactMatch ||
                (v.kind == Verification::Kind::FingerprintMatch && got && want && *got == *want);
      std::string detail = c.source.name() + " -> " + c.target.name() + ": " + to_string(v.kind) + "; limit " +
                           v.limit.table() + "; class " + class_text(got) + " vs " + class_text(want);
      if (v.kind == Verification::Kind::Mismatch) {
        detail += "; first difference at (" + std::to_string(v.first_difference[0]) + "," +
                  std::to_string(v.first_difference[1]) + "," + std::to_string(v.first_difference[2]) + ")";
      }
      const std::string broken = semicontinuity(c.source, v.limit);
      if (!broken.empty()) {
        ok = false;
        detail += "; semicontinuity violated: " + broken;
      }
      add(out, c.id, "Example 1", ok, detail);
    } catch (const Error& e) {
      add(out, c.id, "Example 1", false, e.what());
    }
  }
}

void check_lemma(const Options& opts, Report& out) {
  constexpr std::size_t n = 5;
  std::mt19937_64 rng(kLemmaSeed);
  std::map<std::string, std::size_t> labels;
  std::size_t bad = 0;
  std::string first_bad;
  for (std::size_t s = 0; s < opts.lemma_samples; ++s) {
    AlgebraQ a(n);
    std::array<std::size_t, 3> idx{};
    do {
      a = random_tensor(n, rng);
      idx = random_triple(n, rng);
    } while (lemma_excluded(read_hypothesis(a, idx[0], idx[1], idx[2]).tuple));
    try {
      const auto res = lemma_degenerate(a, idx[0], idx[1], idx[2]);
      const bool good = res.label.label == TwoGenClass::Label::L4 || res.label.label == TwoGenClass::Label::L5;
      ++labels[res.label.label == TwoGenClass::Label::L4 ? "L4" : res.label.to_string()];
      if (!good) {
        ++bad;
        if (first_bad.empty()) first_bad = "sample " + std::to_string(s) + " gave " + res.label.to_string();
      }
    } catch (const Error& e) {
      ++bad;
      if (first_bad.empty()) first_bad = "sample " + std::to_string(s) + ": " + e.what();
    }
  }
  std::string detail = std::to_string(opts.lemma_samples - bad) + "/" + std::to_string(opts.lemma_samples) +
                       " labels in {L4, L5};";
  for (const auto& [label, count] : labels) detail += " " + label + "=" + std::to_string(count);
  if (!first_bad.empty()) detail += "; " + first_bad;
  add(out, "c.lemma.random", "Lemma 1", bad == 0, detail);

  std::uniform_int_distribution<int> small(-3, 3);
  std::uniform_int_distribution<int> nonzero(1, 3);
  for (const std::string family : {"antisymmetric", "rank_one"}) {
    std::size_t rejected = 0;
    for (std::size_t s = 0; s < opts.lemma_excluded_samples; ++s) {
      AlgebraQ a = random_tensor(n, rng);
      const auto idx = random_triple(n, rng);
      const auto [i, j, k] = idx;
      const Rational b = small(rng);
      if (family == "antisymmetric") {
        a.set(i, i, k, 0);
        a.set(i, j, k, b);
        a.set(j, i, k, -b);
        a.set(j, j, k, 0);
      } else {
        const Rational d = Rational(nonzero(rng)) * (small(rng) < 0 ? Rational(-1) : Rational(1));
        a.set(i, i, k, d);
        a.set(i, j, k, b);
        a.set(j, i, k, b);
        a.set(j, j, k, b * b / d);
      }
      try {
        (void)lemma_degenerate(a, i, j, k);
      } catch (const HypothesisViolated&) {
        ++rejected;
      }
    }
    add(out, "c.lemma.excluded." + family, "Lemma 1", rejected == opts.lemma_excluded_samples,
        std::to_string(rejected) + "/" + std::to_string(opts.lemma_excluded_samples) + " rejected as HypothesisViolated");
  }
}

void check_invariant_table(const Options& opts, Report& out) {
  const std::string loc = "Theorem 3 proof";
  for (std::size_t n : {4, 5, 6}) {
    const std::string suffix = ".n" + std::to_string(n);
    auto rann = [&](const std::string& name, const std::optional<Rational>& alpha) {
      return annihilator(opts.make(name, n, alpha), Side::Right).dim();
    };
    auto expect = [&](const std::string& id, std::size_t got, std::size_t want) {
      add(out, id + suffix, loc, got == want, "got " + std::to_string(got) + ", expected " + std::to_string(want));
    };
    expect("d.rann.L5", rann("L5", std::nullopt), n - 2);
    expect("d.rann.L4(1)", rann("L4", Rational(1)), n - 2);
    expect("d.rann.L4(1/4)", rann("L4", Rational(1, 4)), n - 2);
    expect("d.rann.rn", rann("rn", std::nullopt), n - 1);
    expect("d.der.L4(0)", derivation_dimension(opts.make("L4", n, Rational(0))), n * n - 3 * n + 4);
    expect("d.der.rn", derivation_dimension(opts.make("rn", n, std::nullopt)), (n - 1) * (n - 1));
  }
}

void check_separations(const Options& opts, Report& out) {
  const std::string loc = "Theorem 3 proof";
  struct Sep {
    std::string source;
    std::optional<Rational> source_alpha;
    std::string target;
    std::optional<Rational> target_alpha;
    std::string rule;
  };
  const std::vector<Sep> seps = {
      {"L4", Rational(0), "rn", std::nullopt, "R1:"},  {"L4", Rational(1), "rn", std::nullopt, "R1:"},
      {"L5", std::nullopt, "rn", std::nullopt, "R1:"}, {"rn", std::nullopt, "L4", Rational(1), "R4:"},
      {"rn", std::nullopt, "L5", std::nullopt, "R4:"}, {"rn", std::nullopt, "L4", Rational(0), "R3:"},
  };
  for (std::size_t n : {4, 5, 6}) {
    for (const auto& s : seps) {
      const auto src = opts.make(s.source, n, s.source_alpha);
      const auto tgt = opts.make(s.target, n, s.target_alpha);
      const auto rep = obstructions(fingerprint(src), fingerprint(tgt));
      const bool ok = rep.violates(s.rule);
      const std::string id = "e." + catalog::display_name(s.source, n, s.source_alpha) + "->" +
                             catalog::display_name(s.target, n, s.target_alpha);
      add(out, id, loc, ok, "expected " + s.rule.substr(0, s.rule.size() - 1) + "; report " + rep.to_json());
    }
  }
  // L4(alpha) and L5 are separated in the literature, not by these rules.
  constexpr std::size_t n = 5;
  const auto l4 = fingerprint(opts.make("L4", n, Rational(1)));
  const auto l5 = fingerprint(opts.make("L5", n, std::nullopt));
  const auto forward = obstructions(l4, l5);
  const auto backward = obstructions(l5, l4);
  out.checks.push_back({"e.L4-L5.external", loc, Status::ExternalCitation,
                        "separation cited from the literature; rules give L4(1)->L5 " + forward.to_json() +
                            ", L5->L4(1) " + backward.to_json()});
}

void check_nilpotent_cases(const Options& opts, Report& out) {
  std::mt19937_64 rng(kCaseSeed);
  const Rational quarter(1, 4);
  for (std::size_t n : {5, 6, 7}) {
    const std::string suffix = ".n" + std::to_string(n);
    const std::size_t k = n - 2;
    struct Tally {
      std::size_t good = 0;
      std::string first_bad;
      void record(bool ok, std::size_t sample, const std::string& why) {
        if (ok) {
          ++good;
        } else if (first_bad.empty()) {
          first_bad = "sample " + std::to_string(sample) + ": " + why;
        }
      }
    };
    auto finish = [&](const std::string& id, const std::string& loc, const Tally& t, const std::string& claim) {
      std::string detail = std::to_string(t.good) + "/" + std::to_string(opts.case_samples) + " " + claim;
      if (!t.first_bad.empty()) detail += "; " + t.first_bad;
      add(out, id + suffix, loc, t.good == opts.case_samples, detail);
    };
    auto run = [&](auto&& body, Tally& t, std::size_t s) {
      try {
        body();
      } catch (const Error& e) {
        t.record(false, s, e.what());
      }
    };

    Tally lie;
    const auto lie_family = witness::square_line_lie_family(n);
    const auto want_l4 = TwoGenClass::l4(quarter);
    for (std::size_t s = 0; s < opts.case_samples; ++s) {
      run(
          [&] {
            const auto src = witness::square_line_lie_instance(n, rng);
            const auto limit = limit_algebra(transport(src, lie_family));
            const auto cls = classify_algebra(limit);
            const std::string broken = semicontinuity(src, limit);
            lie.record(cls && *cls == want_l4 && broken.empty(), s,
                       "class " + class_text(cls) + (broken.empty() ? "" : ", violates " + broken));
          },
          lie, s);
    }
    finish("f.case1.1.1", "Theorem 4 proof, Case 1.1.1", lie, "limits classify as L4(1/4)");

    Tally nonlie;
    const auto nonlie_family = witness::square_line_nonlie_family(n);
    for (std::size_t s = 0; s < opts.case_samples; ++s) {
      run(
          [&] {
            const auto src = witness::square_line_nonlie_instance(n, rng);
            const auto limit = limit_algebra(transport(src, nonlie_family));
            const auto cls = classify_algebra(limit);
            const std::string broken = semicontinuity(src, limit);
            nonlie.record(cls && cls->label == TwoGenClass::Label::L5 && broken.empty(), s,
                          "class " + class_text(cls) + (broken.empty() ? "" : ", violates " + broken));
          },
          nonlie, s);
    }
    finish("f.case1.1.2", "Theorem 4 proof, Case 1.1.2", nonlie, "limits classify as L5");

    Tally split;
    Tally chain;
    const auto split_family = witness::split_squares_family(n);
    const auto split_target = fingerprint(opts.make("lambda2_lambda2", n, std::nullopt));
    const auto relabel = DegenerationFamily::constant(permutation_matrix<Rational>(witness::split_squares_relabeling(n)));
    const auto example = witness::lambda2_lambda2_family(n);
    const DegenerationFamily outer{DegenerationFamily::Given::Direct, example.g() * relabel.g()};
    const auto composite = compose(outer, split_family);
    const auto l5 = opts.make("L5", n, std::nullopt);
    for (std::size_t s = 0; s < opts.case_samples; ++s) {
      const auto src = witness::split_squares_instance(n, rng);
      run(
          [&] {
            const auto limit = limit_algebra(transport(src, split_family));
            const std::string broken = semicontinuity(src, limit);
            split.record(fingerprint(limit) == split_target && broken.empty(), s,
                         "limit " + limit.table() + (broken.empty() ? "" : ", violates " + broken));
          },
          split, s);
      run(
          [&] {
            const auto stage = limit_algebra(transport(src, split_family));
            const auto sequential = limit_algebra(transport(stage, outer));
            const auto single = limit_algebra(transport(src, composite));
            const auto v = match_target(single, l5);
            const std::string broken = semicontinuity(src, single);
            chain.record(sequential == single && v.matched() && broken.empty(), s,
                         "sequential " + sequential.table() + ", composite " + single.table() + ", " +
                             to_string(v.kind) + (broken.empty() ? "" : ", violates " + broken));
          },
          chain, s);
    }
    finish("f.case1.2.3", "Theorem 4 proof, Case 1.2.3", split, "limits fingerprint-equal to lambda2+lambda2+a");
    finish("f.case1.2.3.chain", "Theorem 4 proof, Case 1.2.3 and Example 1", chain,
           "composite limits equal sequential limits and match L5+a");

    Tally mixed;
    const auto mixed_family = witness::mixed_products_family(n, k);
    const auto mixed_target = witness::mixed_products_limit(n, k);
    for (std::size_t s = 0; s < opts.case_samples; ++s) {
      run(
          [&] {
            const auto src = witness::mixed_products_instance(n, rng);
            const auto limit = limit_algebra(transport(src, mixed_family));
            const std::string broken = semicontinuity(src, limit);
            mixed.record(limit == mixed_target && broken.empty(), s,
                         "limit " + limit.table() + (broken.empty() ? "" : ", violates " + broken));
          },
          mixed, s);
    }
    finish("f.case1.2.4", "Theorem 4 proof, Case 1.2.4", mixed,
           "limits equal e1e1=e" + std::to_string(k + 1) + ", e2e3=-e3e2=e" + std::to_string(k + 2) +
               " (weight 6 on e" + std::to_string(k + 2) + ")");

    // i = 1 subcase only; the i != 1 subcase prints the same products.
    Tally chain_sq;
    for (std::size_t s = 0; s < opts.case_samples; ++s) {
      run(
          [&] {
            const bool opposite = s % 2 == 1;
            const auto src = witness::square_chain_instance(n, rng, opposite);
            AlgebraQ a = src;
            std::string normal_ok;
            if (opposite) {
              // e_{k+1}' = e_{k+1} - e_{k+2}
              auto h = Matrix<Rational>::identity(n);
              h(k + 1, k) = Rational(-1);
              a = basis_change(src, invert(h));
              if (a(0, 0, k) != Rational(1) || a(0, 0, k + 1) != Rational(1) || a(0, k, k + 1) != Rational(1) ||
                  a(k, 0, k + 1) != Rational(-1)) {
                normal_ok = "normal form " + a.table();
              }
            }
            const auto res = lemma_degenerate(a, 0, k, k + 1);
            const std::string broken = semicontinuity(src, res.limit);
            const bool labeled = res.label.label == TwoGenClass::Label::L4 || res.label.label == TwoGenClass::Label::L5;
            chain_sq.record(labeled && normal_ok.empty() && broken.empty(), s,
                            "class " + res.label.to_string() + (normal_ok.empty() ? "" : ", " + normal_ok) +
                                (broken.empty() ? "" : ", violates " + broken));
          },
          chain_sq, s);
    }
    finish("f.case1.2.5", "Theorem 4 proof, Case 1.2.5", chain_sq,
           "lemma on (e1, e" + std::to_string(k + 1) + ", e" + std::to_string(k + 2) + ") gives L4 or L5");

    Tally anti;
    const auto anti_family = witness::antisymmetric_family(n);
    const auto n52 = opts.make("n52", n, std::nullopt);
    const auto n52_fp = fingerprint(n52);
    for (std::size_t s = 0; s < opts.case_samples; ++s) {
      run(
          [&] {
            const auto src = witness::antisymmetric_instance(n, rng);
            const auto limit = limit_algebra(transport(src, anti_family));
            // e2' = e2 - c5 e1, e3' = e3 + c4 e1 removes e2e3 = c4 e4 + c5 e5.
            const Rational c4 = limit(1, 2, 3);
            const Rational c5 = limit(1, 2, 4);
            auto h = Matrix<Rational>::identity(n);
            h(0, 1) = -c5;
            h(0, 2) = c4;
            const auto normal = transport_with_inverse(limit, invert(h), h);
            const std::string broken = semicontinuity(src, limit);
            anti.record(fingerprint(limit) == n52_fp && normal == n52 && broken.empty(), s,
                        "limit " + limit.table() + ", normalized " + normal.table() +
                            (broken.empty() ? "" : ", violates " + broken));
          },
          anti, s);
    }
    finish("f.case2", "Theorem 4 proof, Case 2", anti, "limits fingerprint-equal to n52+a and equal after basis change");
  }
}

void check_phi(const Options& opts, Report& out) {
  constexpr std::size_t n = 5;
  constexpr std::size_t samples = 100;
  std::mt19937_64 rng(kPhiSeed);
  std::uniform_int_distribution<int> coord(-5, 5);
  for (const auto& c : identity_cases()) {
    const auto kind = *catalog::entry(c.name).asserted;
    if (kind != IdentityKind::LeibnizRight && kind != IdentityKind::Lie) continue;
    const AlgebraQ a = opts.make(c.name, n, c.alpha);
    const auto rann = annihilator(a, Side::Right);
    std::size_t good = 0;
    std::string first_bad;
    for (std::size_t s = 0; s < samples; ++s) {
      Vector<Rational> x(n);
      for (auto& v : x) v = coord(rng);
      const auto phi = phi_matrix(a, x);
      bool ok = rann.contains(product(a, x, x));
      for (std::size_t j = 0; j < n && ok; ++j) ok = rann.contains(phi.column(j));
      if (ok) {
        ++good;
      } else if (first_bad.empty()) {
        first_bad = "; x = " + vector_text(x) + " escapes the right annihilator";
      }
    }
    add(out, "g.phi." + catalog::display_name(c.name, n, c.alpha), "Section 2.1", good == samples,
        std::to_string(good) + "/" + std::to_string(samples) + " samples with phi_x(A) and xx in rann" + first_bad);
  }
}

Report verify_paper(const Options& opts) {
  Report r;
  check_identities(opts, r);
  check_example_families(opts, r);
  check_lemma(opts, r);
  check_invariant_table(opts, r);
  check_separations(opts, r);
  check_nilpotent_cases(opts, r);
  check_phi(opts, r);
  return r;
}

}  // namespace nalg::harness
