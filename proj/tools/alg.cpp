// alg: command-line front end for the nalg library.
//
// Machine-readable output goes to stdout as JSON, summaries to stderr.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nalg/catalog.hpp"
#include "nalg/classify3.hpp"
#include "nalg/harness.hpp"
#include "nalg/invariants.hpp"
#include "nalg/io.hpp"

namespace {

using nlohmann::ordered_json;
using namespace nalg;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

ordered_json algebra_json(const AlgebraQ& a) { return ordered_json::parse(io::write_algebra(a)); }

ordered_json vector_json(const Vector<Rational>& v) {
  ordered_json out = ordered_json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << '\n'; }

int input_error(const std::exception& e) {
  std::cerr << "error: " << e.what() << '\n';
  return kInputError;
}

AlgebraQ load_algebra(const std::string& path) { return io::parse_algebra(io::read_file(path)); }

Matrix<Rational> parse_matrix(const std::string& text) {
  std::vector<Vector<Rational>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find(';', start);
    const std::string row = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    Vector<Rational> values;
    std::size_t p = 0;
    while (p <= row.size()) {
      const auto comma = row.find(',', p);
      values.push_back(Rational::parse(row.substr(p, comma == std::string::npos ? std::string::npos : comma - p)));
      if (comma == std::string::npos) break;
      p = comma + 1;
    }
    rows.push_back(std::move(values));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  if (rows.size() != 2 || rows[0].size() != 2 || rows[1].size() != 2) {
    throw ParseError("--matrix expects \"a,b;c,d\"");
  }
  return Matrix<Rational>::from_rows(rows, 2);
}

int cmd_check(const std::string& path, const std::string& identity) {
  const auto kind = parse_identity_kind(identity);
  AlgebraQ a(1);
  try {
    if (!kind) throw ParseError("unknown identity '" + identity + "'");
    a = load_algebra(path);
  } catch (const Error& e) {
    return input_error(e);
  }
  const auto r = check_identity(a, *kind);
  ordered_json doc;
  doc["algebra"] = a.name();
  doc["identity"] = std::string(to_string(*kind));
  doc["holds"] = r.holds;
  if (!r.holds) {
    ordered_json w = ordered_json::array();
    for (int x : r.witness) {
      if (x >= 0) w.push_back(x + 1);
    }
    doc["witness"] = w;
    doc["residual"] = vector_json(r.residual);
  }
  emit(doc);
  std::cerr << identity << (r.holds ? " holds" : " fails") << '\n';
  return r.holds ? kOk : kNegative;
}

int cmd_invariants(const std::string& path) {
  AlgebraQ a(1);
  try {
    a = load_algebra(path);
  } catch (const Error& e) {
    return input_error(e);
  }
  ordered_json doc = ordered_json::parse(fingerprint(a).to_json());
  if (const auto cls = classify_algebra(a)) doc["classify3"] = cls->to_string();
  emit(doc);
  return kOk;
}

int cmd_degenerate(const std::string& source_path, const std::string& family_path, const std::string& target_path) {
  AlgebraQ source(1);
  DegenerationFamily fam;
  std::optional<AlgebraQ> target;
  try {
    source = load_algebra(source_path);
    fam = io::parse_family(io::read_file(family_path));
    if (!target_path.empty()) target = load_algebra(target_path);
    if (fam.dim() != source.dim()) throw DimensionMismatch("family and source dimensions differ");
    if (target && target->dim() != source.dim()) throw DimensionMismatch("source and target dimensions differ");
  } catch (const Error& e) {
    return input_error(e);
  }
  AlgebraQ limit(1);
  try {
    limit = limit_algebra(transport(source, fam));
  } catch (const LimitDiverges& e) {
    ordered_json doc;
    doc["verdict"] = "LimitDiverges";
    doc["where"] = e.where();
    doc["message"] = e.what();
    emit(doc);
    std::cerr << "limit diverges: " << e.what() << '\n';
    return kNegative;
  } catch (const Singular& e) {
    return input_error(e);
  }
  limit.set_name(source.name() + " limit");
  if (!target) {
    std::cout << io::write_algebra(limit) << '\n';
    std::cerr << limit.table() << '\n';
    return kOk;
  }
  const auto v = match_target(limit, *target);
  ordered_json doc;
  doc["verdict"] = to_string(v.kind);
  doc["limit"] = algebra_json(limit);
  if (v.kind == Verification::Kind::ExactMatch) {
    ordered_json perm = ordered_json::array();
    for (auto p : v.permutation) perm.push_back(p + 1);
    doc["permutation"] = perm;
  }
  if (v.kind == Verification::Kind::Mismatch) doc["first_difference"] = v.first_difference;
  doc["detail"] = v.detail;
  emit(doc);
  std::cerr << to_string(v.kind) << ": " << limit.table() << '\n';
  return v.matched() ? kOk : kNegative;
}

int cmd_obstruct(const std::string& source_path, const std::string& target_path) {
  ObstructionReport rep;
  try {
    rep = obstructions(fingerprint(load_algebra(source_path)), fingerprint(load_algebra(target_path)));
  } catch (const Error& e) {
    return input_error(e);
  }
  std::cout << rep.to_json(2) << '\n';
  std::cerr << (rep.obstructed() ? "Obstructed" : "NoObstruction") << '\n';
  return kOk;
}

int cmd_classify3(const std::string& text) {
  Matrix<Rational> m(2, 2);
  try {
    m = parse_matrix(text);
  } catch (const Error& e) {
    return input_error(e);
  }
  const auto cls = classify(m);
  ordered_json doc;
  doc["matrix"] = ordered_json::array({vector_json(m.row(0)), vector_json(m.row(1))});
  doc["class"] = cls.to_string();
  emit(doc);
  std::cerr << cls.to_string() << '\n';
  return kOk;
}

int cmd_lemma(const std::string& path, int i, int j, int k) {
  AlgebraQ a(1);
  try {
    a = load_algebra(path);
  } catch (const Error& e) {
    return input_error(e);
  }
  const auto n = static_cast<int>(a.dim());
  if (i < 1 || j < 1 || k < 1 || i > n || j > n || k > n || i == j || i == k || j == k) {
    std::cerr << "error: --i, --j, --k must be distinct indices in 1.." << n << '\n';
    return kInputError;
  }
  const auto hyp = read_hypothesis(a, i - 1, j - 1, k - 1);
  ordered_json doc;
  doc["indices"] = {i, j, k};
  doc["tuple"] = ordered_json::array();
  for (const auto& x : hyp.tuple) doc["tuple"].push_back(x.to_string());
  try {
    const auto res = lemma_degenerate(a, i - 1, j - 1, k - 1);
    doc["stage1"] = algebra_json(res.stage1);
    doc["limit"] = algebra_json(res.limit);
    doc["class"] = res.label.to_string();
    emit(doc);
    std::cerr << res.label.to_string() << '\n';
    return kOk;
  } catch (const HypothesisViolated& e) {
    doc["error"] = "HypothesisViolated";
    doc["message"] = e.what();
    emit(doc);
    std::cerr << "hypothesis violated: " << e.what() << '\n';
    return kNegative;
  }
}

int cmd_catalog(const std::string& name, std::size_t dim, const std::string& alpha_text) {
  try {
    std::optional<Rational> alpha;
    if (!alpha_text.empty()) alpha = Rational::parse(alpha_text);
    const auto a = catalog::make(name, dim, alpha);
    std::cout << io::write_algebra(a) << '\n';
    std::cerr << a.name() << ": " << a.table() << '\n';
    return kOk;
  } catch (const Error& e) {
    return input_error(e);
  }
}

int cmd_verify_paper(const std::string& report_path) {
  const auto rep = harness::verify_paper();
  const std::string text = rep.to_json(2);
  std::cout << text << '\n';
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "error: cannot write " << report_path << '\n';
      return kInputError;
    }
    out << text << '\n';
  }
  for (const auto& c : rep.checks) {
    if (c.status != harness::Status::Pass) {
      std::cerr << harness::to_string(c.status) << " " << c.id << ": " << c.detail << '\n';
    }
  }
  std::cerr << rep.count(harness::Status::Pass) << " pass, " << rep.count(harness::Status::Fail) << " fail, "
            << rep.count(harness::Status::ExternalCitation) << " external citation\n";
  return rep.ok() ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with nonassociative algebras given by structure constants"};
  app.require_subcommand(1);

  std::string file;
  std::string identity;
  auto* check = app.add_subcommand("check", "Check a polynomial identity on an algebra file");
  check->add_option("--identity", identity, "leibniz-right|leibniz-left|lie|antisym|jacobi")->required();
  check->add_option("file", file, "Algebra file")->required();

  auto* inv = app.add_subcommand("invariants", "Print the fingerprint of an algebra");
  inv->add_option("file", file, "Algebra file")->required();

  std::string source;
  std::string family;
  std::string target;
  auto* deg = app.add_subcommand("degenerate", "Transport along a family and take t -> 0");
  deg->add_option("--source", source, "Algebra file")->required();
  deg->add_option("--family", family, "Family file")->required();
  deg->add_option("--target", target, "Expected limit");

  auto* obs = app.add_subcommand("obstruct", "Apply the necessary conditions for a degeneration");
  obs->add_option("--source", source, "Algebra file")->required();
  obs->add_option("--target", target, "Algebra file")->required();

  std::string matrix;
  auto* cls = app.add_subcommand("classify3", "Classify a 2x2 coefficient matrix");
  cls->add_option("--matrix", matrix, "\"a,b;c,d\"")->required();

  int li = 0;
  int lj = 0;
  int lk = 0;
  auto* lemma = app.add_subcommand("lemma", "Two-stage scaling at basis indices i, j, k (1-based)");
  lemma->add_option("--source", source, "Algebra file")->required();
  lemma->add_option("--i", li)->required();
  lemma->add_option("--j", lj)->required();
  lemma->add_option("--k", lk)->required();

  std::string name;
  std::size_t dim = 0;
  std::string alpha;
  auto* cat = app.add_subcommand("catalog", "Write a named algebra as an algebra file");
  cat->add_option("name", name, "Catalog name")->required();
  cat->add_option("--dim", dim, "Dimension")->required();
  cat->add_option("--alpha", alpha, "Parameter p/q");

  std::string report;
  auto* verify = app.add_subcommand("verify-paper", "Replay every checkable claim");
  verify->add_option("--report", report, "Also write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*check) return cmd_check(file, identity);
    if (*inv) return cmd_invariants(file);
    if (*deg) return cmd_degenerate(source, family, target);
    if (*obs) return cmd_obstruct(source, target);
    if (*cls) return cmd_classify3(matrix);
    if (*lemma) return cmd_lemma(source, li, lj, lk);
    if (*cat) return cmd_catalog(name, dim, alpha);
    if (*verify) return cmd_verify_paper(report);
  } catch (const Error& e) {
    return input_error(e);
  }
  return kInputError;
}
