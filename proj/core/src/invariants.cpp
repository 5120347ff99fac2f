#include "nalg/invariants.hpp"

#include <json.hpp>

namespace nalg {

std::size_t derivation_dimension(const AlgebraQ& a) {
  const std::size_t n = a.dim();
  const auto var = [n](std::size_t p, std::size_t q) { return p * n + q; };
  std::vector<Vector<Rational>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vector<Rational> row(n * n);
        for (std::size_t c = 0; c < n; ++c) row[var(k, c)] += a(i, j, c);
        for (std::size_t p = 0; p < n; ++p) {
          row[var(p, i)] -= a(p, j, k);
          row[var(p, j)] -= a(i, p, k);
        }
        if (!is_zero_vector(row)) rows.push_back(std::move(row));
      }
    }
  }
  if (rows.empty()) return n * n;
  return n * n - rank(Matrix<Rational>::from_rows(rows, n * n));
}

Fingerprint fingerprint(const AlgebraQ& a) {
  Fingerprint f;
  f.dim = a.dim();
  f.dim_der = derivation_dimension(a);
  f.dim_rann = annihilator(a, Side::Right).dim();
  f.dim_lann = annihilator(a, Side::Left).dim();
  f.dim_square = square(a).dim();
  for (const auto& s : power_series(a, SeriesKind::LowerCentral)) f.lcs_dims.push_back(s.dim());
  for (const auto& s : power_series(a, SeriesKind::Derived)) f.derived_dims.push_back(s.dim());
  f.is_nilpotent = f.lcs_dims.back() == 0;
  f.is_solvable = f.derived_dims.back() == 0;
  for (auto kind : kAllIdentities) f.identity_flags[kind] = check_identity(a, kind).holds;
  return f;
}

std::string Fingerprint::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["dim"] = dim;
  j["dim_der"] = dim_der;
  j["dim_rann"] = dim_rann;
  j["dim_lann"] = dim_lann;
  j["dim_square"] = dim_square;
  j["lcs_dims"] = lcs_dims;
  j["derived_dims"] = derived_dims;
  j["is_nilpotent"] = is_nilpotent;
  j["is_solvable"] = is_solvable;
  nlohmann::ordered_json flags = nlohmann::ordered_json::object();
  for (auto kind : kAllIdentities) {
    auto it = identity_flags.find(kind);
    flags[std::string(to_string(kind))] = it != identity_flags.end() && it->second;
  }
  j["identity_flags"] = flags;
  return j.dump(indent);
}

bool ObstructionReport::violates(const std::string& rule_prefix) const {
  for (const auto& v : violated) {
    if (v.rule_name.rfind(rule_prefix, 0) == 0) return true;
  }
  return false;
}

std::string ObstructionReport::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["verdict"] = obstructed() ? "Obstructed" : "NoObstruction";
  j["violated"] = nlohmann::ordered_json::array();
  for (const auto& v : violated) {
    j["violated"].push_back({{"rule_name", v.rule_name}, {"source_value", v.source_value}, {"target_value", v.target_value}});
  }
  return j.dump(indent);
}

ObstructionReport obstructions(const Fingerprint& source, const Fingerprint& target) {
  if (source.dim != target.dim) {
    throw DimensionMismatch("obstructions: source has dimension " + std::to_string(source.dim) +
                            ", target has " + std::to_string(target.dim));
  }
  ObstructionReport r;
  auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
  auto num = [](std::size_t v) { return std::to_string(v); };
  if (source.is_nilpotent && !target.is_nilpotent) {
    r.violated.push_back({"R1:nilpotency", flag(source.is_nilpotent), flag(target.is_nilpotent)});
  }
  if (source.is_solvable && !target.is_solvable) {
    r.violated.push_back({"R2:solvability", flag(source.is_solvable), flag(target.is_solvable)});
  }
  if (source.dim_der > target.dim_der) {
    r.violated.push_back({"R3:dim_der", num(source.dim_der), num(target.dim_der)});
  }
  if (source.dim_rann > target.dim_rann) {
    r.violated.push_back({"R4:dim_rann", num(source.dim_rann), num(target.dim_rann)});
  }
  if (source.dim_lann > target.dim_lann) {
    r.violated.push_back({"R5:dim_lann", num(source.dim_lann), num(target.dim_lann)});
  }
  if (source.dim_square < target.dim_square) {
    r.violated.push_back({"R6:dim_square", num(source.dim_square), num(target.dim_square)});
  }
  for (auto kind : kAllIdentities) {
    const auto s = source.identity_flags.find(kind);
    const auto t = target.identity_flags.find(kind);
    const bool sv = s != source.identity_flags.end() && s->second;
    const bool tv = t != target.identity_flags.end() && t->second;
    if (sv && !tv) r.violated.push_back({"R7:identity:" + std::string(to_string(kind)), flag(sv), flag(tv)});
  }
  r.verdict = r.violated.empty() ? ObstructionVerdict::NoObstruction : ObstructionVerdict::Obstructed;
  return r;
}

}  // namespace nalg
