#ifndef NALG_HARNESS_HPP
#define NALG_HARNESS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nalg/algebra.hpp"

namespace nalg::harness {

enum class Status { Pass, Fail, ExternalCitation };

std::string to_string(Status s);

struct Check {
  std::string id;
  std::string paper_location;
  Status status = Status::Pass;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;

  [[nodiscard]] std::size_t count(Status s) const;
  [[nodiscard]] bool ok() const { return count(Status::Fail) == 0; }
  [[nodiscard]] const Check* find(const std::string& id) const;
  /// Stable JSON: checks in execution order, then summary counts.
  [[nodiscard]] std::string to_json(int indent = 2) const;
};

using Maker = std::function<AlgebraQ(const std::string&, std::size_t, const std::optional<Rational>&)>;

struct Options {
  /// Catalog constructor; tests substitute a perturbed one.
  Maker make;
  std::size_t lemma_samples = 500;
  std::size_t lemma_excluded_samples = 200;
  std::size_t case_samples = 25;
};

Options default_options();

/// Replays every checkable claim: identities of catalog entries, the three
/// printed degenerations, the two-stage lemma on random tensors, the
/// invariant table, obstruction separations, the nilpotent-case families
/// and the phi_x facts.
Report verify_paper(const Options& opts = default_options());

// Individual groups, each appending to `out`.
void check_identities(const Options& opts, Report& out);
void check_example_families(const Options& opts, Report& out);
void check_lemma(const Options& opts, Report& out);
void check_invariant_table(const Options& opts, Report& out);
void check_separations(const Options& opts, Report& out);
void check_nilpotent_cases(const Options& opts, Report& out);
void check_phi(const Options& opts, Report& out);

}  // namespace nalg::harness

#endif  // NALG_HARNESS_HPP
