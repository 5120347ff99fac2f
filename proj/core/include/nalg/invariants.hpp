#ifndef NALG_INVARIANTS_HPP
#define NALG_INVARIANTS_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "nalg/algebra.hpp"

namespace nalg {

/// Dimension of Der(A) = {D : D(xy) = D(x)y + xD(y)}, from the n^3 x n^2
/// linear system in the entries of D.
std::size_t derivation_dimension(const AlgebraQ& a);

/// Exact isomorphism invariants of an algebra over Q.
struct Fingerprint {
  std::size_t dim = 0;
  std::size_t dim_der = 0;
  std::size_t dim_rann = 0;
  std::size_t dim_lann = 0;
  std::size_t dim_square = 0;
  std::vector<std::size_t> lcs_dims;
  std::vector<std::size_t> derived_dims;
  bool is_nilpotent = false;
  bool is_solvable = false;
  std::map<IdentityKind, bool> identity_flags;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;

  /// JSON object with a fixed key order.
  [[nodiscard]] std::string to_json(int indent = -1) const;
};

Fingerprint fingerprint(const AlgebraQ& a);

struct Violation {
  std::string rule_name;
  std::string source_value;
  std::string target_value;
};

enum class ObstructionVerdict { NoObstruction, Obstructed };

struct ObstructionReport {
  ObstructionVerdict verdict = ObstructionVerdict::NoObstruction;
  std::vector<Violation> violated;

  [[nodiscard]] bool obstructed() const { return verdict == ObstructionVerdict::Obstructed; }
  [[nodiscard]] bool violates(const std::string& rule_prefix) const;
  [[nodiscard]] std::string to_json(int indent = -1) const;
};

/// Necessary conditions for source -> target to be a degeneration. A
/// NoObstruction verdict says nothing about existence.
///
///   R1 source nilpotent  => target nilpotent
///   R2 source solvable   => target solvable
///   R3 dim Der(source)   <= dim Der(target)
///   R4 dim rann(source)  <= dim rann(target)
///   R5 dim lann(source)  <= dim lann(target)
///   R6 dim A^2(source)   >= dim A^2(target)
///   R7 identities of the source hold in the target
ObstructionReport obstructions(const Fingerprint& source, const Fingerprint& target);

}  // namespace nalg

#endif  // NALG_INVARIANTS_HPP
