#ifndef NALG_CATALOG_HPP
#define NALG_CATALOG_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nalg/algebra.hpp"

namespace nalg::catalog {

struct Entry {
  std::string name;
  std::size_t min_dim;
  bool needs_alpha;
  /// Identity the multiplication table is asserted to satisfy, if any.
  std::optional<IdentityKind> asserted;
  std::string source;
  std::string variant_note;
  std::string description;
};

/// All named algebras, in a fixed order.
const std::vector<Entry>& entries();

/// Throws UnknownName.
const Entry& entry(const std::string& name);

/// Builds the named algebra in dimension n (padding with an abelian summand
/// where the family has a fixed core). Throws UnknownName, DimTooSmall,
/// MissingParam (alpha required but absent) and ForbiddenParam (alpha given
/// to a family without a parameter, or g1 with alpha in {0, 1}).
AlgebraQ make(const std::string& name, std::size_t n, const std::optional<Rational>& alpha = std::nullopt);

/// Display name such as "L4(1/4)+a2".
std::string display_name(const std::string& name, std::size_t n, const std::optional<Rational>& alpha);

}  // namespace nalg::catalog

#endif  // NALG_CATALOG_HPP
