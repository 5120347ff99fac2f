#include "nalg/algebra.hpp"

namespace nalg {

std::string_view to_string(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::LeibnizRight: return "leibniz-right";
    case IdentityKind::LeibnizLeft: return "leibniz-left";
    case IdentityKind::Antisymmetric: return "antisym";
    case IdentityKind::Jacobi: return "jacobi";
    case IdentityKind::Lie: return "lie";
  }
  return "?";
}

std::optional<IdentityKind> parse_identity_kind(std::string_view text) {
  for (auto kind : kAllIdentities) {
    if (to_string(kind) == text) return kind;
  }
  return std::nullopt;
}

}  // namespace nalg
