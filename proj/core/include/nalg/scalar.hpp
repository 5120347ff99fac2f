#ifndef NALG_SCALAR_HPP
#define NALG_SCALAR_HPP

#include <concepts>
#include <string>

#include "nalg/ratfunc.hpp"
#include "nalg/rational.hpp"

namespace nalg {

/// Exact field element usable as a matrix or tensor entry.
template <class S>
concept Field = std::regular<S> && requires(S a, const S& b) {
  { S::zero() } -> std::same_as<S>;
  { S::one() } -> std::same_as<S>;
  { b.is_zero() } -> std::convertible_to<bool>;
  { b.to_string() } -> std::convertible_to<std::string>;
  { a + b } -> std::same_as<S>;
  { a - b } -> std::same_as<S>;
  { a * b } -> std::same_as<S>;
  { a / b } -> std::same_as<S>;
  { -b } -> std::same_as<S>;
};

enum class FieldTag { Q, Qt };

template <Field S>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr FieldTag tag = FieldTag::Q;
  static Rational parse(std::string_view s) { return Rational::parse(s); }
};

template <>
struct FieldTraits<RatFunc> {
  static constexpr FieldTag tag = FieldTag::Qt;
  static RatFunc parse(std::string_view s) { return RatFunc::parse(s); }
};

inline const char* to_string(FieldTag tag) { return tag == FieldTag::Q ? "Q" : "Qt"; }

}  // namespace nalg

#endif  // NALG_SCALAR_HPP
