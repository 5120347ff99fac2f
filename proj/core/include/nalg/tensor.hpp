#ifndef NALG_TENSOR_HPP
#define NALG_TENSOR_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nalg/matrix.hpp"

namespace nalg {

/// One nonzero structure constant: e_i e_j has coefficient c on e_k (0-based).
template <Field S>
struct TensorEntry {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  S c;
};

/// Structure constants gamma(i, j, k) of an n-dimensional algebra:
/// e_i e_j = sum_k gamma(i, j, k) e_k, indices 0-based.
///
/// Storage is dense (n is small in every workload here); absent products are
/// zero. Equality compares dimension and constants only, never the name.
template <Field S>
class StructureTensor {
 public:
  static constexpr FieldTag field_tag = FieldTraits<S>::tag;

  StructureTensor() = default;
  explicit StructureTensor(std::size_t n, std::string name = {})
      : n_(n), name_(std::move(name)), gamma_(n * n * n, S::zero()) {
    if (n == 0) throw DimensionMismatch("algebra dimension must be at least 1");
  }

  [[nodiscard]] std::size_t dim() const { return n_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const S& operator()(std::size_t i, std::size_t j, std::size_t k) const { return gamma_[index(i, j, k)]; }
  void set(std::size_t i, std::size_t j, std::size_t k, S c) { gamma_[index(i, j, k)] = std::move(c); }
  void add(std::size_t i, std::size_t j, std::size_t k, const S& c) { gamma_[index(i, j, k)] += c; }

  /// 1-based convenience used by the catalog: e_i e_j += c e_k.
  StructureTensor& with(std::size_t i, std::size_t j, std::size_t k, const S& c = S::one()) {
    add(i - 1, j - 1, k - 1, c);
    return *this;
  }

  /// Coefficient vector of e_i e_j.
  [[nodiscard]] Vector<S> basis_product(std::size_t i, std::size_t j) const {
    check(i, j, 0);
    return Vector<S>(gamma_.begin() + static_cast<std::ptrdiff_t>((i * n_ + j) * n_),
                     gamma_.begin() + static_cast<std::ptrdiff_t>((i * n_ + j + 1) * n_));
  }

  [[nodiscard]] bool is_abelian() const {
    for (const auto& c : gamma_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  /// Nonzero entries in lexicographic (i, j, k) order.
  [[nodiscard]] std::vector<TensorEntry<S>> nonzeros() const {
    std::vector<TensorEntry<S>> out;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        for (std::size_t k = 0; k < n_; ++k) {
          const S& c = (*this)(i, j, k);
          if (!c.is_zero()) out.push_back({i, j, k, c});
        }
      }
    }
    return out;
  }

  template <class F>
  [[nodiscard]] auto map(F&& f) const {
    using T = decltype(f(std::declval<const S&>()));
    StructureTensor<T> out(n_, name_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        for (std::size_t k = 0; k < n_; ++k) {
          const S& c = (*this)(i, j, k);
          if (!c.is_zero()) out.set(i, j, k, f(c));
        }
      }
    }
    return out;
  }

  friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
    return a.n_ == b.n_ && a.gamma_ == b.gamma_;
  }

  /// Human-readable multiplication table, 1-based, e.g. "e1e1=e3, e1e2=1/2*e3".
  [[nodiscard]] std::string table() const {
    std::string s;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        std::string rhs;
        for (std::size_t k = 0; k < n_; ++k) {
          const S& c = (*this)(i, j, k);
          if (c.is_zero()) continue;
          std::string coeff = c.to_string();
          std::string term = "e" + std::to_string(k + 1);
          if (coeff == "1") {
            rhs += (rhs.empty() ? "" : "+") + term;
          } else if (coeff == "-1") {
            rhs += "-" + term;
          } else {
            const bool paren = coeff.find_first_of("+-", 1) != std::string::npos;
            if (!rhs.empty() && coeff[0] != '-') rhs += "+";
            rhs += (paren ? "(" + coeff + ")" : coeff) + "*" + term;
          }
        }
        if (rhs.empty()) continue;
        if (!s.empty()) s += ", ";
        s += "e" + std::to_string(i + 1) + "e" + std::to_string(j + 1) + "=" + rhs;
      }
    }
    return s.empty() ? "(abelian)" : s;
  }

 private:
  void check(std::size_t i, std::size_t j, std::size_t k) const {
    if (i >= n_ || j >= n_ || k >= n_) throw DimensionMismatch("structure constant index out of range");
  }
  [[nodiscard]] std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
    check(i, j, k);
    return (i * n_ + j) * n_ + k;
  }

  std::size_t n_ = 0;
  std::string name_;
  std::vector<S> gamma_;
};

using AlgebraQ = StructureTensor<Rational>;
using AlgebraQt = StructureTensor<RatFunc>;

/// Embed a rational tensor into Q(t).
inline AlgebraQt lift(const AlgebraQ& a) {
  return a.map([](const Rational& c) { return RatFunc(c); });
}

}  // namespace nalg

#endif  // NALG_TENSOR_HPP
