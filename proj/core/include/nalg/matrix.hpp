#ifndef NALG_MATRIX_HPP
#define NALG_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "nalg/errors.hpp"
#include "nalg/scalar.hpp"

namespace nalg {

template <Field S>
using Vector = std::vector<S>;

/// Dense row-major matrix over an exact field.
template <Field S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S::zero()) {}
  Matrix(std::initializer_list<std::initializer_list<S>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S::one();
    return m;
  }

  static Matrix diagonal(const Vector<S>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  /// Matrix whose rows are the given vectors (all of length `cols`).
  static Matrix from_rows(const std::vector<Vector<S>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionMismatch("row length differs from column count");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] Vector<S> row(std::size_t i) const {
    return Vector<S>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  [[nodiscard]] Vector<S> column(std::size_t j) const {
    Vector<S> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& x : data_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  template <class F>
  [[nodiscard]] auto map(F&& f) const {
    using T = decltype(f(std::declval<const S&>()));
    Matrix<T> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
        }
      }
    }
    return c;
  }

  friend Vector<S> operator*(const Matrix& a, const Vector<S>& v) {
    if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    Vector<S> out(a.rows_, S::zero());
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
      }
    }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  [[nodiscard]] Matrix scaled(const S& c) const {
    Matrix out = *this;
    for (auto& x : out.data_) x = x * c;
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  [[nodiscard]] std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i == 0 ? "[" : ", [";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j > 0) s += ", ";
        s += (*this)(i, j).to_string();
      }
      s += "]";
    }
    return s + "]";
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

template <Field S>
Vector<S> zero_vector(std::size_t n) {
  return Vector<S>(n, S::zero());
}

/// i-th standard basis vector (0-based).
template <Field S>
Vector<S> unit_vector(std::size_t n, std::size_t i) {
  Vector<S> v(n, S::zero());
  v.at(i) = S::one();
  return v;
}

template <Field S>
bool is_zero_vector(const Vector<S>& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

template <Field S>
Vector<S> add(Vector<S> a, const Vector<S>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <Field S>
Vector<S> scale(Vector<S> a, const S& c) {
  for (auto& x : a) x = x * c;
  return a;
}

/// Lift a rational matrix into a larger field (e.g. Q -> Q(t)).
template <Field T>
Matrix<T> lift(const Matrix<Rational>& m) {
  return m.map([](const Rational& x) { return T(x); });
}

}  // namespace nalg

#endif  // NALG_MATRIX_HPP
