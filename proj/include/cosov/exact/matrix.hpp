#pragma once

#include "cosov/errors.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace cosov {

/// Dense matrix over an exact field, stored row-major.
template <class Field>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Field(0)) {}
  Matrix(std::initializer_list<std::initializer_list<Field>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DomainError("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Field(1);
    return m;
  }
  static Matrix diagonal(const std::vector<Field>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Field& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Field& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  template <class F>
  auto map(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const Field&>()))>;
    Matrix<Out> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product: inner dimensions differ");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Field& aik = a(i, k);
        if (aik == Field(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend Matrix operator*(const Field& c, Matrix m) {
    for (auto& x : m.data_) x = c * x;
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i != j && (*this)(i, j) != Field(0)) return false;
    return true;
  }
  bool is_lower_triangular() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != Field(0)) return false;
    return true;
  }

private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Field> data_;
};

template <class Field>
Field trace(const Matrix<Field>& m) {
  if (!m.is_square()) throw DomainError("trace of a non-square matrix");
  Field t(0);
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

/// Determinant by Bareiss fraction-free elimination.
template <class Field>
Field determinant(Matrix<Field> m) {
  if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Field(1);
  Field prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == Field(0)) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == Field(0)) ++r;
      if (r == n) return Field(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      m(i, k) = Field(0);
    }
    prev = m(k, k);
  }
  Field d = m(n - 1, n - 1);
  return negate ? Field(-d) : d;
}

/// Exact inverse by fraction-free Gauss-Jordan elimination on [M | I]; the left
/// block ends as a multiple of the identity by the determinant (up to sign),
/// the right block as the matching multiple of the inverse.
template <class Field>
Matrix<Field> inverse(const Matrix<Field>& a) {
  if (!a.is_square()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix<Field> m(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n + i) = Field(1);
  }
  Field prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == Field(0)) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == Field(0)) ++r;
      if (r == n) throw SingularMatrix("matrix is singular: determinant is zero (no pivot in column " +
                                       std::to_string(k + 1) + ")");
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(m(k, j), m(r, j));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = Field(0);
    }
    prev = m(k, k);
  }
  Matrix<Field> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = m(i, n + j) / m(i, i);
  return inv;
}

template <class Field>
bool is_invertible(const Matrix<Field>& m) {
  return m.is_square() && determinant(m) != Field(0);
}

}  // namespace cosov
