#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "superreal/gaussian.hpp"
#include "superreal/matrix.hpp"

namespace superreal {

inline mpq_class field_inverse(const mpq_class& q) {
  if (sgn(q) == 0) throw std::domain_error("division by zero");
  return mpq_class(1) / q;
}
inline GaussianRational field_inverse(const GaussianRational& z) { return z.inverse(); }

// Reduced row echelon form in place; returns the pivot columns.
template <class T>
std::vector<std::size_t> rref_in_place(Matrix<T>& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && is_zero(a(p, col))) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    T inv = field_inverse(a(row, col));
    for (std::size_t j = col; j < a.cols(); ++j)
      if (!is_zero(a(row, j))) a(row, j) = a(row, j) * inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || is_zero(a(r, col))) continue;
      T f = a(r, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        if (!is_zero(a(row, j))) a(r, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> a) {
  return rref_in_place(a).size();
}

// Basis of {x : a x = 0}.
template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> a) {
  std::vector<std::size_t> pivots = rref_in_place(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(a.cols());
    v[free] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Some solution of a x = b, if one exists.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side size mismatch");
  Matrix<T> aug(a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < a.rows(); ++i) aug(i, a.cols()) = b[i];
  std::vector<std::size_t> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<T> x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  if (!a.square()) throw std::invalid_argument("inverse of a non-square matrix");
  std::size_t n = a.rows();
  Matrix<T> aug(n, 2 * n);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < n; ++i) aug(i, n + i) = T(1);
  std::vector<std::size_t> pivots = rref_in_place(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
  return aug.block(0, n, n, n);
}

template <class T>
T determinant(Matrix<T> a) {
  if (!a.square()) throw std::invalid_argument("determinant of a non-square matrix");
  std::size_t n = a.rows();
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && is_zero(a(p, col))) ++p;
    if (p == n) return T(0);
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(col, j));
      det = -det;
    }
    det = det * a(col, col);
    T inv = field_inverse(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(a(r, col))) continue;
      T f = a(r, col) * inv;
      for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

// Coordinates with respect to a fixed set of independent column vectors.
template <class T>
class SpanCoordinates {
 public:
  SpanCoordinates() = default;
  // columns: n x k, independent columns.
  explicit SpanCoordinates(const Matrix<T>& columns) : basis_(columns) {
    Matrix<T> t = columns.transpose();
    std::vector<std::size_t> rows = rref_in_place(t);
    if (rows.size() != columns.cols()) throw std::invalid_argument("span basis is not independent");
    rows_ = rows;
    Matrix<T> square(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows.size(); ++j) square(i, j) = columns(rows[i], j);
    inv_ = inverse(square);
  }

  std::size_t dim() const { return basis_.cols(); }
  std::size_t ambient() const { return basis_.rows(); }

  // Coordinates of v, or nullopt if v is outside the span.
  std::optional<std::vector<T>> coordinates(const std::vector<T>& v) const {
    std::size_t k = rows_.size();
    std::vector<T> c(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (!is_zero(v[rows_[j]]) && !is_zero(inv_(i, j))) c[i] += inv_(i, j) * v[rows_[j]];
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
      T acc(0);
      for (std::size_t j = 0; j < k; ++j)
        if (!is_zero(c[j]) && !is_zero(basis_(r, j))) acc += basis_(r, j) * c[j];
      if (acc != v[r]) return std::nullopt;
    }
    return c;
  }

 private:
  Matrix<T> basis_;
  std::vector<std::size_t> rows_;
  Matrix<T> inv_;
};

}  // namespace superreal
