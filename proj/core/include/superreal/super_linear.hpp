#pragma once

#include <functional>
#include <tuple>
#include <vector>

#include "superreal/gaussian.hpp"
#include "superreal/grassmann.hpp"
#include "superreal/linalg.hpp"
#include "superreal/matrix.hpp"

namespace superreal {

struct SuperDim {
  int even = 0;
  int odd = 0;
  int total() const { return even + odd; }
  int parity(int index) const { return index < even ? 0 : 1; }
  friend bool operator==(const SuperDim& a, const SuperDim& b) { return a.even == b.even && a.odd == b.odd; }
};

using ScalarMatrix = Matrix<GaussianRational>;
using GrassmannMatrix = Matrix<GrassmannElement>;

// (a b; c d)^st = (a^t, c^t; -b^t, d^t).
template <class T>
Matrix<T> supertranspose(const Matrix<T>& m, SuperDim dim) {
  Matrix<T> out(m.cols(), m.rows());
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) {
      const T& v = m(j, i);
      bool flip = dim.parity(static_cast<int>(i)) == 1 && dim.parity(static_cast<int>(j)) == 0;
      out(i, j) = flip ? T(-v) : v;
    }
  }
  return out;
}

template <class T>
T supertrace(const Matrix<T>& m, SuperDim dim) {
  if (!m.square() || static_cast<int>(m.rows()) != dim.total())
    throw std::invalid_argument("supertrace of a non-square matrix");
  T acc{};
  for (int i = 0; i < dim.total(); ++i) {
    if (dim.parity(i) == 0)
      acc += m(i, i);
    else
      acc -= m(i, i);
  }
  return acc;
}

// Parity of a homogeneous scalar supermatrix: 0 block-diagonal, 1 off-diagonal, -1 mixed, 0 for zero.
int matrix_parity(const ScalarMatrix& m, SuperDim dim);

ScalarMatrix elementary(SuperDim dim, int i, int j, const GaussianRational& c = 1);
ScalarMatrix superbracket(const ScalarMatrix& x, int px, const ScalarMatrix& y, int py);

// Block-diagonal and off-diagonal parts.
template <class T>
Matrix<T> diagonal_blocks(const Matrix<T>& m, SuperDim dim) {
  Matrix<T> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (dim.parity(static_cast<int>(i)) == dim.parity(static_cast<int>(j))) out(i, j) = m(i, j);
  return out;
}

template <class T>
Matrix<T> off_diagonal_blocks(const Matrix<T>& m, SuperDim dim) {
  Matrix<T> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (dim.parity(static_cast<int>(i)) != dim.parity(static_cast<int>(j))) out(i, j) = m(i, j);
  return out;
}

ScalarMatrix conj_matrix(const ScalarMatrix& m);

// Grassmann-coefficient matrices.
GrassmannMatrix grassmann_identity(GrassmannSpec spec, int n);
GrassmannMatrix lift(const ScalarMatrix& m, GrassmannSpec spec);
GrassmannMatrix tilde(const GrassmannMatrix& m);
GrassmannMatrix tilde_inverse(const GrassmannMatrix& m);
ScalarMatrix body(const GrassmannMatrix& m);
GrassmannMatrix scale(const GrassmannMatrix& m, const GrassmannElement& a);

// True if diagonal blocks have even entries and off-diagonal blocks odd entries.
bool is_even_supermatrix(const GrassmannMatrix& m, SuperDim dim);
bool is_odd_supermatrix(const GrassmannMatrix& m, SuperDim dim);
bool is_nilpotent(const GrassmannMatrix& m);

GrassmannMatrix exp_nilpotent(const GrassmannMatrix& m);
GrassmannMatrix log_unipotent(const GrassmannMatrix& u);
// Inverse of a matrix whose body is invertible.
GrassmannMatrix invert(const GrassmannMatrix& m);

// A-points of C^{m|n}: coordinates in A, even slots in A_0, odd slots in A_1.
struct APoint {
  SuperDim dim;
  std::vector<GrassmannElement> coords;
  friend bool operator==(const APoint& a, const APoint& b) { return a.dim == b.dim && a.coords == b.coords; }
};

bool is_valid_point(const APoint& p);

// Antilinear map v -> M conj(v) on C^{m|n}, with kind.
struct SpaceStructure {
  SuperDim dim;
  ScalarMatrix matrix;
  Kind kind = Kind::standard;
};

APoint apply_real_structure(const SpaceStructure& phi, const APoint& p);

// Real basis of the fixed points of phi_A on (A (x) V)_0.
std::vector<APoint> fixed_points_basis(const SpaceStructure& phi, GrassmannSpec spec);

// Real basis (as complex vectors) of {x : f(x) = x} for an antilinear involution-like map f on C^n.
std::vector<std::vector<GaussianRational>> real_fixed_space(
    std::size_t n, const std::function<std::vector<GaussianRational>(const std::vector<GaussianRational>&)>& f);

// Coordinates of A-points: for each slot, the monomials of matching parity.
struct PointLayout {
  SuperDim dim;
  GrassmannSpec spec;
  std::vector<std::pair<int, Monomial>> slots;
  explicit PointLayout(SuperDim d, GrassmannSpec s);
  std::size_t size() const { return slots.size(); }
  std::vector<GaussianRational> flatten(const APoint& p) const;
  APoint unflatten(const std::vector<GaussianRational>& v) const;
};

// Coordinates of even-total matrices over A.
struct MatrixLayout {
  SuperDim dim;
  GrassmannSpec spec;
  std::vector<std::tuple<int, int, Monomial>> slots;
  explicit MatrixLayout(SuperDim d, GrassmannSpec s);
  std::size_t size() const { return slots.size(); }
  std::vector<GaussianRational> flatten(const GrassmannMatrix& m) const;
  GrassmannMatrix unflatten(const std::vector<GaussianRational>& v) const;
};

}  // namespace superreal
