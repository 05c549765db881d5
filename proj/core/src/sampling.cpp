#include "superreal/sampling.hpp"

#include <array>

namespace superreal {

namespace {

const std::array<GaussianRational, 7>& pool() {
  static const std::array<GaussianRational, 7> values = {
      GaussianRational(0),
      GaussianRational(1),
      GaussianRational(-1),
      GaussianRational(mpq_class(0), mpq_class(1)),
      GaussianRational(mpq_class(0), mpq_class(-1)),
      GaussianRational(mpq_class(1), mpq_class(1)),
      GaussianRational(mpq_class(1), mpq_class(-1)),
  };
  return values;
}

}  // namespace

GaussianRational Sampler::scalar() { return pool()[rng_() % 7]; }

GaussianRational Sampler::nonzero_scalar() { return pool()[1 + rng_() % 6]; }

GrassmannElement Sampler::element(GrassmannSpec spec, int parity, bool soul_only) {
  GrassmannElement x(spec);
  for (Monomial m : monomials_of_parity(spec, parity)) {
    if (soul_only && m == 0) continue;
    GaussianRational c = scalar();
    if (!c.is_zero()) x += GrassmannElement::monomial(spec, m, c);
  }
  return x;
}

GrassmannMatrix Sampler::even_matrix(SuperDim dim, GrassmannSpec spec, bool soul_only) {
  std::size_t n = static_cast<std::size_t>(dim.total());
  GrassmannMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = element(spec, (dim.parity(static_cast<int>(i)) + dim.parity(static_cast<int>(j))) & 1, soul_only);
  return m;
}

GrassmannMatrix Sampler::odd_block_matrix(SuperDim dim, GrassmannSpec spec) {
  std::size_t n = static_cast<std::size_t>(dim.total());
  GrassmannMatrix m(n, n, GrassmannElement(spec));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (dim.parity(static_cast<int>(i)) != dim.parity(static_cast<int>(j))) m(i, j) = element(spec, 1);
  return m;
}

GrassmannMatrix Sampler::block_diagonal_matrix(SuperDim dim, GrassmannSpec spec) {
  std::size_t n = static_cast<std::size_t>(dim.total());
  GrassmannMatrix m(n, n, GrassmannElement(spec));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (dim.parity(static_cast<int>(i)) == dim.parity(static_cast<int>(j))) m(i, j) = element(spec, 0);
  return m;
}

GrassmannMatrix Sampler::invertible_point(SuperDim dim, GrassmannSpec spec) {
  for (;;) {
    GrassmannMatrix m = even_matrix(dim, spec);
    if (!determinant(body(m)).is_zero()) return m;
  }
}

ScalarMatrix Sampler::scalar_matrix(std::size_t rows, std::size_t cols) {
  ScalarMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = scalar();
  return m;
}

GrassmannMatrix Sampler::lie_valued(const LieSuperAlgebra& g, GrassmannSpec spec, bool soul_only) {
  std::size_t n = static_cast<std::size_t>(g.dim().total());
  GrassmannMatrix out(n, n, GrassmannElement(spec));
  for (std::size_t k = 0; k < g.size(); ++k) {
    GrassmannElement a = element(spec, g.parity(k), soul_only);
    if (!a.is_zero()) out += scale(lift(g.basis(k), spec), a);
  }
  return out;
}

}  // namespace superreal
