#pragma once

#include <algorithm>
#include <vector>

#include "superreal/hermitian.hpp"
#include "superreal/linalg.hpp"
#include "superreal/real_structure.hpp"

namespace fixture {

using namespace superreal;

inline GaussianRational I() { return GaussianRational::i(); }

inline ScalarMatrix diag3(GaussianRational a, GaussianRational b, GaussianRational c) {
  ScalarMatrix u(3, 3);
  u(0, 0) = a;
  u(1, 1) = b;
  u(2, 2) = c;
  return u;
}

inline ScalarMatrix swap_even(GaussianRational c) {
  ScalarMatrix u(3, 3);
  u(0, 1) = 1;
  u(1, 0) = 1;
  u(2, 2) = c;
  return u;
}

inline bool all_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const GaussianRational& z) { return z.is_zero(); });
}

inline bool in_span(const std::vector<Vec>& span, const Vec& v) {
  if (all_zero(v)) return true;
  if (span.empty()) return false;
  ScalarMatrix a(v.size(), span.size());
  for (std::size_t c = 0; c < span.size(); ++c)
    for (std::size_t r = 0; r < v.size(); ++r) a(r, c) = span[c][r];
  return solve(a, v).has_value();
}

// diag(I_m, s i I_n): the standard forms z.z' +- i zeta.zeta'.
inline SuperHermitianForm diagonal_form(SuperDim d, int s) {
  ScalarMatrix h = ScalarMatrix::identity(static_cast<std::size_t>(d.total()), 1);
  for (int k = d.even; k < d.total(); ++k) h(k, k) = I() * s;
  return SuperHermitianForm::on(d, h);
}

inline GrassmannMatrix transposed_tilde(const GrassmannMatrix& m) { return tilde(m).transpose(); }

struct Blocks {
  GrassmannMatrix a, b, c, d;
};

inline Blocks split(const GrassmannMatrix& m, SuperDim dim) {
  std::size_t e = static_cast<std::size_t>(dim.even), o = static_cast<std::size_t>(dim.odd);
  return {m.block(0, 0, e, e), m.block(0, e, e, o), m.block(e, 0, o, e), m.block(e, e, o, o)};
}

// Every single-entry, single-monomial even-total matrix.
inline std::vector<GrassmannMatrix> elementary_inputs(SuperDim dim, GrassmannSpec spec) {
  std::vector<GrassmannMatrix> out;
  std::size_t n = static_cast<std::size_t>(dim.total());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (Monomial m : monomials_of_parity(spec, (dim.parity(int(i)) + dim.parity(int(j))) & 1)) {
        GrassmannMatrix x(n, n, GrassmannElement(spec));
        x(i, j) = GrassmannElement::monomial(spec, m);
        out.push_back(x);
      }
  return out;
}

// Block displays for diag(I, s i I).
// star: standard (a~t, -s c~t; -s b~t, d~t), graded (a~t, s c~t; -s b~t, d~t).
// circledast: standard (-a~t, -s i c~t; -s i b~t, -d~t), graded (-a~t, -s c~t; s b~t, -d~t).
inline bool diagonal_star_display(const GrassmannMatrix& m, SuperDim dim, Kind kind, int s) {
  SuperHermitianForm b = diagonal_form(dim, s);
  GaussianRational top = kind == Kind::standard ? -s : s;
  Blocks in = split(m, dim);
  Blocks st = split(adjoint_star(m, b, kind), dim);
  return st.a == transposed_tilde(in.a) && st.b == transposed_tilde(in.c).scaled(top) &&
         st.c == transposed_tilde(in.b).scaled(GaussianRational(-s)) && st.d == transposed_tilde(in.d);
}

inline bool diagonal_circledast_display(const GrassmannMatrix& m, SuperDim dim, Kind kind, int s) {
  SuperHermitianForm b = diagonal_form(dim, s);
  Blocks in = split(m, dim);
  Blocks cd = split(circledast(m, b, kind), dim);
  bool diag = cd.a == -transposed_tilde(in.a) && cd.d == -transposed_tilde(in.d);
  if (kind == Kind::standard)
    return diag && cd.b == transposed_tilde(in.c).scaled(I() * -s) &&
           cd.c == transposed_tilde(in.b).scaled(I() * -s);
  return diag && cd.b == transposed_tilde(in.c).scaled(GaussianRational(-s)) &&
         cd.c == transposed_tilde(in.b).scaled(GaussianRational(s));
}

// Form induced on C^{m|2t} by the symplectic pairing and the standard structure, sign +.
// Blocks 0 = a, 1 = plus, 2 = minus; entry (r, c) of the image is coef * tilde(u(src_r, src_c))^t.
inline bool symplectic_displays(const GrassmannMatrix& u, int m, int t) {
  SuperHermitianForm b = hermitian_from_susy(symplectic_pairing(m, t), phi_standard(m, 2 * t), 1);
  struct Rule {
    int sr, sc;
    GaussianRational c;
  };
  const Rule star[3][3] = {{{0, 0, 1}, {2, 0, I()}, {1, 0, -I()}},
                           {{0, 2, -I()}, {2, 2, 1}, {1, 2, -1}},
                           {{0, 1, I()}, {2, 1, -1}, {1, 1, 1}}};
  const Rule dast[3][3] = {{{0, 0, -1}, {2, 0, -1}, {1, 0, 1}},
                           {{0, 2, 1}, {2, 2, -1}, {1, 2, 1}},
                           {{0, 1, -1}, {2, 1, 1}, {1, 1, -1}}};
  auto block_of = [&](int i) { return i < m ? 0 : (i < m + t ? 1 : 2); };
  auto start = [&](int blk) { return blk == 0 ? 0 : (blk == 1 ? m : m + t); };
  GrassmannMatrix st = adjoint_star(u, b, Kind::standard);
  GrassmannMatrix cd = circledast(u, b, Kind::standard);
  int n = m + 2 * t;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int bi = block_of(i), bj = block_of(j);
      int ri = i - start(bi), rj = j - start(bj);
      const Rule& e = star[bi][bj];
      if (!(st(i, j) == u(start(e.sr) + rj, start(e.sc) + ri).conjugate() * e.c)) return false;
      const Rule& f = dast[bi][bj];
      if (!(cd(i, j) == u(start(f.sr) + rj, start(f.sc) + ri).conjugate() * f.c)) return false;
    }
  return true;
}

// Fixed set on C^{1|2}: gamma+ = b-~t, gamma- = -b+~t, d-- = -d++~t, d+- and d-+ self-conjugate.
inline bool symplectic_fixed_shape(const GrassmannMatrix& x) {
  return x(0, 0) == -x(0, 0).conjugate() && x(1, 0) == x(0, 2).conjugate() && x(2, 0) == -x(0, 1).conjugate() &&
         x(2, 2) == -x(1, 1).conjugate() && x(1, 2) == x(1, 2).conjugate() && x(2, 1) == x(2, 1).conjugate();
}

// Image under the explicit C(n) display on osp(2|2t), written block by block.
inline ScalarMatrix sigma_display(const ScalarMatrix& m, int t) {
  std::size_t T = static_cast<std::size_t>(t);
  std::size_t n = 2 + 2 * T;
  ScalarMatrix out(n, n);
  auto bar = [&](std::size_t r, std::size_t c) { return m(r, c).conj(); };
  out(0, 0) = -bar(0, 0);
  out(1, 1) = bar(0, 0);
  for (std::size_t k = 0; k < T; ++k) {
    GaussianRational x = bar(0, 2 + k), y = bar(0, 2 + T + k), z = bar(1, 2 + k), w = bar(1, 2 + T + k);
    out(0, 2 + k) = -I() * w;
    out(0, 2 + T + k) = I() * z;
    out(1, 2 + k) = I() * y;
    out(1, 2 + T + k) = -I() * x;
    out(2 + k, 0) = -I() * x;
    out(2 + k, 1) = I() * z;
    out(2 + T + k, 0) = -I() * y;
    out(2 + T + k, 1) = I() * w;
  }
  ScalarMatrix a = m.block(2, 2, T, T), b = m.block(2, 2 + T, T, T), c = m.block(2 + T, 2, T, T);
  out.set_block(2, 2, -conj_matrix(a).transpose());
  out.set_block(2, 2 + T, -conj_matrix(c));
  out.set_block(2 + T, 2, -conj_matrix(b).transpose());
  out.set_block(2 + T, 2 + T, conj_matrix(a));
  return out;
}

// Ad of diagonal and swap matrices on sl(2|1), all commuting with omega.
inline std::vector<LinearAutomorphism> order_four_automorphisms(const LieSuperAlgebra& g) {
  return {inner_ad(g, diag3(1, -1, I()), 4), inner_ad(g, diag3(1, -1, -I()), 4), inner_ad(g, diag3(I(), -I(), 1), 4),
          inner_ad(g, diag3(I(), -I(), -1), 4), inner_ad(g, swap_even(I()), 4)};
}

inline std::vector<LinearAutomorphism> order_two_automorphisms(const LieSuperAlgebra& g) {
  ScalarMatrix u(3, 3);
  u(0, 1) = I();
  u(1, 0) = -I();
  u(2, 2) = 1;
  return {inner_ad(g, diag3(1, -1, 1), 2), inner_ad(g, diag3(1, -1, -1), 2), inner_ad(g, swap_even(1), 2),
          inner_ad(g, swap_even(-1), 2), inner_ad(g, u, 2)};
}

}  // namespace fixture
