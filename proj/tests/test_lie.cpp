#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace superreal;

namespace {

// str(ad x ad y) from raw matrix brackets and coordinate solves.
ScalarMatrix killing_oracle(const LieSuperAlgebra& g) {
  std::size_t n = g.size();
  std::vector<ScalarMatrix> ads;
  for (std::size_t i = 0; i < n; ++i) {
    ScalarMatrix ad(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      ScalarMatrix b = superbracket(g.basis(i), g.parity(i), g.basis(j), g.parity(j));
      Vec c = g.coordinates_or_throw(b);
      for (std::size_t k = 0; k < n; ++k) ad(k, j) = c[k];
    }
    ads.push_back(ad);
  }
  ScalarMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ScalarMatrix p = ads[i] * ads[j];
      GaussianRational s;
      for (std::size_t k = 0; k < n; ++k) s += g.parity(k) ? -p(k, k) : p(k, k);
      out(i, j) = s;
    }
  return out;
}

// Dimension of {X : <Xv, w> + (-1)^{|X||v|} <v, Xw> = 0} inside gl(m|2t), per parity.
std::size_t invariance_dimension(SuperDim d, const ScalarMatrix& form, int parity) {
  int n = d.total();
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (((d.parity(i) + d.parity(j)) & 1) == parity) slots.emplace_back(i, j);
  ScalarMatrix a(static_cast<std::size_t>(n * n), slots.size());
  for (std::size_t c = 0; c < slots.size(); ++c) {
    ScalarMatrix x = elementary(d, slots[c].first, slots[c].second);
    ScalarMatrix xt = x.transpose();
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w) {
        GaussianRational lhs = (xt * form)(v, w);
        GaussianRational rhs = (form * x)(v, w);
        if (parity & d.parity(v)) rhs = -rhs;
        a(static_cast<std::size_t>(v * n + w), c) = lhs + rhs;
      }
  }
  return slots.size() - rank(a);
}

bool preserves_form(const ScalarMatrix& x, int px, SuperDim d, const ScalarMatrix& form) {
  int n = d.total();
  ScalarMatrix l = x.transpose() * form;
  ScalarMatrix r = form * x;
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) {
      GaussianRational rv = r(v, w);
      if (px & d.parity(v)) rv = -rv;
      if (!(l(v, w) + rv).is_zero()) return false;
    }
  return true;
}

std::vector<LieSuperAlgebra> all_algebras() {
  return {build_gl(1, 1), build_gl(2, 1), build_sl(2, 1), build_sl(3, 1),
          build_sl(1, 2), build_osp(1, 2), build_osp(2, 2), build_osp(2, 4)};
}

}  // namespace

TEST_CASE("gl(1|1) basis and bracket") {
  auto g = build_gl(1, 1);
  CHECK(g.size() == 4);
  CHECK(g.even_dim() == 2);
  SuperDim d{1, 1};
  Vec e12 = g.coordinates_or_throw(elementary(d, 0, 1));
  Vec e21 = g.coordinates_or_throw(elementary(d, 1, 0));
  CHECK(g.element(g.bracket(e12, e21)) == ScalarMatrix::identity(2, 1));
  for (std::size_t k = 0; k < g.size(); ++k) {
    const ScalarMatrix& b = g.basis(k);
    CHECK(supertrace(b, d) == b(0, 0) - b(1, 1));
  }
}

TEST_CASE("sl dimensions and the excluded equal case") {
  auto g = build_sl(2, 1);
  CHECK(g.size() == 8);
  for (const auto& b : g.basis()) CHECK(supertrace(b, g.dim()).is_zero());
  CHECK(bracket_closed(g));
  CHECK(build_sl(3, 1).size() == 15);
  CHECK_THROWS(build_sl(2, 2));
  CHECK_THROWS(build_sl(1, 1));
}

TEST_CASE("osp bases match the form-invariance solve") {
  struct Case {
    int m, two_t;
    std::size_t even, odd;
  };
  for (Case c : {Case{1, 2, 3, 2}, Case{2, 2, 4, 4}, Case{2, 4, 11, 8}, Case{3, 2, 6, 6}}) {
    auto g = build_osp(c.m, c.two_t);
    CHECK(g.even_dim() == c.even);
    CHECK(g.odd_dim() == c.odd);
    CHECK(invariance_dimension(g.dim(), g.form(), 0) == c.even);
    CHECK(invariance_dimension(g.dim(), g.form(), 1) == c.odd);
    for (std::size_t k = 0; k < g.size(); ++k) CHECK(preserves_form(g.basis(k), g.parity(k), g.dim(), g.form()));
  }
}

TEST_CASE("super Jacobi identity and module structure") {
  for (const auto& g : all_algebras()) {
    INFO(g.label());
    CHECK_FALSE(super_jacobi_violation(g).has_value());
    CHECK(bracket_closed(g));
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) {
        const Vec& b = g.bracket_basis(i, j);
        bool zero = std::all_of(b.begin(), b.end(), [](const GaussianRational& c) { return c.is_zero(); });
        if (!zero) CHECK(g.vector_parity(b) == ((g.parity(i) + g.parity(j)) & 1));
      }
  }
}

TEST_CASE("Killing form agrees with the raw-bracket oracle") {
  for (const auto& g : {build_sl(2, 1), build_osp(1, 2), build_gl(1, 1), build_osp(2, 2)}) {
    INFO(g.label());
    ScalarMatrix k = killing_form(g);
    CHECK(k == killing_oracle(g));
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (g.parity(i) != g.parity(j)) CHECK(k(i, j).is_zero());
        GaussianRational t = k(j, i);
        CHECK(k(i, j) == ((g.parity(i) & g.parity(j)) ? -t : t));
      }
    for (std::size_t z = 0; z < g.size(); ++z)
      for (std::size_t x = 0; x < g.size(); ++x)
        for (std::size_t y = 0; y < g.size(); ++y) {
          GaussianRational a = killing(g, k, g.bracket_basis(z, x), g.unit(y));
          GaussianRational b = killing(g, k, g.unit(x), g.bracket_basis(z, y));
          if (g.parity(z) & g.parity(x)) b = -b;
          CHECK((a + b).is_zero());
        }
  }
  CHECK_FALSE(determinant(killing_form(build_sl(2, 1))).is_zero());
  CHECK_FALSE(determinant(killing_form(build_osp(1, 2))).is_zero());
}

TEST_CASE("root decomposition of sl(2|1)") {
  auto g = build_sl(2, 1);
  auto rd = root_decomposition(g);
  CHECK(rd.roots.size() == 6);
  std::size_t odd = 0;
  for (const auto& r : rd.roots) odd += r.parity;
  CHECK(odd == 4);
  for (const auto& r : rd.roots)
    for (std::size_t c = 0; c < rd.cartan.size(); ++c) {
      Vec lhs = g.bracket(rd.cartan[c], r.vector);
      Vec rhs = r.vector;
      for (auto& v : rhs) v = v * r.weight[c];
      CHECK(lhs == rhs);
    }
  std::size_t odd_simple = 0;
  for (auto s : rd.simple) odd_simple += rd.roots[s].parity;
  CHECK(rd.simple.size() == 2);
  CHECK(odd_simple == 1);
}

TEST_CASE("distinguished simple systems have one odd root") {
  for (const auto& g : {build_gl(2, 1), build_sl(3, 1), build_sl(1, 2), build_osp(2, 2), build_osp(2, 4)}) {
    INFO(g.label());
    auto rd = root_decomposition(g);
    std::size_t odd_simple = 0;
    for (auto s : rd.simple) odd_simple += rd.roots[s].parity;
    CHECK(odd_simple == 1);
  }
}

TEST_CASE("Chevalley generators of sl(2|1)") {
  auto g = build_sl(2, 1);
  auto cs = chevalley_generators(g, root_decomposition(g));
  REQUIRE(cs.x_plus.size() == 2);
  REQUIRE(cs.odd.size() == 1);
  CHECK(cs.odd[0] == 1);
  for (std::size_t i = 0; i < 2; ++i) {
    Vec h = g.bracket(cs.x_plus[i], cs.x_minus[i]);
    CHECK(h == cs.h[i]);
    ScalarMatrix hm = g.element(h);
    for (std::size_t r = 0; r < hm.rows(); ++r)
      for (std::size_t c = 0; c < hm.cols(); ++c)
        if (r != c) CHECK(hm(r, c).is_zero());
    CHECK(g.vector_parity(cs.x_plus[i]) == (i == 1 ? 1 : 0));
  }
  std::vector<Vec> gens = cs.x_plus;
  gens.insert(gens.end(), cs.x_minus.begin(), cs.x_minus.end());
  CHECK(bracket_span_dimension(g, gens) == g.size());
  auto gl = build_gl(2, 1);
  auto cgl = chevalley_generators(gl, root_decomposition(gl));
  CHECK(cgl.extra_cartan.size() == 1);
}

TEST_CASE("inner automorphisms") {
  auto g = build_sl(2, 1);
  ScalarMatrix id = ScalarMatrix::identity(g.size(), 1);
  CHECK(inner_exp_ad(g, Vec(g.size())) == id);
  Vec n = g.coordinates_or_throw(elementary(g.dim(), 0, 1));
  ScalarMatrix e = inner_exp_ad(g, n);
  ScalarMatrix u = ScalarMatrix::identity(3, 1) + elementary(g.dim(), 0, 1);
  CHECK(e == inner_conjugation(g, u));
  CHECK(is_automorphism(g, e));
  ScalarMatrix d = ScalarMatrix::identity(3, 1);
  d(1, 1) = -1;
  d(2, 2) = GaussianRational::i();
  CHECK(is_automorphism(g, inner_conjugation(g, d)));
  Vec odd = g.coordinates_or_throw(elementary(g.dim(), 0, 2));
  CHECK_THROWS(inner_exp_ad(g, odd));
}
