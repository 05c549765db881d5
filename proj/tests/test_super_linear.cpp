#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace superreal;
using oracle::q;

namespace {

GrassmannElement gen(GrassmannSpec s, int k) { return GrassmannElement::generator(s, k); }

GrassmannMatrix with_entry(GrassmannSpec s, int n, int i, int j, const GrassmannElement& a) {
  GrassmannMatrix m(n, n, GrassmannElement(s));
  m(i, j) = a;
  return m;
}

APoint random_point(Sampler& smp, SuperDim dim, GrassmannSpec spec) {
  APoint p{dim, {}};
  for (int k = 0; k < dim.total(); ++k) p.coords.push_back(smp.element(spec, dim.parity(k)));
  return p;
}

}  // namespace

TEST_CASE("supertranspose sign convention") {
  SuperDim d{1, 1};
  ScalarMatrix e12 = elementary(d, 0, 1);
  CHECK(supertranspose(e12, d) == elementary(d, 1, 0, -1));
  ScalarMatrix id = ScalarMatrix::identity(2, 1);
  CHECK(supertranspose(id, d) == id);
  ScalarMatrix odd = elementary(d, 0, 1, 3) + elementary(d, 1, 0, GaussianRational::i());
  CHECK(supertranspose(supertranspose(odd, d), d) == -odd);
}

TEST_CASE("supertranspose and supertrace on elementary pairs of gl(2|2)") {
  SuperDim d{2, 2};
  std::vector<ScalarMatrix> es;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) es.push_back(elementary(d, i, j));
  for (const auto& m : es)
    for (const auto& n : es) {
      int pm = matrix_parity(m, d);
      int pn = matrix_parity(n, d);
      ScalarMatrix rhs = supertranspose(n, d) * supertranspose(m, d);
      CHECK(supertranspose(m * n, d) == ((pm & pn) ? -rhs : rhs));
      GaussianRational t = supertrace(n * m, d);
      CHECK(supertrace(m * n, d) == ((pm & pn) ? -t : t));
      CHECK(supertrace(superbracket(m, pm, n, pn), d).is_zero());
    }
}

TEST_CASE("supertrace values") {
  CHECK(supertrace(ScalarMatrix::identity(2, 1), SuperDim{1, 1}).is_zero());
  SuperDim d{3, 2};
  ScalarMatrix p(5, 5);
  for (int k = 0; k < 3; ++k) p(k, k) = 1;
  CHECK(supertrace(p, d) == GaussianRational(3));
  SuperDim d11{1, 1};
  ScalarMatrix b = superbracket(elementary(d11, 0, 1), 1, elementary(d11, 1, 0), 1);
  CHECK(b == ScalarMatrix::identity(2, 1));
  CHECK(supertrace(b, d11).is_zero());
  CHECK_THROWS(supertrace(ScalarMatrix(2, 3), SuperDim{1, 1}));
}

TEST_CASE("nilpotent exponential") {
  GrassmannSpec s{2, Kind::standard};
  GrassmannMatrix zero(2, 2, GrassmannElement(s));
  CHECK(exp_nilpotent(zero) == grassmann_identity(s, 2));
  GrassmannMatrix single = with_entry(s, 2, 0, 1, gen(s, 0));
  CHECK(exp_nilpotent(single) == grassmann_identity(s, 2) + single);
  GrassmannMatrix m = single + with_entry(s, 2, 1, 0, gen(s, 2));
  GrassmannMatrix m2 = m * m;
  CHECK((m2 * m).is_zero_matrix());
  CHECK(exp_nilpotent(m) == grassmann_identity(s, 2) + m + m2.scaled(q(1, 2)));
  CHECK_THROWS(exp_nilpotent(grassmann_identity(s, 2)));
}

TEST_CASE("exp and log round trips") {
  SuperDim d{2, 1};
  GrassmannSpec s{2, Kind::standard};
  GrassmannSpec small{1, Kind::standard};
  GrassmannMatrix single = with_entry(small, 2, 0, 1, gen(small, 0));
  CHECK(log_unipotent(grassmann_identity(small, 2)).is_zero_matrix());
  CHECK(log_unipotent(grassmann_identity(small, 2) + single) == single);
  oracle::for_seeds(30, 500, [&](std::uint64_t seed) {
    Sampler smp(seed);
    GrassmannMatrix n = smp.even_matrix(d, s, true);
    GrassmannMatrix u = grassmann_identity(s, 3) + n;
    CHECK(exp_nilpotent(log_unipotent(u)) == u);
    CHECK(log_unipotent(exp_nilpotent(n)) == n);
    CHECK(exp_nilpotent(n) * exp_nilpotent(-n) == grassmann_identity(s, 3));
  });
  CHECK_THROWS(log_unipotent(grassmann_identity(s, 2).scaled(q(2))));
}

TEST_CASE("inverse of an invertible point") {
  oracle::for_seeds(10, 40, [](std::uint64_t seed) {
    Sampler smp(seed);
    SuperDim d{2, 2};
    GrassmannSpec s{2, Kind::graded};
    GrassmannMatrix g = smp.invertible_point(d, s);
    CHECK(g * invert(g) == grassmann_identity(s, 4));
    CHECK(is_even_supermatrix(g, d));
  });
}

TEST_CASE("standard structure fixes real even points") {
  SuperDim d{2, 1};
  GrassmannSpec s{1, Kind::standard};
  SpaceStructure phi{d, ScalarMatrix::identity(3, 1), Kind::standard};
  APoint p{d, {GrassmannElement(s, 2), GrassmannElement(s, q(-1, 3)), GrassmannElement(s)}};
  CHECK(apply_real_structure(phi, p) == p);
  APoint ip = p;
  for (auto& c : ip.coords) c = c * GaussianRational::i();
  APoint image = apply_real_structure(phi, ip);
  for (std::size_t k = 0; k < 3; ++k) CHECK(image.coords[k] == -ip.coords[k]);
}

TEST_CASE("graded structure on odd coordinates") {
  SuperDim d{0, 2};
  GrassmannSpec s{1, Kind::graded};
  ScalarMatrix j(2, 2);
  j(1, 0) = 1;
  j(0, 1) = -1;
  SpaceStructure phi{d, j, Kind::graded};
  APoint p{d, {gen(s, 0), GrassmannElement(s)}};
  APoint image = apply_real_structure(phi, p);
  CHECK(image.coords[0].is_zero());
  CHECK(image.coords[1] == gen(s, 1));
  CHECK_THROWS(apply_real_structure(SpaceStructure{d, j, Kind::standard}, p));
}

TEST_CASE("real structures on points are involutions") {
  oracle::for_seeds(20, 60, [](std::uint64_t seed) {
    Sampler smp(seed);
    GrassmannSpec gs{2, Kind::graded};
    SuperDim d{1, 2};
    ScalarMatrix j(3, 3);
    j(0, 0) = 1;
    j(2, 1) = 1;
    j(1, 2) = -1;
    SpaceStructure phi{d, j, Kind::graded};
    APoint p = random_point(smp, d, gs);
    REQUIRE(is_valid_point(p));
    CHECK(apply_real_structure(phi, apply_real_structure(phi, p)) == p);
    GrassmannSpec ss{2, Kind::standard};
    SpaceStructure psi{d, ScalarMatrix::identity(3, 1), Kind::standard};
    APoint r = random_point(smp, d, ss);
    CHECK(apply_real_structure(psi, apply_real_structure(psi, r)) == r);
  });
}

TEST_CASE("fixed point bases") {
  SpaceStructure st{SuperDim{3, 0}, ScalarMatrix::identity(3, 1), Kind::standard};
  CHECK(fixed_points_basis(st, GrassmannSpec{0, Kind::standard}).size() == 3);

  ScalarMatrix j(2, 2);
  j(1, 0) = 1;
  j(0, 1) = -1;
  SpaceStructure gr{SuperDim{0, 2}, j, Kind::graded};
  CHECK(fixed_points_basis(gr, GrassmannSpec{0, Kind::graded}).empty());

  GrassmannSpec s{1, Kind::graded};
  auto basis = fixed_points_basis(gr, s);
  CHECK(basis.size() == 4);
  for (const auto& b : basis) {
    CHECK(apply_real_structure(gr, b) == b);
    CHECK(b.coords[1] == b.coords[0].conjugate());
  }
  // Every fixed point is in the real span: (a, a~) for odd a.
  PointLayout layout(SuperDim{0, 2}, s);
  ScalarMatrix cols(2 * layout.size(), basis.size() + 1);
  APoint target{SuperDim{0, 2}, {gen(s, 0) * oracle::gi(2, -1) + gen(s, 1), GrassmannElement(s)}};
  target.coords[1] = target.coords[0].conjugate();
  for (std::size_t c = 0; c <= basis.size(); ++c) {
    auto v = layout.flatten(c < basis.size() ? basis[c] : target);
    for (std::size_t k = 0; k < v.size(); ++k) {
      cols(2 * k, c) = v[k].re();
      cols(2 * k + 1, c) = v[k].im();
    }
  }
  CHECK(rank(cols) == basis.size());

  for (int pairs : {0, 1}) {
    SuperDim d{2, 1};
    GrassmannSpec ss{pairs, Kind::standard};
    SpaceStructure phi{d, ScalarMatrix::identity(3, 1), Kind::standard};
    CHECK(fixed_points_basis(phi, ss).size() == PointLayout(d, ss).size());
  }
}

TEST_CASE("point layout round trip") {
  Sampler smp(3);
  SuperDim d{2, 2};
  GrassmannSpec s{2, Kind::standard};
  PointLayout layout(d, s);
  APoint p = random_point(smp, d, s);
  CHECK(layout.unflatten(layout.flatten(p)) == p);
  MatrixLayout ml(d, s);
  GrassmannMatrix m = smp.even_matrix(d, s);
  CHECK(ml.unflatten(ml.flatten(m)) == m);
}
