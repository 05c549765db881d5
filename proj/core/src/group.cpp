#include "superreal/group.hpp"

#include <sstream>
#include <stdexcept>

#include "superreal/linalg.hpp"

namespace superreal {

namespace {

std::optional<GrassmannSpec> spec_of(const GrassmannMatrix& m) {
  for (const auto& x : m.data())
    if (x.has_spec()) return x.spec();
  return std::nullopt;
}

GrassmannSpec require_spec(const GrassmannMatrix& m) {
  auto s = spec_of(m);
  if (!s) throw std::invalid_argument("group point has no Grassmann coefficients");
  return *s;
}

GrassmannMatrix identity_like(const GrassmannMatrix& m) {
  return grassmann_identity(require_spec(m), static_cast<int>(m.rows()));
}

int iteration_bound(GrassmannSpec spec) { return 2 * spec.generators() + 4; }

}  // namespace

bool is_group_point(const GroupPoint& g) {
  auto n = static_cast<std::size_t>(g.dim.total());
  if (g.matrix.rows() != n || g.matrix.cols() != n) return false;
  if (!is_even_supermatrix(g.matrix, g.dim)) return false;
  return !determinant(body(g.matrix)).is_zero();
}

FactoredPoint factorize_point(const GroupPoint& g) {
  if (!is_group_point(g)) throw std::domain_error("not an invertible even supermatrix");
  GrassmannSpec spec = require_spec(g.matrix);
  std::size_t n = g.matrix.rows();
  GrassmannMatrix y(n, n, GrassmannElement(spec));
  for (int it = 0; it < iteration_bound(spec); ++it) {
    GrassmannMatrix h = g.matrix * exp_nilpotent(-y);
    GrassmannMatrix o = off_diagonal_blocks(h, g.dim);
    if (o.is_zero_matrix()) return {h, y};
    GrassmannMatrix d = diagonal_blocks(h, g.dim);
    y += off_diagonal_blocks(invert(d) * o, g.dim);
  }
  throw std::domain_error("factorization did not stabilise");
}

GrassmannMatrix recombine(const FactoredPoint& f) { return f.g_plus * exp_nilpotent(f.y); }

GrassmannMatrix dexp(const GrassmannMatrix& y, const GrassmannMatrix& z) {
  std::vector<GrassmannMatrix> pw{identity_like(y)};
  while (!pw.back().is_zero_matrix()) pw.push_back(pw.back() * y);
  std::size_t top = pw.size() - 1;  // y^top = 0
  GrassmannMatrix out(y.rows(), y.cols(), GrassmannElement(require_spec(y)));
  mpq_class fact = 1;
  for (std::size_t n = 1; n + 1 <= 2 * top; ++n) {
    fact *= static_cast<unsigned long>(n);
    GrassmannMatrix acc(y.rows(), y.cols(), GrassmannElement(require_spec(y)));
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t r = n - 1 - k;
      if (k >= top || r >= top) continue;
      acc += pw[k] * z * pw[r];
    }
    out += acc.scaled(GaussianRational(mpq_class(1) / fact));
  }
  return out;
}

std::size_t factorization_kernel_dim(const FactoredPoint& f, SuperDim dim) {
  GrassmannSpec spec = require_spec(f.g_plus);
  MatrixLayout layout(dim, spec);
  std::size_t n = layout.size();
  GrassmannMatrix ey = exp_nilpotent(f.y);
  ScalarMatrix jac(n, n);
  for (std::size_t s = 0; s < n; ++s) {
    auto [i, j, m] = layout.slots[s];
    GrassmannMatrix e(f.g_plus.rows(), f.g_plus.cols(), GrassmannElement(spec));
    e(i, j) = GrassmannElement::monomial(spec, m);
    GrassmannMatrix col = dim.parity(i) == dim.parity(j) ? e * ey : f.g_plus * dexp(f.y, e);
    std::vector<GaussianRational> v = layout.flatten(col);
    for (std::size_t r = 0; r < n; ++r) jac(r, s) = v[r];
  }
  return n - rank(jac);
}

GrassmannMatrix GroupRealStructure::phi_plus(const GrassmannMatrix& g_plus) const { return phi_a(g_plus); }

GrassmannMatrix GroupRealStructure::phi_a(const GrassmannMatrix& y) const {
  GrassmannSpec spec = require_spec(y);
  return lift(j, spec) * tilde(y) * lift(inverse(j), spec);
}

GroupRealStructure conjugation_structure(SuperDim dim) {
  return {dim, ScalarMatrix::identity(static_cast<std::size_t>(dim.total()), 1), Kind::standard};
}

GroupRealStructure quaternionic_structure(int m, int t) {
  SuperDim dim{m, 2 * t};
  ScalarMatrix j(dim.total(), dim.total());
  for (int k = 0; k < m; ++k) j(k, k) = 1;
  for (int k = 0; k < t; ++k) {
    j(m + k, m + t + k) = 1;
    j(m + t + k, m + k) = -1;
  }
  return {dim, j, Kind::graded};
}

Report verify_group_structure(const GroupRealStructure& phi) {
  Report r;
  ScalarMatrix sq = phi.j * conj_matrix(phi.j);
  auto n = static_cast<std::size_t>(phi.dim.total());
  bool ok = sq.rows() == n;
  std::string w;
  for (std::size_t a = 0; a < n && ok; ++a)
    for (std::size_t b = 0; b < n && ok; ++b) {
      GaussianRational want = 0;
      if (a == b) want = (phi.kind == Kind::graded && phi.dim.parity(static_cast<int>(a))) ? -1 : 1;
      if (sq(a, b) != want) {
        ok = false;
        w = "entry (" + std::to_string(a) + "," + std::to_string(b) + ")";
      }
    }
  r.add("square_law", ok, w);
  bool blocks = matrix_parity(phi.j, phi.dim) == 0;
  r.add("parity", blocks, blocks ? "" : "J mixes even and odd coordinates");
  return r;
}

RealStructureMap lie_structure(const LieSuperAlgebra& gl, const GroupRealStructure& phi) {
  ScalarMatrix jinv = inverse(phi.j);
  return structure_from_matrix_map(
      gl, [&](const ScalarMatrix& x) { return phi.j * conj_matrix(x) * jinv; }, phi.kind);
}

Report compatibility(const GroupRealStructure& phi, const LieSuperAlgebra& gl) {
  Report r;
  GrassmannSpec spec{1, phi.kind};
  GrassmannElement e = GrassmannElement::generator(spec, 0) * GrassmannElement::generator(spec, 1);
  if (phi.kind == Kind::standard) e = e * GaussianRational::i();
  RealStructureMap lie = lie_structure(gl, phi);
  bool ok = e.conjugate() == e;
  std::string w = ok ? "" : "tangent parameter is not real";
  GrassmannMatrix one = grassmann_identity(spec, gl.dim().total());
  for (std::size_t b = 0; b < gl.size() && ok; ++b) {
    if (gl.parity(b)) continue;
    GrassmannMatrix p = one + scale(lift(gl.basis(b), spec), e);
    GrassmannMatrix want = one + scale(lift(gl.element(act(lie, gl.unit(b))), spec), e);
    if (phi.phi_plus(p) != want) {
      ok = false;
      w = "basis element " + std::to_string(b);
    }
  }
  r.add("tangent", ok, w);
  return r;
}

GroupPoint apply_group_structure(const GroupRealStructure& phi, const GroupPoint& g) {
  if (!(g.dim == phi.dim)) throw std::invalid_argument("structure and point have different dimensions");
  FactoredPoint f = factorize_point(g);
  return {g.dim, phi.phi_plus(f.g_plus) * exp_nilpotent(phi.phi_a(f.y))};
}

GrassmannMatrix apply_group_structure_direct(const GroupRealStructure& phi, const GrassmannMatrix& g) {
  return phi.phi_a(g);
}

Membership real_form_membership(const GroupRealStructure& phi, const GroupPoint& g) {
  Membership out;
  out.factors = factorize_point(g);
  out.g_plus_fixed = phi.phi_plus(out.factors.g_plus) == out.factors.g_plus;
  out.y_fixed = phi.phi_a(out.factors.y) == out.factors.y;
  out.member = apply_group_structure(phi, g).matrix == g.matrix;
  if (!out.member) {
    if (!out.g_plus_fixed && !out.y_fixed)
      out.witness = "neither factor is fixed";
    else
      out.witness = out.g_plus_fixed ? "odd factor is not fixed" : "even factor is not fixed";
  }
  return out;
}

GaussianRational generalized_binomial(const GaussianRational& eps, int n) {
  GaussianRational c = 1;
  for (int k = 0; k < n; ++k) c = c * (eps - GaussianRational(k)) * GaussianRational(mpq_class(1, k + 1));
  return c;
}

GrassmannMatrix binomial_power(const GrassmannMatrix& z, const GaussianRational& eps) {
  GrassmannMatrix sum = identity_like(z);
  GrassmannMatrix pw = sum;
  for (int n = 1;; ++n) {
    pw = pw * z;
    if (pw.is_zero_matrix()) return sum;
    if (n > static_cast<int>(z.rows()) * (2 * require_spec(z).pairs + 1) + 1)
      throw std::domain_error("binomial series does not terminate");
    sum += pw.scaled(generalized_binomial(eps, n));
  }
}

namespace {

void require_form(const GroupPoint& g, const SuperHermitianForm& b) {
  if (parities_of(g.dim) != b.parity) throw std::invalid_argument("form and point live on different superspaces");
}

GaussianRational epsilon(Kind kind) { return kind == Kind::graded ? GaussianRational(-1) : GaussianRational::i(); }

}  // namespace

GrassmannMatrix unitary_star_point(const GroupPoint& g, const SuperHermitianForm& b, Kind kind) {
  require_form(g, b);
  FactoredPoint f = factorize_point(g);
  return invert(adjoint_star(f.g_plus, b, kind)) * exp_nilpotent(circledast(f.y, b, kind));
}

GrassmannMatrix unitary_star_binomial(const GroupPoint& g, const SuperHermitianForm& b, Kind kind) {
  require_form(g, b);
  FactoredPoint f = factorize_point(g);
  GrassmannMatrix one = identity_like(g.matrix);
  GrassmannMatrix z = exp_nilpotent(adjoint_star(f.y, b, kind)) - one;
  return invert(adjoint_star(f.g_plus, b, kind)) * binomial_power(z, epsilon(kind));
}

GrassmannMatrix unitary_star_block_literal(const GroupPoint& g, const SuperHermitianForm& b, Kind kind) {
  require_form(g, b);
  FactoredPoint f = factorize_point(g);
  GrassmannMatrix one = identity_like(g.matrix);
  GrassmannMatrix z = adjoint_star(exp_nilpotent(f.y) - one, b, kind);
  return invert(adjoint_star(f.g_plus, b, kind)) * binomial_power(z, epsilon(kind));
}

GrassmannMatrix star_then_inverse(const GrassmannMatrix& g, const SuperHermitianForm& b, Kind kind) {
  return invert(adjoint_star(g, b, kind));
}

GrassmannMatrix inverse_then_star(const GrassmannMatrix& g, const SuperHermitianForm& b, Kind kind) {
  return adjoint_star(invert(g), b, kind);
}

bool unitary_group_membership(const GroupPoint& g, const SuperHermitianForm& b, Kind kind) {
  return unitary_star_point(g, b, kind) == g.matrix;
}

std::vector<std::pair<Monomial, Vec>> lie_coefficients(const LieSuperAlgebra& g, const GrassmannMatrix& y) {
  std::vector<bool> seen(256, false);
  for (const auto& x : y.data())
    for (const auto& [m, c] : x.terms()) seen[m] = true;
  std::vector<std::pair<Monomial, Vec>> out;
  for (int m = 0; m < 256; ++m) {
    if (!seen[m]) continue;
    auto mono = static_cast<Monomial>(m);
    ScalarMatrix c = y.map([&](const GrassmannElement& x) { return x.coefficient(mono); });
    auto coords = g.coordinates(c);
    if (!coords) throw std::domain_error("matrix is not " + g.label() + "-valued");
    out.emplace_back(mono, *coords);
  }
  return out;
}

GrassmannMatrix from_lie_coefficients(const LieSuperAlgebra& g, GrassmannSpec spec,
                                      const std::vector<std::pair<Monomial, Vec>>& c) {
  auto n = static_cast<std::size_t>(g.dim().total());
  GrassmannMatrix out(n, n, GrassmannElement(spec));
  for (const auto& [m, v] : c) out += scale(lift(g.element(v), spec), GrassmannElement::monomial(spec, m));
  return out;
}

GrassmannMatrix phi_lie_valued(const LieSuperAlgebra& g, const RealStructureMap& phi, const GrassmannMatrix& y) {
  GrassmannSpec spec = require_spec(y);
  auto n = static_cast<std::size_t>(g.dim().total());
  GrassmannMatrix out(n, n, GrassmannElement(spec));
  for (const auto& [m, v] : lie_coefficients(g, y))
    out += scale(lift(g.element(act(phi, v)), spec), GrassmannElement::monomial(spec, m).conjugate());
  return out;
}

GlobalCartanResult global_cartan_check(const LieSuperAlgebra& g, const CartanDecomposition& cd,
                                       const RealStructureMap& sigma, const GroupPoint& point) {
  GrassmannSpec spec = require_spec(point.matrix);
  GrassmannMatrix one = grassmann_identity(spec, g.dim().total());
  if (body(point.matrix) != body(one)) throw std::domain_error("global Cartan check is soul-level only: body must be 1");
  std::size_t n = g.size();
  ScalarMatrix cols(n, cd.k.size() + cd.p.size());
  for (std::size_t c = 0; c < cd.k.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) cols(r, c) = cd.k[c][r];
  for (std::size_t c = 0; c < cd.p.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) cols(r, cd.k.size() + c) = cd.p[c][r];
  SpanCoordinates<GaussianRational> kp(cols);
  auto split = [&](const GrassmannMatrix& x) {
    std::vector<std::pair<Monomial, Vec>> kc, pc;
    for (const auto& [m, v] : lie_coefficients(g, x)) {
      Vec c = *kp.coordinates(v);
      Vec vk(n), vp(n);
      for (std::size_t a = 0; a < cd.k.size(); ++a)
        for (std::size_t r = 0; r < n; ++r) vk[r] += c[a] * cd.k[a][r];
      for (std::size_t a = 0; a < cd.p.size(); ++a)
        for (std::size_t r = 0; r < n; ++r) vp[r] += c[cd.k.size() + a] * cd.p[a][r];
      kc.emplace_back(m, vk);
      pc.emplace_back(m, vp);
    }
    return std::make_pair(from_lie_coefficients(g, spec, kc), from_lie_coefficients(g, spec, pc));
  };

  GlobalCartanResult res;
  GrassmannMatrix lk(one.rows(), one.cols(), GrassmannElement(spec));
  GrassmannMatrix lp = lk;
  res.k = one;
  res.p = one;
  for (; res.iterations < iteration_bound(spec); ++res.iterations) {
    GrassmannMatrix r = invert(res.k) * point.matrix * invert(res.p);
    if (r == one) break;
    auto [rk, rp] = split(log_unipotent(r));
    lk += rk;
    lp += rp;
    res.k = exp_nilpotent(lk);
    res.p = exp_nilpotent(lp);
  }
  res.report.add("product", res.k * res.p == point.matrix);
  res.report.add("k_directions", split(lk).second.is_zero_matrix());
  res.report.add("p_directions", split(lp).first.is_zero_matrix());
  res.report.add("sigma_k", phi_lie_valued(g, sigma, lk) == lk);
  res.report.add("sigma_p", phi_lie_valued(g, sigma, lp) == lp);
  return res;
}

}  // namespace superreal
