#include "superreal/hermitian.hpp"

#include <sstream>
#include <stdexcept>

#include "superreal/linalg.hpp"

namespace superreal {

namespace {

GaussianRational i_power(int k) { return i_pow(k); }

bool is_zero_vec(const GVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::optional<GrassmannSpec> spec_of(const GrassmannMatrix& m) {
  for (const auto& x : m.data())
    if (x.has_spec()) return x.spec();
  return std::nullopt;
}

GrassmannMatrix lift_like(const ScalarMatrix& s, const std::optional<GrassmannSpec>& spec) {
  if (spec) return lift(s, *spec);
  return s.map([](const GaussianRational& z) { return GrassmannElement::constant(z); });
}

}  // namespace

std::vector<int> parities_of(SuperDim dim) {
  std::vector<int> p(static_cast<std::size_t>(dim.total()));
  for (int k = 0; k < dim.total(); ++k) p[k] = dim.parity(k);
  return p;
}

Report verify_supersymmetric(const SuperSymmetricForm& s) {
  Report r;
  bool sym = true;
  bool cons = true;
  std::string sw, cw;
  for (std::size_t k = 0; k < s.parity.size(); ++k)
    for (std::size_t l = 0; l < s.parity.size(); ++l) {
      GaussianRational want = (s.parity[k] & s.parity[l]) ? -s.gram(l, k) : s.gram(l, k);
      if (s.gram(k, l) != want && sym) {
        sym = false;
        sw = "(" + std::to_string(k) + "," + std::to_string(l) + ")";
      }
      if (s.parity[k] != s.parity[l] && !s.gram(k, l).is_zero() && cons) {
        cons = false;
        cw = "(" + std::to_string(k) + "," + std::to_string(l) + ")";
      }
    }
  r.add("supersymmetry", sym, sw);
  r.add("consistency", cons, cw);
  return r;
}

SuperHermitianForm SuperHermitianForm::on(SuperDim dim, ScalarMatrix gram) {
  return {parities_of(dim), std::move(gram)};
}

namespace {

ScalarMatrix restrict_to(const ScalarMatrix& g, const std::vector<int>& parity, int which) {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < parity.size(); ++k)
    if (parity[k] == which) idx.push_back(k);
  ScalarMatrix out(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) out(a, b) = g(idx[a], idx[b]);
  return out;
}

}  // namespace

ScalarMatrix SuperHermitianForm::b0() const { return restrict_to(gram, parity, 0); }

ScalarMatrix SuperHermitianForm::b1() const {
  return restrict_to(gram, parity, 1).scaled(-GaussianRational::i());
}

Report verify_super_hermitian(const SuperHermitianForm& b) {
  Report r;
  bool sym = true;
  bool cons = true;
  std::string sw, cw;
  for (std::size_t k = 0; k < b.size(); ++k)
    for (std::size_t l = 0; l < b.size(); ++l) {
      GaussianRational c = b.gram(l, k).conj();
      GaussianRational want = (b.parity[k] & b.parity[l]) ? -c : c;
      if (b.gram(k, l) != want && sym) {
        sym = false;
        sw = "(" + std::to_string(k) + "," + std::to_string(l) + ")";
      }
      if (b.parity[k] != b.parity[l] && !b.gram(k, l).is_zero() && cons) {
        cons = false;
        cw = "(" + std::to_string(k) + "," + std::to_string(l) + ")";
      }
    }
  r.add("hermitian_symmetry", sym, sw);
  r.add("consistency", cons, cw);
  return r;
}

std::vector<mpq_class> leading_minors(const ScalarMatrix& h) {
  std::vector<mpq_class> out;
  for (std::size_t k = 1; k <= h.rows(); ++k) {
    GaussianRational d = determinant(h.block(0, 0, k, k));
    if (sgn(d.im()) != 0) throw std::domain_error("leading minor is not real: matrix is not Hermitian");
    out.push_back(d.re());
  }
  return out;
}

bool sylvester_positive_definite(const ScalarMatrix& h) {
  for (const auto& m : leading_minors(h))
    if (sgn(m) <= 0) return false;
  return true;
}

DefinitenessReport definiteness(const SuperHermitianForm& b) {
  DefinitenessReport d;
  ScalarMatrix b0 = b.b0();
  ScalarMatrix b1 = b.b1();
  d.b0_minors = leading_minors(b0);
  d.b1_minors = leading_minors(b1);
  d.b0_positive = sylvester_positive_definite(b0);
  d.b1_positive = sylvester_positive_definite(b1);
  d.alternative_positive = d.b0_positive && sylvester_positive_definite(-b1);
  d.negative_definite = sylvester_positive_definite(-b0) && sylvester_positive_definite(-b1);
  return d;
}

bool is_positive_definite(const SuperHermitianForm& b) { return definiteness(b).positive_definite(); }

SuperHermitianForm hermitian_from_susy(const SuperSymmetricForm& s, const SpaceMap& phi, int sign) {
  std::size_t n = s.parity.size();
  if (phi.parity != s.parity) throw std::invalid_argument("form and real structure live on different superspaces");
  // Hypothesis <v, w> = conj <phi v, phi w> on basis pairs: S = conj(P^t S P).
  ScalarMatrix pulled = conj_matrix(phi.matrix.transpose() * s.gram * phi.matrix);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      if (pulled(k, l) != s.gram(k, l))
        throw std::invalid_argument("form is not compatible with the real structure at basis pair (" +
                                    std::to_string(k) + "," + std::to_string(l) + ")");
  int nu = phi.kind == Kind::graded ? 1 : 0;
  GaussianRational unit = sign > 0 ? GaussianRational::i() : -GaussianRational::i();
  ScalarMatrix sp = s.gram * phi.matrix;
  ScalarMatrix g(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      GaussianRational v = sp(k, l);
      if (nu && s.parity[k] && s.parity[l]) v = v * unit;
      g(k, l) = v;
    }
  return {s.parity, g};
}

SuperSymmetricForm symplectic_pairing(int m, int t) {
  SuperDim dim{m, 2 * t};
  ScalarMatrix s(dim.total(), dim.total());
  for (int k = 0; k < m; ++k) s(k, k) = 1;
  for (int k = 0; k < t; ++k) {
    s(m + k, m + t + k) = 1;
    s(m + t + k, m + k) = -1;
  }
  return {parities_of(dim), s};
}

SpaceMap phi_standard(int m, int n) {
  SuperDim dim{m, n};
  return {parities_of(dim), ScalarMatrix::identity(dim.total(), 1), Kind::standard};
}

SpaceMap phi_graded(int m, int t) {
  SuperDim dim{m, 2 * t};
  ScalarMatrix p(dim.total(), dim.total());
  for (int k = 0; k < m; ++k) p(k, k) = 1;
  for (int k = 0; k < t; ++k) {
    p(m + k, m + t + k) = 1;
    p(m + t + k, m + k) = -1;
  }
  return {parities_of(dim), p, Kind::graded};
}

GrassmannElement FunctorialHermitianForm::evaluate(const GVec& x, const GVec& y) const {
  std::size_t n = base_.size();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("vector size does not match the form");
  GVec ty(n);
  for (std::size_t l = 0; l < n; ++l) ty[l] = y[l].conjugate();
  GrassmannElement acc;
  for (std::size_t k = 0; k < n; ++k) {
    if (x[k].is_zero()) continue;
    for (std::size_t l = 0; l < n; ++l) {
      const GaussianRational& h = base_.gram(k, l);
      if (h.is_zero() || ty[l].is_zero()) continue;
      GaussianRational c = h;
      if (base_.parity[k] && base_.parity[l]) c = c * GaussianRational::i();
      acc += (x[k] * ty[l]) * c;
    }
  }
  return acc;
}

SuperHermitianForm FunctorialHermitianForm::restrict() const {
  GrassmannSpec spec{1, kind_};
  std::size_t n = base_.size();
  auto coeff = [&](std::size_t k) {
    return base_.parity[k] ? GrassmannElement::generator(spec, 0) : GrassmannElement(spec, 1);
  };
  ScalarMatrix g(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      GVec x(n, GrassmannElement(spec));
      GVec y(n, GrassmannElement(spec));
      x[k] = coeff(k);
      y[l] = coeff(l);
      GrassmannElement v = evaluate(x, y);
      GrassmannElement unit = coeff(k) * coeff(l).conjugate();
      Monomial mono = unit.terms().front().first;
      GaussianRational scale = unit.coefficient(mono);
      if (base_.parity[k] && base_.parity[l]) scale = scale * GaussianRational::i();
      g(k, l) = v.coefficient(mono) * scale.inverse();
    }
  return {base_.parity, g};
}

FunctorialHermitianForm functorial_extend(const SuperHermitianForm& b, Kind kind) {
  Report r = verify_super_hermitian(b);
  if (!r.find("consistency")->passed) throw std::invalid_argument("functorial extension needs a consistent form");
  return FunctorialHermitianForm(b, kind);
}

Report functorial_axioms(const FunctorialHermitianForm& f, const GVec& x, const GVec& y, const GrassmannElement& a,
                         int degree_x, int degree_y) {
  Report r;
  GVec ax = x;
  GVec ay = y;
  for (auto& v : ax) v = a * v;
  for (auto& v : ay) v = a * v;
  GrassmannElement bxy = f.evaluate(x, y);
  r.add("left_linear", f.evaluate(ax, y) == a * bxy);
  r.add("right_antilinear", f.evaluate(x, ay) == a.conjugate() * bxy);
  int nu = f.kind() == Kind::graded ? 1 : 0;
  GrassmannElement swapped = f.evaluate(y, x).conjugate();
  if (((1 - nu) * degree_x * degree_y) & 1) swapped = -swapped;
  r.add("symmetry", bxy == swapped);
  return r;
}

GrassmannMatrix block_part(const GrassmannMatrix& m, const std::vector<int>& parity, int part) {
  GrassmannMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (((parity[i] + parity[j]) & 1) == part) out(i, j) = m(i, j);
  return out;
}

GrassmannMatrix adjoint_star(const GrassmannMatrix& m, const SuperHermitianForm& b, Kind kind) {
  std::size_t n = b.size();
  if (m.rows() != n || m.cols() != n) throw std::invalid_argument("matrix size does not match the form");
  ScalarMatrix c(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) c(k, l) = b.gram(k, l) * i_power(b.parity[k] * b.parity[l]);
  ScalarMatrix cinv;
  try {
    cinv = inverse(c);
  } catch (const std::domain_error&) {
    throw std::domain_error("adjoint needs a non-degenerate form");
  }
  auto spec = spec_of(m);
  GrassmannMatrix lc = lift_like(c, spec);
  GrassmannMatrix lcinv = lift_like(cinv, spec);
  int nu = kind == Kind::graded ? 1 : 0;
  GrassmannMatrix out(n, n);
  for (int part = 0; part < 2; ++part) {
    GrassmannMatrix t = block_part(m, b.parity, part).transpose();
    if (t.is_zero_matrix()) continue;
    if (nu && part)
      for (std::size_t k = 0; k < n; ++k)
        if (b.parity[k])
          for (std::size_t l = 0; l < n; ++l) t(k, l) = -t(k, l);
    out += tilde_inverse(lcinv * t * lc);
  }
  return out;
}

GrassmannMatrix circledast(const GrassmannMatrix& m, const SuperHermitianForm& b, Kind kind) {
  if (kind == Kind::graded) return -adjoint_star(m, b, kind);
  GrassmannMatrix s0 = adjoint_star(block_part(m, b.parity, 0), b, kind);
  GrassmannMatrix s1 = adjoint_star(block_part(m, b.parity, 1), b, kind);
  return -s0 + s1.scaled(GaussianRational::i());
}

RealStructureMap circledast_structure(const LieSuperAlgebra& gl, const SuperHermitianForm& b, Kind kind) {
  if (gl.family() != Family::gl) throw std::invalid_argument("circledast structure lives on gl(m|n)");
  std::size_t n = gl.size();
  ScalarMatrix out(n, n);
  GrassmannSpec s0{0, kind};
  GrassmannSpec s1{1, kind};
  GrassmannElement xp = GrassmannElement::generator(s1, 0);
  for (std::size_t j = 0; j < n; ++j) {
    ScalarMatrix img;
    if (gl.parity(j) == 0) {
      img = body(circledast(lift(gl.basis(j), s0), b, kind));
    } else {
      GrassmannMatrix r = circledast(scale(lift(gl.basis(j), s1), xp), b, kind);
      // phi_A(xi+ E) = xi- phi(E).
      img = r.map([](const GrassmannElement& x) { return x.coefficient(0b10); });
    }
    Vec c = gl.coordinates_or_throw(img);
    for (std::size_t k = 0; k < n; ++k) out(k, j) = c[k];
  }
  return {out, kind};
}

bool UnitaryAlgebra::contains(const GrassmannMatrix& m) const {
  return circledast(m, form, spec.kind) == m;
}

UnitaryAlgebra unitary_algebra(const SuperHermitianForm& b, SuperDim dim, GrassmannSpec spec) {
  if (spec.kind == Kind::plain) throw std::invalid_argument("unitary algebra needs a conjugation on A");
  MatrixLayout layout(dim, spec);
  auto f = [&](const std::vector<GaussianRational>& x) {
    return layout.flatten(circledast(layout.unflatten(x), b, spec.kind));
  };
  UnitaryAlgebra u{dim, spec, b, {}};
  for (const auto& v : real_fixed_space(layout.size(), f)) u.basis.push_back(layout.unflatten(v));
  return u;
}

SuperHermitianForm killing_hermitian(const LieSuperAlgebra& g, const ScalarMatrix& kappa, const RealStructureMap& phi) {
  std::size_t n = g.size();
  ScalarMatrix kp = kappa * phi.matrix;
  bool graded = phi.kind == Kind::graded;
  ScalarMatrix out(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      GaussianRational v = kp(a, b);
      if (graded && g.parity(a) && g.parity(b)) v = -GaussianRational::i() * v;
      out(a, b) = v;
    }
  return {g.parities(), out};
}

namespace {

// Bracket of U (A-coefficients) with x e_k.
GVec bracket_with(const LieSuperAlgebra& g, const GVec& u, const GrassmannElement& x, std::size_t k, bool koszul,
                  GrassmannSpec spec) {
  std::size_t n = g.size();
  GVec out(n, GrassmannElement(spec));
  for (std::size_t a = 0; a < n; ++a) {
    if (u[a].is_zero()) continue;
    GrassmannElement c = u[a] * x;
    if (koszul && g.parity(a) && g.parity(k)) c = -c;
    const Vec& br = g.bracket_basis(a, k);
    for (std::size_t r = 0; r < n; ++r)
      if (!br[r].is_zero()) out[r] += c * br[r];
  }
  return out;
}

}  // namespace

CompactCertificate compact_certificate(const LieSuperAlgebra& g, const RealStructureMap& phi) {
  CompactCertificate cert;
  cert.algebra = g.label();
  cert.kind = phi.kind;
  ScalarMatrix kappa = killing_form(g);
  if (determinant(kappa).is_zero()) throw std::domain_error("Killing form of " + g.label() + " is degenerate");
  cert.form = killing_hermitian(g, kappa, phi);
  cert.super_hermitian = verify_super_hermitian(cert.form);
  cert.definite = definiteness(cert.form);
  cert.even_part = even_fixed_compactness(g, phi);

  std::size_t n = g.size();
  GrassmannSpec s1{1, phi.kind};
  GrassmannSpec s2{2, phi.kind};
  std::vector<std::pair<std::size_t, Monomial>> slots;
  for (std::size_t k = 0; k < n; ++k)
    for (Monomial m : monomials_of_parity(s1, g.parity(k))) slots.emplace_back(k, m);
  auto unflatten = [&](const std::vector<GaussianRational>& v, GrassmannSpec spec) {
    GVec out(n, GrassmannElement(spec));
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (!v[s].is_zero()) out[slots[s].first] += GrassmannElement::monomial(spec, slots[s].second, v[s]);
    return out;
  };
  auto f = [&](const std::vector<GaussianRational>& v) {
    GVec x = unflatten(v, s1);
    GVec img(n, GrassmannElement(s1));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!phi.matrix(j, k).is_zero() && !x[k].is_zero()) img[j] += x[k].conjugate() * phi.matrix(j, k);
    std::vector<GaussianRational> out(slots.size());
    for (std::size_t s = 0; s < slots.size(); ++s) out[s] = img[slots[s].first].coefficient(slots[s].second);
    return out;
  };
  std::vector<GVec> us;
  for (const auto& v : real_fixed_space(slots.size(), f)) us.push_back(unflatten(v, s2));

  FunctorialHermitianForm fb(cert.form, phi.kind);
  int nu = phi.kind == Kind::graded ? 1 : 0;
  auto coeff = [&](std::size_t k) {
    return g.parity(k) ? GrassmannElement::generator(s2, 2) : GrassmannElement(s2, 1);
  };
  for (int world = 0; world < 2; ++world) {
    bool koszul = world == 1;
    bool ok = true;
    std::size_t checks = 0;
    for (std::size_t ui = 0; ui < us.size() && ok; ++ui) {
      for (int part = 0; part < 2 && ok; ++part) {
        GVec u = us[ui];
        for (std::size_t a = 0; a < n; ++a)
          if (g.parity(a) != part) u[a] = GrassmannElement(s2);
        if (is_zero_vec(u)) continue;
        for (std::size_t k = 0; k < n && ok; ++k)
          for (std::size_t l = 0; l < n && ok; ++l) {
            GVec x(n, GrassmannElement(s2));
            GVec y(n, GrassmannElement(s2));
            x[k] = coeff(k);
            y[l] = coeff(l);
            GrassmannElement lhs = fb.evaluate(bracket_with(g, u, coeff(k), k, koszul, s2), y);
            GrassmannElement rhs = fb.evaluate(x, bracket_with(g, u, coeff(l), l, koszul, s2));
            if (((1 - nu) * part * g.parity(k)) & 1) rhs = -rhs;
            ++checks;
            if (!(lhs + rhs).is_zero()) {
              ok = false;
              std::ostringstream os;
              os << (koszul ? "tensor" : "matrix") << " world: U#" << ui << " part " << part << ", X=e" << k
                 << ", Y=e" << l;
              if (cert.embed_witness.empty()) cert.embed_witness = os.str();
            }
          }
      }
    }
    (koszul ? cert.embeds_tensor_world : cert.embeds_matrix_world) = ok;
    cert.embed_checks += checks;
  }
  return cert;
}

}  // namespace superreal
