#include "superreal/super_linear.hpp"

#include <stdexcept>

namespace superreal {

int matrix_parity(const ScalarMatrix& m, SuperDim dim) {
  bool has_diag = false;
  bool has_off = false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      if (dim.parity(static_cast<int>(i)) == dim.parity(static_cast<int>(j)))
        has_diag = true;
      else
        has_off = true;
    }
  }
  if (has_diag && has_off) return -1;
  return has_off ? 1 : 0;
}

ScalarMatrix elementary(SuperDim dim, int i, int j, const GaussianRational& c) {
  ScalarMatrix e(dim.total(), dim.total());
  e(i, j) = c;
  return e;
}

ScalarMatrix superbracket(const ScalarMatrix& x, int px, const ScalarMatrix& y, int py) {
  ScalarMatrix xy = x * y;
  ScalarMatrix yx = y * x;
  if (px == 1 && py == 1) return xy + yx;
  return xy - yx;
}

ScalarMatrix conj_matrix(const ScalarMatrix& m) {
  return m.map([](const GaussianRational& z) { return z.conj(); });
}

GrassmannMatrix grassmann_identity(GrassmannSpec spec, int n) {
  return GrassmannMatrix::identity(n, GrassmannElement(spec, 1));
}

GrassmannMatrix lift(const ScalarMatrix& m, GrassmannSpec spec) {
  return m.map([&](const GaussianRational& z) { return GrassmannElement(spec, z); });
}

GrassmannMatrix tilde(const GrassmannMatrix& m) {
  return m.map([](const GrassmannElement& x) { return x.conjugate(); });
}

GrassmannMatrix tilde_inverse(const GrassmannMatrix& m) {
  return m.map([](const GrassmannElement& x) { return conjugate_inverse(x); });
}

ScalarMatrix body(const GrassmannMatrix& m) {
  return m.map([](const GrassmannElement& x) { return x.body(); });
}

GrassmannMatrix scale(const GrassmannMatrix& m, const GrassmannElement& a) {
  return m.map([&](const GrassmannElement& x) { return a * x; });
}

bool is_even_supermatrix(const GrassmannMatrix& m, SuperDim dim) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      bool diag = dim.parity(static_cast<int>(i)) == dim.parity(static_cast<int>(j));
      if (diag ? !m(i, j).is_even() : !m(i, j).is_odd()) return false;
    }
  return true;
}

bool is_odd_supermatrix(const GrassmannMatrix& m, SuperDim dim) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      bool diag = dim.parity(static_cast<int>(i)) == dim.parity(static_cast<int>(j));
      if (diag ? !m(i, j).is_odd() : !m(i, j).is_even()) return false;
    }
  return true;
}

namespace {

GrassmannElement one_like(const GrassmannMatrix& m) {
  for (const auto& x : m.data())
    if (x.has_spec()) return GrassmannElement(x.spec(), 1);
  return GrassmannElement::constant(1);
}

int power_bound(const GrassmannMatrix& m) {
  int pairs = 0;
  for (const auto& x : m.data())
    if (x.has_spec()) {
      pairs = x.spec().pairs;
      break;
    }
  return static_cast<int>(m.rows()) * (2 * pairs + 1) + 1;
}

}  // namespace

bool is_nilpotent(const GrassmannMatrix& m) {
  ScalarMatrix b = body(m);
  ScalarMatrix p = b;
  for (std::size_t k = 1; k < b.rows(); ++k) p = p * b;
  return b.rows() == 0 || p.is_zero_matrix();
}

GrassmannMatrix exp_nilpotent(const GrassmannMatrix& m) {
  if (!m.square()) throw std::invalid_argument("exp of a non-square matrix");
  if (!is_nilpotent(m)) throw std::domain_error("exp series does not terminate: matrix is not nilpotent");
  GrassmannElement one = one_like(m);
  GrassmannMatrix sum = GrassmannMatrix::identity(m.rows(), one);
  GrassmannMatrix term = sum;
  int bound = power_bound(m);
  for (int k = 1; k <= bound; ++k) {
    term = (term * m).scaled(GaussianRational(mpq_class(1, k)));
    if (term.is_zero_matrix()) return sum;
    sum += term;
  }
  throw std::domain_error("exp series does not terminate");
}

GrassmannMatrix log_unipotent(const GrassmannMatrix& u) {
  if (!u.square()) throw std::invalid_argument("log of a non-square matrix");
  GrassmannElement one = one_like(u);
  GrassmannMatrix x = u - GrassmannMatrix::identity(u.rows(), one);
  if (!is_nilpotent(x)) throw std::domain_error("log series does not terminate: U - 1 is not nilpotent");
  GrassmannMatrix sum(u.rows(), u.cols());
  GrassmannMatrix power = x;
  int bound = power_bound(x);
  for (int k = 1; k <= bound; ++k) {
    if (power.is_zero_matrix()) return sum;
    GaussianRational c(mpq_class((k % 2) ? 1 : -1, k));
    sum += power.scaled(c);
    power = power * x;
  }
  throw std::domain_error("log series does not terminate");
}

GrassmannMatrix invert(const GrassmannMatrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse of a non-square matrix");
  ScalarMatrix b = body(m);
  ScalarMatrix binv = inverse(b);
  GrassmannElement one = one_like(m);
  GrassmannSpec spec = one.spec();
  GrassmannMatrix lb = one.has_spec() ? lift(b, spec) : b.map([](const GaussianRational& z) {
    return GrassmannElement::constant(z);
  });
  GrassmannMatrix lbinv = one.has_spec() ? lift(binv, spec) : binv.map([](const GaussianRational& z) {
    return GrassmannElement::constant(z);
  });
  GrassmannMatrix n = lbinv * (m - lb);
  GrassmannMatrix sum = GrassmannMatrix::identity(m.rows(), one);
  GrassmannMatrix power = sum;
  int bound = power_bound(m);
  for (int k = 1; k <= bound; ++k) {
    power = -(power * n);
    if (power.is_zero_matrix()) break;
    sum += power;
  }
  return sum * lbinv;
}

bool is_valid_point(const APoint& p) {
  if (static_cast<int>(p.coords.size()) != p.dim.total()) return false;
  for (int k = 0; k < p.dim.total(); ++k) {
    const GrassmannElement& c = p.coords[k];
    if (p.dim.parity(k) == 0 ? !c.is_even() : !c.is_odd()) return false;
  }
  return true;
}

APoint apply_real_structure(const SpaceStructure& phi, const APoint& p) {
  if (!(phi.dim == p.dim)) throw std::invalid_argument("real structure and point dimensions differ");
  for (const auto& c : p.coords)
    if (c.has_spec() && c.spec().kind != phi.kind)
      throw std::invalid_argument("real structure kind does not match the coefficient algebra");
  APoint out{p.dim, std::vector<GrassmannElement>(p.coords.size())};
  std::vector<GrassmannElement> conj_coords(p.coords.size());
  for (std::size_t k = 0; k < p.coords.size(); ++k) conj_coords[k] = p.coords[k].conjugate();
  for (std::size_t j = 0; j < p.coords.size(); ++j)
    for (std::size_t k = 0; k < p.coords.size(); ++k)
      if (!phi.matrix(j, k).is_zero() && !conj_coords[k].is_zero())
        out.coords[j] += conj_coords[k] * phi.matrix(j, k);
  return out;
}

std::vector<std::vector<GaussianRational>> real_fixed_space(
    std::size_t n, const std::function<std::vector<GaussianRational>(const std::vector<GaussianRational>&)>& f) {
  Matrix<mpq_class> r(2 * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (int part = 0; part < 2; ++part) {
      std::vector<GaussianRational> e(n);
      e[k] = part == 0 ? GaussianRational(1) : GaussianRational::i();
      std::vector<GaussianRational> img = f(e);
      std::size_t col = part * n + k;
      for (std::size_t j = 0; j < n; ++j) {
        r(j, col) = img[j].re();
        r(n + j, col) = img[j].im();
      }
      r(col, col) -= 1;
    }
  }
  std::vector<std::vector<GaussianRational>> out;
  for (const auto& v : nullspace(r)) {
    std::vector<GaussianRational> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = GaussianRational(v[j], v[n + j]);
    out.push_back(std::move(x));
  }
  return out;
}

PointLayout::PointLayout(SuperDim d, GrassmannSpec s) : dim(d), spec(s) {
  for (int k = 0; k < d.total(); ++k)
    for (Monomial m : monomials_of_parity(s, d.parity(k))) slots.emplace_back(k, m);
}

std::vector<GaussianRational> PointLayout::flatten(const APoint& p) const {
  std::vector<GaussianRational> v(slots.size());
  for (std::size_t s = 0; s < slots.size(); ++s) v[s] = p.coords[slots[s].first].coefficient(slots[s].second);
  return v;
}

APoint PointLayout::unflatten(const std::vector<GaussianRational>& v) const {
  APoint p{dim, std::vector<GrassmannElement>(dim.total(), GrassmannElement(spec))};
  for (std::size_t s = 0; s < slots.size(); ++s)
    if (!v[s].is_zero()) p.coords[slots[s].first] += GrassmannElement::monomial(spec, slots[s].second, v[s]);
  return p;
}

std::vector<APoint> fixed_points_basis(const SpaceStructure& phi, GrassmannSpec spec) {
  if (phi.kind != spec.kind) throw std::invalid_argument("real structure kind does not match the coefficient algebra");
  PointLayout layout(phi.dim, spec);
  auto f = [&](const std::vector<GaussianRational>& x) {
    return layout.flatten(apply_real_structure(phi, layout.unflatten(x)));
  };
  std::vector<APoint> out;
  for (const auto& v : real_fixed_space(layout.size(), f)) out.push_back(layout.unflatten(v));
  return out;
}

MatrixLayout::MatrixLayout(SuperDim d, GrassmannSpec s) : dim(d), spec(s) {
  for (int i = 0; i < d.total(); ++i)
    for (int j = 0; j < d.total(); ++j)
      for (Monomial m : monomials_of_parity(s, (d.parity(i) + d.parity(j)) % 2)) slots.emplace_back(i, j, m);
}

std::vector<GaussianRational> MatrixLayout::flatten(const GrassmannMatrix& m) const {
  std::vector<GaussianRational> v(slots.size());
  for (std::size_t s = 0; s < slots.size(); ++s) {
    auto [i, j, mono] = slots[s];
    v[s] = m(i, j).coefficient(mono);
  }
  return v;
}

GrassmannMatrix MatrixLayout::unflatten(const std::vector<GaussianRational>& v) const {
  GrassmannMatrix m(dim.total(), dim.total(), GrassmannElement(spec));
  for (std::size_t s = 0; s < slots.size(); ++s) {
    if (v[s].is_zero()) continue;
    auto [i, j, mono] = slots[s];
    m(i, j) += GrassmannElement::monomial(spec, mono, v[s]);
  }
  return m;
}

}  // namespace superreal
