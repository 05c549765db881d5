#include "superreal/lie.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace superreal {

const char* family_name(Family f) {
  switch (f) {
    case Family::gl:
      return "gl";
    case Family::sl:
      return "sl";
    case Family::osp:
      return "osp";
  }
  return "gl";
}

namespace {

Vec flatten(const ScalarMatrix& m) { return m.data(); }

ScalarMatrix columns_of(const std::vector<ScalarMatrix>& basis, std::size_t n) {
  ScalarMatrix cols(n * n, basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto& d = basis[k].data();
    for (std::size_t r = 0; r < d.size(); ++r) cols(r, k) = d[r];
  }
  return cols;
}

}  // namespace

LieSuperAlgebra::LieSuperAlgebra(Family family, int p, int q, SuperDim dim, std::vector<ScalarMatrix> basis,
                                 std::vector<int> parity)
    : family_(family), p_(p), q_(q), dim_(dim), basis_(std::move(basis)), parity_(std::move(parity)) {
  std::size_t n = static_cast<std::size_t>(dim_.total());
  coords_ = SpanCoordinates<GaussianRational>(columns_of(basis_, n));
  table_.assign(basis_.size(), std::vector<Vec>(basis_.size()));
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      ScalarMatrix br = superbracket(basis_[i], parity_[i], basis_[j], parity_[j]);
      auto c = coords_.coordinates(flatten(br));
      if (!c) throw std::logic_error("basis is not closed under the superbracket");
      table_[i][j] = std::move(*c);
    }
  }
}

std::string LieSuperAlgebra::label() const {
  std::ostringstream os;
  os << family_name(family_) << "(" << p_ << "|" << q_ << ")";
  return os.str();
}

std::size_t LieSuperAlgebra::even_dim() const {
  return static_cast<std::size_t>(std::count(parity_.begin(), parity_.end(), 0));
}

std::optional<Vec> LieSuperAlgebra::coordinates(const ScalarMatrix& m) const {
  return coords_.coordinates(flatten(m));
}

Vec LieSuperAlgebra::coordinates_or_throw(const ScalarMatrix& m) const {
  auto c = coordinates(m);
  if (!c) throw std::invalid_argument("matrix is not in " + label());
  return *c;
}

ScalarMatrix LieSuperAlgebra::element(const Vec& coords) const {
  std::size_t n = static_cast<std::size_t>(dim_.total());
  ScalarMatrix out(n, n);
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (!coords[k].is_zero()) out += basis_[k].scaled(coords[k]);
  return out;
}

Vec LieSuperAlgebra::unit(std::size_t i) const {
  Vec v(size());
  v[i] = 1;
  return v;
}

Vec LieSuperAlgebra::bracket(const Vec& x, const Vec& y) const {
  Vec out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < size(); ++j) {
      if (y[j].is_zero()) continue;
      GaussianRational c = x[i] * y[j];
      const Vec& b = table_[i][j];
      for (std::size_t k = 0; k < size(); ++k)
        if (!b[k].is_zero()) out[k] += c * b[k];
    }
  }
  return out;
}

ScalarMatrix LieSuperAlgebra::ad(std::size_t i) const {
  ScalarMatrix a(size(), size());
  for (std::size_t j = 0; j < size(); ++j)
    for (std::size_t k = 0; k < size(); ++k) a(k, j) = table_[i][j][k];
  return a;
}

ScalarMatrix LieSuperAlgebra::ad(const Vec& x) const {
  ScalarMatrix a(size(), size());
  for (std::size_t i = 0; i < size(); ++i)
    if (!x[i].is_zero()) a += ad(i).scaled(x[i]);
  return a;
}

int LieSuperAlgebra::vector_parity(const Vec& x) const {
  bool even = false;
  bool odd = false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (x[i].is_zero()) continue;
    (parity_[i] ? odd : even) = true;
  }
  if (even && odd) return -1;
  return odd ? 1 : 0;
}

LieSuperAlgebra build_gl(int m, int n) {
  if (m < 0 || n < 0 || m + n < 1) throw std::invalid_argument("gl(m|n) needs m, n >= 0 and m + n >= 1");
  SuperDim dim{m, n};
  std::vector<ScalarMatrix> basis;
  std::vector<int> parity;
  for (int i = 0; i < dim.total(); ++i)
    for (int j = 0; j < dim.total(); ++j) {
      basis.push_back(elementary(dim, i, j));
      parity.push_back((dim.parity(i) + dim.parity(j)) % 2);
    }
  return LieSuperAlgebra(Family::gl, m, n, dim, std::move(basis), std::move(parity));
}

LieSuperAlgebra build_sl(int m, int n) {
  if (m < 0 || n < 0 || m + n < 2) throw std::invalid_argument("sl(m|n) needs m, n >= 0 and m + n >= 2");
  if (m == n)
    throw std::invalid_argument("sl(" + std::to_string(m) + "|" + std::to_string(n) +
                                ") is excluded: its Killing form vanishes identically");
  SuperDim dim{m, n};
  int total = dim.total();
  std::vector<ScalarMatrix> basis;
  std::vector<int> parity;
  for (int i = 0; i < total; ++i) {
    for (int j = 0; j < total; ++j) {
      if (i == j) {
        if (i == total - 1) continue;
        // E_ii - (-1)^{p_i + p_{i+1}} E_{i+1,i+1} has zero supertrace.
        ScalarMatrix h = elementary(dim, i, i);
        h(i + 1, i + 1) = dim.parity(i) == dim.parity(i + 1) ? GaussianRational(-1) : GaussianRational(1);
        basis.push_back(h);
        parity.push_back(0);
      } else {
        basis.push_back(elementary(dim, i, j));
        parity.push_back((dim.parity(i) + dim.parity(j)) % 2);
      }
    }
  }
  return LieSuperAlgebra(Family::sl, m, n, dim, std::move(basis), std::move(parity));
}

ScalarMatrix osp_form(int m, int t) {
  SuperDim dim{m, 2 * t};
  ScalarMatrix g(dim.total(), dim.total());
  for (int k = 0; k < m; ++k) g(k, m - 1 - k) = 1;
  for (int k = 0; k < t; ++k) {
    g(m + k, m + t + k) = -1;
    g(m + t + k, m + k) = 1;
  }
  return g;
}

LieSuperAlgebra build_osp(int m, int two_t) {
  if (m < 1 || two_t < 2 || two_t % 2 != 0) throw std::invalid_argument("osp(m|2t) needs m >= 1 and t >= 1");
  int t = two_t / 2;
  SuperDim dim{m, two_t};
  int n = dim.total();
  ScalarMatrix g = osp_form(m, t);
  std::vector<ScalarMatrix> basis;
  std::vector<int> parity;
  for (int par = 0; par < 2; ++par) {
    std::vector<std::pair<int, int>> positions;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if ((dim.parity(i) + dim.parity(j)) % 2 == par) positions.emplace_back(i, j);
    // Rows: conditions (X^t G)_{uv} + (-1)^{|X||u|} (G X)_{uv} = 0 for all u, v.
    Matrix<mpq_class> sys(static_cast<std::size_t>(n * n), positions.size());
    for (std::size_t c = 0; c < positions.size(); ++c) {
      auto [a, b] = positions[c];
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
          mpq_class coeff = 0;
          // (X^t G)_{uv} = sum_k X_{ku} G_{kv}: X_{ab} contributes when b == u.
          if (b == u) coeff += g(a, v).re();
          // (G X)_{uv} = sum_k G_{uk} X_{kv}: X_{ab} contributes when b == v.
          if (b == v) {
            mpq_class gx = g(u, a).re();
            if (par == 1 && dim.parity(u) == 1) gx = -gx;
            coeff += gx;
          }
          sys(static_cast<std::size_t>(u * n + v), c) = coeff;
        }
      }
    }
    for (const auto& v : nullspace(sys)) {
      ScalarMatrix x(n, n);
      for (std::size_t c = 0; c < positions.size(); ++c) x(positions[c].first, positions[c].second) = v[c];
      basis.push_back(x);
      parity.push_back(par);
    }
  }
  LieSuperAlgebra out(Family::osp, m, two_t, dim, std::move(basis), std::move(parity));
  out.set_form(g);
  return out;
}

std::optional<std::array<std::size_t, 3>> super_jacobi_violation(const LieSuperAlgebra& g) {
  // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      for (std::size_t k = 0; k < g.size(); ++k) {
        Vec lhs = g.bracket(g.unit(i), g.bracket_basis(j, k));
        Vec a = g.bracket(g.bracket_basis(i, j), g.unit(k));
        Vec b = g.bracket(g.unit(j), g.bracket_basis(i, k));
        bool sign = g.parity(i) == 1 && g.parity(j) == 1;
        for (std::size_t r = 0; r < g.size(); ++r) {
          GaussianRational rhs = sign ? a[r] - b[r] : a[r] + b[r];
          if (lhs[r] != rhs) return std::array<std::size_t, 3>{i, j, k};
        }
      }
  return std::nullopt;
}

bool bracket_closed(const LieSuperAlgebra& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      ScalarMatrix br = superbracket(g.basis(i), g.parity(i), g.basis(j), g.parity(j));
      auto c = g.coordinates(br);
      if (!c || g.element(*c) != br) return false;
      int expected = (g.parity(i) + g.parity(j)) % 2;
      int got = g.vector_parity(*c);
      if (got == -1 || (!br.is_zero_matrix() && got != expected)) return false;
    }
  return true;
}

ScalarMatrix killing_form(const LieSuperAlgebra& g) {
  std::size_t n = g.size();
  std::vector<ScalarMatrix> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ads.push_back(g.ad(i));
  ScalarMatrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      GaussianRational acc;
      for (std::size_t r = 0; r < n; ++r) {
        GaussianRational d;
        for (std::size_t s = 0; s < n; ++s)
          if (!ads[i](r, s).is_zero() && !ads[j](s, r).is_zero()) d += ads[i](r, s) * ads[j](s, r);
        if (g.parity(r) == 0)
          acc += d;
        else
          acc -= d;
      }
      k(i, j) = acc;
    }
  return k;
}

GaussianRational killing(const LieSuperAlgebra& g, const ScalarMatrix& kappa, const Vec& x, const Vec& y) {
  GaussianRational acc;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.size(); ++j)
      if (!y[j].is_zero() && !kappa(i, j).is_zero()) acc += x[i] * kappa(i, j) * y[j];
  }
  return acc;
}

std::optional<std::size_t> RootDecomposition::find(const Vec& weight) const {
  for (std::size_t r = 0; r < roots.size(); ++r)
    if (roots[r].weight == weight) return r;
  return std::nullopt;
}

namespace {

// Elements of g supported on the given positions.
std::vector<Vec> supported_on(const LieSuperAlgebra& g, const std::vector<bool>& allowed) {
  std::size_t n = static_cast<std::size_t>(g.dim().total());
  std::vector<std::size_t> forbidden;
  for (std::size_t p = 0; p < n * n; ++p)
    if (!allowed[p]) forbidden.push_back(p);
  ScalarMatrix sys(forbidden.size(), g.size());
  for (std::size_t k = 0; k < g.size(); ++k)
    for (std::size_t r = 0; r < forbidden.size(); ++r) sys(r, k) = g.basis(k).data()[forbidden[r]];
  return nullspace(sys);
}

// Regular diagonal element fixing the distinguished positive system.
std::vector<mpq_class> positivity_functional(const LieSuperAlgebra& g) {
  int n = g.dim().total();
  std::vector<mpq_class> d(n);
  if (g.family() != Family::osp) {
    for (int i = 0; i < n; ++i) d[i] = n - i;
    return d;
  }
  int m = g.param_p();
  int t = g.param_q() / 2;
  int r = m / 2;
  for (int j = 0; j < r; ++j) {
    mpq_class b = m == 2 ? mpq_class(t + 1) : mpq_class(r - j);
    d[j] = b;
    d[m - 1 - j] = -b;
  }
  for (int k = 0; k < t; ++k) {
    mpq_class a = m == 2 ? mpq_class(t - k) : mpq_class(r + t - k);
    d[m + k] = a;
    d[m + t + k] = -a;
  }
  return d;
}

Vec normalize_first(Vec v, const LieSuperAlgebra& g) {
  ScalarMatrix m = g.element(v);
  for (const auto& x : m.data()) {
    if (x.is_zero()) continue;
    GaussianRational inv = x.inverse();
    for (auto& c : v) c = c * inv;
    break;
  }
  return v;
}

std::pair<std::size_t, std::size_t> first_position(const ScalarMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return {i, j};
  return {m.rows(), m.cols()};
}

}  // namespace

RootDecomposition root_decomposition(const LieSuperAlgebra& g) {
  std::size_t n = static_cast<std::size_t>(g.dim().total());
  RootDecomposition rd;
  std::vector<bool> diag(n * n, false);
  for (std::size_t i = 0; i < n; ++i) diag[i * n + i] = true;
  rd.cartan = supported_on(g, diag);
  std::vector<ScalarMatrix> hs;
  for (const auto& h : rd.cartan) hs.push_back(g.element(h));

  // Weight of each off-diagonal position.
  std::map<std::vector<std::string>, std::vector<std::size_t>> classes;
  std::map<std::vector<std::string>, Vec> class_weight;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Vec w;
      std::vector<std::string> key;
      for (const auto& h : hs) {
        w.push_back(h(i, i) - h(j, j));
        key.push_back(w.back().to_string());
      }
      classes[key].push_back(i * n + j);
      class_weight[key] = w;
    }

  std::vector<mpq_class> d = positivity_functional(g);
  std::size_t covered = rd.cartan.size();
  for (const auto& [key, positions] : classes) {
    const Vec& w = class_weight[key];
    bool zero_weight = std::all_of(w.begin(), w.end(), [](const GaussianRational& z) { return z.is_zero(); });
    std::vector<bool> allowed(n * n, false);
    for (std::size_t p : positions) allowed[p] = true;
    std::vector<Vec> space = supported_on(g, allowed);
    if (space.empty()) continue;
    if (zero_weight) throw std::domain_error("Cartan action is not diagonalizable on off-diagonal positions");
    if (space.size() != 1) throw std::domain_error("root space of dimension > 1");
    Root root;
    root.weight = w;
    root.vector = normalize_first(space.front(), g);
    root.matrix = g.element(root.vector);
    root.parity = g.vector_parity(root.vector);
    auto [pi, pj] = first_position(root.matrix);
    mpq_class value = d[pi] - d[pj];
    if (sgn(value) == 0) throw std::domain_error("positivity functional is not regular");
    root.positive = sgn(value) > 0;
    rd.roots.push_back(std::move(root));
    ++covered;
  }
  if (covered != g.size()) throw std::domain_error("root decomposition does not span the algebra");

  // Simple roots: positive roots that are not sums of two positive roots.
  std::vector<std::size_t> simple;
  for (std::size_t a = 0; a < rd.roots.size(); ++a) {
    if (!rd.roots[a].positive) continue;
    bool decomposable = false;
    for (std::size_t b = 0; b < rd.roots.size() && !decomposable; ++b) {
      if (!rd.roots[b].positive) continue;
      for (std::size_t c = b; c < rd.roots.size() && !decomposable; ++c) {
        if (!rd.roots[c].positive) continue;
        Vec sum(rd.cartan.size());
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = rd.roots[b].weight[k] + rd.roots[c].weight[k];
        if (sum == rd.roots[a].weight) decomposable = true;
      }
    }
    if (!decomposable) simple.push_back(a);
  }
  std::sort(simple.begin(), simple.end(), [&](std::size_t a, std::size_t b) {
    return first_position(rd.roots[a].matrix) < first_position(rd.roots[b].matrix);
  });
  rd.simple = simple;
  return rd;
}

std::size_t bracket_span_dimension(const LieSuperAlgebra& g, const std::vector<Vec>& gens) {
  std::vector<Vec> span;
  auto rank_of = [&](const std::vector<Vec>& vs) {
    ScalarMatrix m(vs.size(), g.size());
    for (std::size_t r = 0; r < vs.size(); ++r)
      for (std::size_t c = 0; c < g.size(); ++c) m(r, c) = vs[r][c];
    return rank(m);
  };
  auto try_add = [&](const Vec& v) {
    span.push_back(v);
    if (rank_of(span) < span.size()) {
      span.pop_back();
      return false;
    }
    return true;
  };
  for (const auto& v : gens) try_add(v);
  std::size_t frontier = 0;
  while (frontier < span.size()) {
    std::size_t end = span.size();
    for (std::size_t a = frontier; a < end; ++a)
      for (std::size_t b = 0; b < span.size(); ++b) try_add(g.bracket(span[a], span[b]));
    frontier = end;
  }
  return span.size();
}

ChevalleySet chevalley_generators(const LieSuperAlgebra& g, const RootDecomposition& rd) {
  ChevalleySet cs;
  for (std::size_t idx = 0; idx < rd.simple.size(); ++idx) {
    const Root& a = rd.roots[rd.simple[idx]];
    Vec neg(a.weight.size());
    for (std::size_t k = 0; k < neg.size(); ++k) neg[k] = -a.weight[k];
    auto r = rd.find(neg);
    if (!r) throw std::domain_error("negative simple root missing");
    cs.x_plus.push_back(a.vector);
    cs.x_minus.push_back(rd.roots[*r].vector);
    cs.h.push_back(g.bracket(a.vector, rd.roots[*r].vector));
    if (a.parity == 1) cs.odd.push_back(static_cast<int>(idx));
  }
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < cs.x_plus.size(); ++i) {
    gens.push_back(cs.x_plus[i]);
    gens.push_back(cs.x_minus[i]);
  }
  std::size_t reached = bracket_span_dimension(g, gens);
  if (reached < g.size()) {
    // Complete with Cartan directions outside the generated span.
    std::vector<Vec> current = gens;
    for (const auto& h : rd.cartan) {
      std::vector<Vec> trial = current;
      trial.push_back(h);
      if (bracket_span_dimension(g, trial) > bracket_span_dimension(g, current)) {
        current = trial;
        cs.extra_cartan.push_back(h);
      }
    }
    if (bracket_span_dimension(g, current) < g.size()) {
      std::ostringstream os;
      os << "Chevalley generators reach dimension " << bracket_span_dimension(g, current) << " of " << g.size();
      throw std::domain_error(os.str());
    }
  }
  return cs;
}

ScalarMatrix inner_exp_ad(const LieSuperAlgebra& g, const Vec& n) {
  if (g.vector_parity(n) != 0) throw std::invalid_argument("inner automorphism needs an even element");
  ScalarMatrix a = g.ad(n);
  ScalarMatrix sum = ScalarMatrix::identity(g.size(), 1);
  ScalarMatrix term = sum;
  for (std::size_t k = 1; k <= g.size() + 1; ++k) {
    term = (term * a).scaled(GaussianRational(mpq_class(1, static_cast<long>(k))));
    if (term.is_zero_matrix()) return sum;
    sum += term;
  }
  throw std::domain_error("exp(ad n) does not terminate: ad n is not nilpotent");
}

ScalarMatrix inner_conjugation(const LieSuperAlgebra& g, const ScalarMatrix& u) {
  if (matrix_parity(u, g.dim()) != 0) throw std::invalid_argument("conjugating matrix must be even");
  ScalarMatrix uinv = inverse(u);
  ScalarMatrix map(g.size(), g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    ScalarMatrix img = u * g.basis(j) * uinv;
    auto c = g.coordinates(img);
    if (!c) throw std::invalid_argument("conjugating matrix does not normalize " + g.label());
    for (std::size_t k = 0; k < g.size(); ++k) map(k, j) = (*c)[k];
  }
  return map;
}

bool is_automorphism(const LieSuperAlgebra& g, const ScalarMatrix& map) {
  auto apply = [&](const Vec& v) {
    Vec out(g.size());
    for (std::size_t r = 0; r < g.size(); ++r)
      for (std::size_t c = 0; c < g.size(); ++c)
        if (!map(r, c).is_zero() && !v[c].is_zero()) out[r] += map(r, c) * v[c];
    return out;
  };
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (apply(g.bracket_basis(i, j)) != g.bracket(apply(g.unit(i)), apply(g.unit(j)))) return false;
  return rank(map) == g.size();
}

}  // namespace superreal
