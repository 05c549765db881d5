#include "superreal/real_structure.hpp"

#include <algorithm>
#include <sstream>

namespace superreal {

namespace {

Vec conj_vec(const Vec& v) {
  Vec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k].conj();
  return out;
}

Vec mat_vec(const ScalarMatrix& m, const Vec& v) {
  Vec out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero() && !v[c].is_zero()) out[r] += m(r, c) * v[c];
  return out;
}

ScalarMatrix columns(const std::vector<Vec>& vs, std::size_t n) {
  ScalarMatrix m(n, vs.size());
  for (std::size_t c = 0; c < vs.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) m(r, c) = vs[c][r];
  return m;
}

std::string pair_witness(std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << "basis pair (" << i << "," << j << ")";
  return os.str();
}

std::string index_witness(std::size_t i) { return "basis element " + std::to_string(i); }

bool parity_preserving(const LieSuperAlgebra& g, const ScalarMatrix& m, std::string& witness) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero() && g.parity(r) != g.parity(c)) {
        witness = index_witness(c);
        return false;
      }
  return true;
}

// Columns of sq equal s_even e_j (even j) and s_odd e_j (odd j).
bool square_law(const LieSuperAlgebra& g, const ScalarMatrix& sq, int s_even, int s_odd, std::string& witness) {
  for (std::size_t c = 0; c < g.size(); ++c) {
    GaussianRational expect = g.parity(c) == 0 ? s_even : s_odd;
    for (std::size_t r = 0; r < g.size(); ++r) {
      GaussianRational want = r == c ? expect : GaussianRational(0);
      if (sq(r, c) != want) {
        witness = index_witness(c);
        return false;
      }
    }
  }
  return true;
}

template <class Map>
bool bracket_preserved(const LieSuperAlgebra& g, const Map& f, std::string& witness) {
  std::vector<Vec> images(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) images[i] = act(f, g.unit(i));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (act(f, g.bracket_basis(i, j)) != g.bracket(images[i], images[j])) {
        witness = pair_witness(i, j);
        return false;
      }
  return true;
}

}  // namespace

Vec act(const RealStructureMap& phi, const Vec& v) { return mat_vec(phi.matrix, conj_vec(v)); }
Vec act(const LinearAutomorphism& theta, const Vec& v) { return mat_vec(theta.matrix, v); }

LinearAutomorphism compose(const RealStructureMap& a, const RealStructureMap& b) {
  return {a.matrix * conj_matrix(b.matrix), 2};
}
RealStructureMap compose(const RealStructureMap& a, const LinearAutomorphism& b) {
  return {a.matrix * conj_matrix(b.matrix), a.kind};
}
RealStructureMap compose(const LinearAutomorphism& a, const RealStructureMap& b) {
  return {a.matrix * b.matrix, b.kind};
}
LinearAutomorphism compose(const LinearAutomorphism& a, const LinearAutomorphism& b) {
  return {a.matrix * b.matrix, std::max(a.order, b.order)};
}
RealStructureMap inverse(const RealStructureMap& phi) {
  return {conj_matrix(superreal::inverse(phi.matrix)), phi.kind};
}

bool Report::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

void Report::add(std::string name, bool ok, std::string witness) {
  checks.push_back({std::move(name), ok, std::move(witness)});
}

Report verify_real_structure(const LieSuperAlgebra& g, const RealStructureMap& phi) {
  Report r;
  std::string w;
  bool par = parity_preserving(g, phi.matrix, w);
  r.add("parity", par, par ? "" : w);
  w.clear();
  ScalarMatrix sq = phi.matrix * conj_matrix(phi.matrix);
  bool sl = square_law(g, sq, 1, phi.kind == Kind::graded ? -1 : 1, w);
  r.add("square_law", sl, sl ? "" : w);
  w.clear();
  bool br = bracket_preserved(g, phi, w);
  r.add("bracket", br, br ? "" : w);
  return r;
}

Report verify_linear_automorphism(const LieSuperAlgebra& g, const LinearAutomorphism& theta) {
  Report r;
  std::string w;
  bool par = parity_preserving(g, theta.matrix, w);
  r.add("parity", par, par ? "" : w);
  w.clear();
  ScalarMatrix sq = theta.matrix * theta.matrix;
  bool sl = square_law(g, sq, 1, theta.order == 4 ? -1 : 1, w);
  r.add("square_law", sl, sl ? "" : w);
  w.clear();
  bool br = bracket_preserved(g, theta, w);
  r.add("bracket", br, br ? "" : w);
  r.add("invertible", rank(theta.matrix) == g.size());
  return r;
}

RealStructureMap structure_from_matrix_map(const LieSuperAlgebra& g,
                                           const std::function<ScalarMatrix(const ScalarMatrix&)>& f, Kind kind) {
  ScalarMatrix m(g.size(), g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    ScalarMatrix img = f(g.basis(j));
    auto c = g.coordinates(img);
    if (!c) throw std::invalid_argument("map does not preserve " + g.label());
    for (std::size_t k = 0; k < g.size(); ++k) m(k, j) = (*c)[k];
  }
  return {m, kind};
}

RealStructureMap entrywise_conjugation(const LieSuperAlgebra& g, Kind kind) {
  return structure_from_matrix_map(g, [](const ScalarMatrix& x) { return conj_matrix(x); }, kind);
}

RealStructureMap negative_superadjoint(const LieSuperAlgebra& g) {
  SuperDim dim = g.dim();
  return structure_from_matrix_map(
      g, [dim](const ScalarMatrix& x) { return -supertranspose(conj_matrix(x), dim); }, Kind::graded);
}

RealStructureMap extend_antilinear_from_generators(const LieSuperAlgebra& g, const std::vector<Vec>& generators,
                                                   const std::vector<Vec>& images, Kind kind) {
  if (generators.size() != images.size()) throw std::invalid_argument("generator and image counts differ");
  std::size_t n = g.size();
  std::vector<Vec> elems;
  std::vector<Vec> imgs;
  std::vector<std::string> words;

  auto expected_image = [&](const std::vector<GaussianRational>& c) {
    Vec out(n);
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k].is_zero()) continue;
      GaussianRational cc = c[k].conj();
      for (std::size_t r = 0; r < n; ++r) out[r] += cc * imgs[k][r];
    }
    return out;
  };
  auto offer = [&](const Vec& w, const Vec& img, const std::string& word) {
    if (std::all_of(w.begin(), w.end(), [](const GaussianRational& z) { return z.is_zero(); })) {
      if (std::any_of(img.begin(), img.end(), [](const GaussianRational& z) { return !z.is_zero(); }))
        throw ExtensionError("contradiction: " + word + " vanishes but its image does not");
      return;
    }
    if (!elems.empty()) {
      auto c = solve(columns(elems, n), w);
      if (c) {
        if (expected_image(*c) != img) throw ExtensionError("contradiction at bracket word " + word);
        return;
      }
    }
    elems.push_back(w);
    imgs.push_back(img);
    words.push_back(word);
  };

  for (std::size_t k = 0; k < generators.size(); ++k) offer(generators[k], images[k], "g" + std::to_string(k));
  std::size_t done = 0;
  while (done < elems.size()) {
    std::size_t end = elems.size();
    for (std::size_t a = done; a < end; ++a)
      for (std::size_t b = 0; b < elems.size(); ++b) {
        offer(g.bracket(elems[a], elems[b]), g.bracket(imgs[a], imgs[b]), "[" + words[a] + "," + words[b] + "]");
        if (b < done) offer(g.bracket(elems[b], elems[a]), g.bracket(imgs[b], imgs[a]),
                            "[" + words[b] + "," + words[a] + "]");
      }
    done = end;
  }
  if (elems.size() < n)
    throw ExtensionError("generators span only " + std::to_string(elems.size()) + " of " + std::to_string(n) +
                         " dimensions");
  ScalarMatrix e = columns(elems, n);
  ScalarMatrix f = columns(imgs, n);
  return {f * superreal::inverse(conj_matrix(e)), kind};
}

namespace {

Vec neg(const Vec& v) {
  Vec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = -v[k];
  return out;
}

void omega_images(const ChevalleySet& cs, std::vector<Vec>& gens, std::vector<Vec>& imgs) {
  for (std::size_t i = 0; i < cs.x_plus.size(); ++i) {
    bool odd = std::find(cs.odd.begin(), cs.odd.end(), static_cast<int>(i)) != cs.odd.end();
    gens.push_back(cs.x_plus[i]);
    imgs.push_back(odd ? cs.x_minus[i] : neg(cs.x_minus[i]));
    gens.push_back(cs.x_minus[i]);
    imgs.push_back(neg(cs.x_plus[i]));
    gens.push_back(cs.h[i]);
    imgs.push_back(neg(cs.h[i]));
  }
  for (const auto& h : cs.extra_cartan) {
    gens.push_back(h);
    imgs.push_back(neg(h));
  }
}

}  // namespace

OmegaData omega_data(const LieSuperAlgebra& g) {
  OmegaData d;
  d.roots = root_decomposition(g);
  d.chevalley = chevalley_generators(g, d.roots);
  std::vector<Vec> gens;
  std::vector<Vec> imgs;
  omega_images(d.chevalley, gens, imgs);
  d.omega = extend_antilinear_from_generators(g, gens, imgs, Kind::graded);
  return d;
}

RealStructureMap omega_compact(const LieSuperAlgebra& g) { return omega_data(g).omega; }

Report omega_generator_rules(const LieSuperAlgebra& g, const ChevalleySet& cs, const RealStructureMap& omega) {
  (void)g;
  Report r;
  bool h_ok = true;
  bool even_ok = true;
  bool odd_ok = true;
  std::string hw, ew, ow;
  for (std::size_t i = 0; i < cs.x_plus.size(); ++i) {
    bool odd = std::find(cs.odd.begin(), cs.odd.end(), static_cast<int>(i)) != cs.odd.end();
    if (act(omega, cs.h[i]) != neg(cs.h[i]) && h_ok) {
      h_ok = false;
      hw = "h_" + std::to_string(i);
    }
    Vec plus_img = act(omega, cs.x_plus[i]);
    Vec minus_img = act(omega, cs.x_minus[i]);
    if (odd) {
      if ((plus_img != cs.x_minus[i] || minus_img != neg(cs.x_plus[i])) && odd_ok) {
        odd_ok = false;
        ow = "x_" + std::to_string(i);
      }
    } else if ((plus_img != neg(cs.x_minus[i]) || minus_img != neg(cs.x_plus[i])) && even_ok) {
      even_ok = false;
      ew = "x_" + std::to_string(i);
    }
  }
  for (std::size_t k = 0; k < cs.extra_cartan.size(); ++k)
    if (act(omega, cs.extra_cartan[k]) != neg(cs.extra_cartan[k]) && h_ok) {
      h_ok = false;
      hw = "extra Cartan " + std::to_string(k);
    }
  r.add("cartan", h_ok, hw);
  r.add("even_generators", even_ok, ew);
  r.add("odd_generators", odd_ok, ow);
  return r;
}

RealStructureMap sigma_C_n(const LieSuperAlgebra& g) {
  if (g.family() != Family::osp || g.param_p() != 2)
    throw std::invalid_argument("sigma_C_n needs osp(2|2t) in the split block convention");
  int t = g.param_q() / 2;
  auto f = [t](const ScalarMatrix& m) {
    GaussianRational i = GaussianRational::i();
    std::size_t n = static_cast<std::size_t>(2 + 2 * t);
    std::size_t T = static_cast<std::size_t>(t);
    ScalarMatrix out(n, n);
    out(0, 0) = -m(0, 0).conj();
    out(1, 1) = m(0, 0).conj();
    for (std::size_t k = 0; k < T; ++k) {
      GaussianRational x = m(0, 2 + k).conj();
      GaussianRational y = m(0, 2 + T + k).conj();
      GaussianRational z = m(1, 2 + k).conj();
      GaussianRational w = m(1, 2 + T + k).conj();
      out(0, 2 + k) = -i * w;
      out(0, 2 + T + k) = i * z;
      out(1, 2 + k) = i * y;
      out(1, 2 + T + k) = -i * x;
      out(2 + k, 0) = -i * x;
      out(2 + k, 1) = i * z;
      out(2 + T + k, 0) = -i * y;
      out(2 + T + k, 1) = i * w;
    }
    for (std::size_t r = 0; r < T; ++r)
      for (std::size_t c = 0; c < T; ++c) {
        GaussianRational a = m(2 + r, 2 + c).conj();
        GaussianRational at = m(2 + c, 2 + r).conj();
        GaussianRational bt = m(2 + c, 2 + T + r).conj();
        GaussianRational cc = m(2 + T + r, 2 + c).conj();
        out(2 + r, 2 + c) = -at;
        out(2 + r, 2 + T + c) = -cc;
        out(2 + T + r, 2 + c) = -bt;
        out(2 + T + r, 2 + T + c) = a;
      }
    return out;
  };
  return structure_from_matrix_map(g, f, Kind::standard);
}

LinearAutomorphism inner_ad(const LieSuperAlgebra& g, const ScalarMatrix& u, int order) {
  return {inner_conjugation(g, u), order};
}

bool same_on_parity(const LieSuperAlgebra& g, const ScalarMatrix& a, const ScalarMatrix& b, int parity) {
  for (std::size_t c = 0; c < g.size(); ++c) {
    if (g.parity(c) != parity) continue;
    for (std::size_t r = 0; r < g.size(); ++r)
      if (a(r, c) != b(r, c)) return false;
  }
  return true;
}

bool is_identity_on_parity(const LieSuperAlgebra& g, const ScalarMatrix& a, int parity) {
  return same_on_parity(g, a, ScalarMatrix::identity(g.size(), 1), parity);
}

namespace {

void require(bool ok, const std::string& clause) {
  if (!ok) throw DomainError(clause);
}

void require_linear(const LieSuperAlgebra& g, const LinearAutomorphism& a, int order, const std::string& set) {
  LinearAutomorphism probe{a.matrix, order};
  Report r = verify_linear_automorphism(g, probe);
  for (const auto& c : r.checks) require(c.passed, "not in " + set + ": " + c.name + " fails " + c.witness);
}

void require_antilinear(const LieSuperAlgebra& g, const RealStructureMap& a, Kind kind, const std::string& set) {
  RealStructureMap probe{a.matrix, kind};
  Report r = verify_real_structure(g, probe);
  for (const auto& c : r.checks) require(c.passed, "not in " + set + ": " + c.name + " fails " + c.witness);
}

}  // namespace

RealStructureMap phi_wedge(const LieSuperAlgebra& g, const RealStructureMap& omega, const LinearAutomorphism& theta) {
  require_linear(g, theta, 4, "aut_{2,4}");
  RealStructureMap out = compose(omega, theta);
  out.kind = Kind::standard;
  require_antilinear(g, out, Kind::standard, "baut_{2,2}");
  require(!same_on_parity(g, out.matrix, omega.matrix, 0), "image agrees with omega on g0 (excluded)");
  return out;
}

LinearAutomorphism psi_wedge(const LieSuperAlgebra& g, const RealStructureMap& omega, const RealStructureMap& sigma) {
  require_antilinear(g, sigma, Kind::standard, "baut_{2,2}");
  require(!same_on_parity(g, sigma.matrix, omega.matrix, 0), "input agrees with omega on g0 (excluded)");
  LinearAutomorphism out = compose(inverse(omega), sigma);
  out.order = 4;
  require_linear(g, out, 4, "aut_{2,4}");
  return out;
}

RealStructureMap phi_vee(const LieSuperAlgebra& g, const RealStructureMap& omega, const LinearAutomorphism& s) {
  require_linear(g, s, 2, "aut_{2,2}");
  RealStructureMap out = compose(omega, s);
  out.kind = Kind::graded;
  require_antilinear(g, out, Kind::graded, "baut_{2,4}");
  require(!same_on_parity(g, out.matrix, omega.matrix, 0), "image agrees with omega on g0 (excluded)");
  require(!same_on_parity(g, out.matrix, omega.matrix, 1), "image agrees with omega on g1 (excluded)");
  return out;
}

LinearAutomorphism psi_vee(const LieSuperAlgebra& g, const RealStructureMap& omega, const RealStructureMap& theta) {
  require_antilinear(g, theta, Kind::graded, "baut_{2,4}");
  require(!same_on_parity(g, theta.matrix, omega.matrix, 0), "input agrees with omega on g0 (excluded)");
  require(!same_on_parity(g, theta.matrix, omega.matrix, 1), "input agrees with omega on g1 (excluded)");
  LinearAutomorphism out = compose(inverse(omega), theta);
  out.order = 2;
  require_linear(g, out, 2, "aut_{2,2}");
  return out;
}

namespace {

std::vector<Vec> eigenspace(const ScalarMatrix& m, const GaussianRational& lambda) {
  ScalarMatrix a = m - ScalarMatrix::identity(m.rows(), lambda);
  return nullspace(a);
}

bool in_span(const std::vector<Vec>& span, const Vec& v, std::size_t n) {
  if (std::all_of(v.begin(), v.end(), [](const GaussianRational& z) { return z.is_zero(); })) return true;
  if (span.empty()) return false;
  return solve(columns(span, n), v).has_value();
}

bool brackets_in(const LieSuperAlgebra& g, const std::vector<Vec>& a, const std::vector<Vec>& b,
                 const std::vector<Vec>& target) {
  for (const auto& x : a)
    for (const auto& y : b)
      if (!in_span(target, g.bracket(x, y), g.size())) return false;
  return true;
}

}  // namespace

CartanDecomposition cartan_decomposition(const LieSuperAlgebra& g, const LinearAutomorphism& theta,
                                         const RealStructureMap& omega) {
  Report pre = verify_linear_automorphism(g, LinearAutomorphism{theta.matrix, 4});
  if (!pre.passed()) throw std::invalid_argument("theta is not in aut_{2,4}");
  RootDecomposition rd = root_decomposition(g);
  for (const auto& h : rd.cartan)
    if (act(theta, h) != h) throw std::invalid_argument("theta is not equal rank: it moves the Cartan subalgebra");
  CartanDecomposition cd;
  cd.theta = theta;
  GaussianRational i = GaussianRational::i();
  cd.k = eigenspace(theta.matrix, 1);
  for (const GaussianRational& lam : {GaussianRational(-1), i, -i})
    for (auto& v : eigenspace(theta.matrix, lam)) cd.p.push_back(std::move(v));
  std::vector<Vec> all = cd.k;
  all.insert(all.end(), cd.p.begin(), cd.p.end());
  cd.report.add("direct_sum", all.size() == g.size() && rank(columns(all, g.size())) == g.size());
  cd.report.add("k_k", brackets_in(g, cd.k, cd.k, cd.k));
  cd.report.add("k_p", brackets_in(g, cd.k, cd.p, cd.p));
  RealStructureMap sigma = compose(omega, theta);
  bool sk = true;
  bool sp = true;
  for (const auto& v : cd.k) sk = sk && in_span(cd.k, act(sigma, v), g.size());
  for (const auto& v : cd.p) sp = sp && in_span(cd.p, act(sigma, v), g.size());
  cd.report.add("sigma_k", sk);
  cd.report.add("sigma_p", sp);
  cd.p_p_in_k = brackets_in(g, cd.p, cd.p, cd.k);
  return cd;
}

std::optional<int> sign_twin_check(const LieSuperAlgebra& g, const LinearAutomorphism& theta,
                                   const LinearAutomorphism& theta_prime) {
  if (!same_on_parity(g, theta.matrix, theta_prime.matrix, 0))
    throw std::invalid_argument("sign twin check needs equal even parts");
  if (same_on_parity(g, theta.matrix, theta_prime.matrix, 1)) return 1;
  if (same_on_parity(g, theta.matrix, -theta_prime.matrix, 1)) return -1;
  return std::nullopt;
}

Inertia hermitian_inertia(ScalarMatrix a) {
  if (!a.square()) throw std::invalid_argument("inertia of a non-square matrix");
  std::size_t n = a.rows();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (a(r, c) != a(c, r).conj()) throw std::invalid_argument("inertia needs a Hermitian matrix");
  Inertia in;
  auto swap_index = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t j = 0; j < n; ++j) std::swap(a(x, j), a(y, j));
    for (std::size_t j = 0; j < n; ++j) std::swap(a(j, x), a(j, y));
  };
  for (std::size_t s = 0; s < n; ++s) {
    std::size_t piv = n;
    for (std::size_t k = s; k < n && piv == n; ++k)
      if (!a(k, k).is_zero()) piv = k;
    if (piv == n) {
      std::size_t pi = n, pj = n;
      for (std::size_t x = s; x < n && pi == n; ++x)
        for (std::size_t y = s; y < n; ++y)
          if (!a(x, y).is_zero()) {
            pi = x;
            pj = y;
            break;
          }
      if (pi == n) {
        in.zero += n - s;
        break;
      }
      // row_i += c row_j, col_i += conj(c) col_j gives a_ii = 2 Re(c a_ji).
      GaussianRational c = sgn(a(pj, pi).re()) != 0 ? GaussianRational(1) : GaussianRational::i();
      for (std::size_t k = 0; k < n; ++k) a(pi, k) += c * a(pj, k);
      for (std::size_t k = 0; k < n; ++k) a(k, pi) += c.conj() * a(k, pj);
      piv = pi;
    }
    swap_index(s, piv);
    GaussianRational d = a(s, s);
    int sign = sgn(d.re());
    (sign > 0 ? in.positive : in.negative) += 1;
    GaussianRational dinv = d.inverse();
    for (std::size_t r = s + 1; r < n; ++r) {
      if (a(r, s).is_zero()) continue;
      GaussianRational f = a(r, s) * dinv;
      for (std::size_t k = s; k < n; ++k) a(r, k) -= f * a(s, k);
      for (std::size_t k = s; k < n; ++k) a(k, r) -= f.conj() * a(k, s);
    }
  }
  return in;
}

std::vector<Vec> fixed_even_basis(const LieSuperAlgebra& g, const RealStructureMap& phi) {
  std::vector<std::size_t> even;
  for (std::size_t k = 0; k < g.size(); ++k)
    if (g.parity(k) == 0) even.push_back(k);
  auto f = [&](const Vec& x) {
    Vec full(g.size());
    for (std::size_t k = 0; k < even.size(); ++k) full[even[k]] = x[k];
    Vec img = act(phi, full);
    Vec out(even.size());
    for (std::size_t k = 0; k < even.size(); ++k) out[k] = img[even[k]];
    return out;
  };
  std::vector<Vec> out;
  for (const auto& v : real_fixed_space(even.size(), f)) {
    Vec full(g.size());
    for (std::size_t k = 0; k < even.size(); ++k) full[even[k]] = v[k];
    out.push_back(std::move(full));
  }
  return out;
}

namespace {

// Real coordinates of w in the real span of basis (complex vectors).
std::vector<mpq_class> real_coordinates(const std::vector<Vec>& basis, const Vec& w) {
  std::size_t n = w.size();
  Matrix<mpq_class> sys(2 * n, basis.size());
  std::vector<mpq_class> rhs(2 * n);
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) {
      sys(r, c) = basis[c][r].re();
      sys(n + r, c) = basis[c][r].im();
    }
  for (std::size_t r = 0; r < n; ++r) {
    rhs[r] = w[r].re();
    rhs[n + r] = w[r].im();
  }
  auto x = solve(sys, rhs);
  if (!x) throw std::domain_error("fixed real subspace is not closed under the bracket");
  return *x;
}

ScalarMatrix to_gaussian(const Matrix<mpq_class>& m) {
  return m.map([](const mpq_class& q) { return GaussianRational(q); });
}

}  // namespace

CompactnessReport even_fixed_compactness(const LieSuperAlgebra& g, const RealStructureMap& phi) {
  std::vector<Vec> basis = fixed_even_basis(g, phi);
  std::size_t k = basis.size();
  CompactnessReport rep;
  rep.dim = k;
  std::vector<Matrix<mpq_class>> ads(k, Matrix<mpq_class>(k, k));
  std::vector<std::vector<mpq_class>> brackets;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      std::vector<mpq_class> c = real_coordinates(basis, g.bracket(basis[a], basis[b]));
      for (std::size_t r = 0; r < k; ++r) ads[a](r, b) = c[r];
      brackets.push_back(std::move(c));
    }
  Matrix<mpq_class> kill(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      Matrix<mpq_class> prod = ads[a] * ads[b];
      mpq_class tr = 0;
      for (std::size_t r = 0; r < k; ++r) tr += prod(r, r);
      kill(a, b) = tr;
    }
  rep.killing = hermitian_inertia(to_gaussian(kill));
  rep.negative_semidefinite = rep.killing.positive == 0;

  // Derived subalgebra basis from the bracket coordinates.
  Matrix<mpq_class> span(brackets.size(), k);
  for (std::size_t r = 0; r < brackets.size(); ++r)
    for (std::size_t c = 0; c < k; ++c) span(r, c) = brackets[r][c];
  std::size_t d = rref_in_place(span).size();
  rep.derived_dim = d;
  Matrix<mpq_class> dbasis = span.block(0, 0, d, k);
  Matrix<mpq_class> restricted = dbasis * kill * dbasis.transpose();
  rep.derived = hermitian_inertia(to_gaussian(restricted));
  rep.derived_negative_definite = rep.derived.negative == d;
  return rep;
}

}  // namespace superreal
