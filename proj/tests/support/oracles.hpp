#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superreal/hermitian.hpp"
#include "superreal/linalg.hpp"
#include "superreal/sampling.hpp"
#include "superreal/super_linear.hpp"

namespace oracle {

using namespace superreal;

template <class F>
void for_seeds(int count, std::uint64_t base, F&& f) {
  for (int k = 0; k < count; ++k) f(base + static_cast<std::uint64_t>(k));
}

// Grassmann element as a map from generator lists to coefficients.
using Word = std::vector<int>;
using Expansion = std::map<Word, GaussianRational>;

inline Word word_of(Monomial m) {
  Word w;
  for (int b = 0; b < 8; ++b)
    if (m & (1u << b)) w.push_back(b);
  return w;
}

inline Expansion expand(const GrassmannElement& x) {
  Expansion e;
  for (const auto& [m, c] : x.terms()) e[word_of(m)] = c;
  return e;
}

// Sort by adjacent transpositions, one sign per swap; repeated generator gives zero.
inline std::optional<std::pair<Word, int>> bubble(Word w) {
  int sign = 1;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j + 1 < w.size() - i; ++j)
      if (w[j] > w[j + 1]) {
        std::swap(w[j], w[j + 1]);
        sign = -sign;
      }
  for (std::size_t j = 0; j + 1 < w.size(); ++j)
    if (w[j] == w[j + 1]) return std::nullopt;
  return std::make_pair(w, sign);
}

inline Expansion product(const Expansion& a, const Expansion& b) {
  Expansion out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      auto sorted = bubble(w);
      if (!sorted) continue;
      GaussianRational c = ca * cb;
      if (sorted->second < 0) c = -c;
      out[sorted->first] += c;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

// Generator images: xi_k^+ -> xi_k^-; xi_k^- -> xi_k^+ (standard) or -xi_k^+ (graded).
inline Expansion conjugate(const Expansion& x, Kind kind) {
  Expansion out;
  for (const auto& [w, c] : x) {
    Expansion acc{{Word{}, c.conj()}};
    for (int g : w) {
      int image = (g % 2 == 0) ? g + 1 : g - 1;
      GaussianRational s = (kind == Kind::graded && g % 2 == 1) ? -1 : 1;
      acc = product(acc, Expansion{{Word{image}, s}});
    }
    for (const auto& [wa, ca] : acc) out[wa] += ca;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

inline GrassmannElement embed(const GrassmannElement& x, GrassmannSpec spec) {
  return GrassmannElement::from_terms(spec, x.terms());
}

inline GrassmannMatrix embed(const GrassmannMatrix& m, GrassmannSpec spec) {
  return m.map([&](const GrassmannElement& x) { return embed(x, spec); });
}

// M^star by solving B(x, M* y) = (-1)^{(1-nu)[x][M]} B(M x, y) for tilde(M*) on probe vectors
// x = c e_k, y = d e_l, with c, d from two fresh generator pairs. M homogeneous of block parity part.
inline std::optional<GrassmannMatrix> adjoint_by_solve(const GrassmannMatrix& m, int part, const SuperHermitianForm& b,
                                                       GrassmannSpec spec) {
  std::size_t n = b.size();
  GrassmannSpec big{spec.pairs + 2, spec.kind};
  FunctorialHermitianForm form(b, spec.kind);
  int nu = spec.kind == Kind::graded ? 1 : 0;
  GrassmannMatrix mb = embed(m, big);
  std::vector<Monomial> monos;
  for (int k = 0; k < spec.monomials(); ++k) monos.push_back(static_cast<Monomial>(k));
  std::size_t unknowns = n * n * monos.size();
  auto probe = [&](std::size_t k, int pair) {
    return b.parity[k] ? GrassmannElement::generator(big, 2 * pair) : GrassmannElement(big, 1);
  };
  std::vector<std::vector<GaussianRational>> rows;
  std::vector<GaussianRational> rhs;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      GVec x(n, GrassmannElement(big));
      GVec y(n, GrassmannElement(big));
      x[k] = probe(k, spec.pairs);
      y[l] = probe(l, spec.pairs + 1);
      GVec mx(n, GrassmannElement(big));
      for (std::size_t i = 0; i < n; ++i) mx[i] = mb(i, k) * x[k];
      GrassmannElement target = form.evaluate(mx, y);
      if (((1 - nu) * b.parity[k] * part) & 1) target = -target;
      // B(x, S y) with T = tilde(S): sum_r i^{p_k p_r} x_k T_{rl} tilde(y_l) G_{kr}, linear in T.
      std::map<Monomial, std::vector<GaussianRational>> eq;
      GrassmannElement ty = y[l].conjugate();
      for (std::size_t r = 0; r < n; ++r) {
        GaussianRational g = b.gram(k, r);
        if (g.is_zero()) continue;
        if (b.parity[k] && b.parity[r]) g = g * GaussianRational::i();
        for (std::size_t u = 0; u < monos.size(); ++u) {
          GrassmannElement term = x[k] * GrassmannElement::monomial(big, monos[u]) * ty * g;
          for (const auto& [mono, c] : term.terms()) {
            auto& row = eq[mono];
            if (row.empty()) row.assign(unknowns, GaussianRational(0));
            row[(r * n + l) * monos.size() + u] += c;
          }
        }
      }
      for (const auto& [mono, c] : target.terms())
        if (!eq.count(mono)) eq[mono].assign(unknowns, GaussianRational(0));
      for (auto& [mono, row] : eq) {
        rows.push_back(row);
        rhs.push_back(target.coefficient(mono));
      }
    }
  ScalarMatrix a(rows.size(), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < unknowns; ++c) a(r, c) = rows[r][c];
  if (rank(a) != unknowns) return std::nullopt;
  auto sol = solve(a, rhs);
  if (!sol) return std::nullopt;
  GrassmannMatrix t(n, n, GrassmannElement(spec));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t u = 0; u < monos.size(); ++u) {
        const GaussianRational& c = (*sol)[(r * n + l) * monos.size() + u];
        if (!c.is_zero()) t(r, l) += GrassmannElement::monomial(spec, monos[u], c);
      }
  return tilde_inverse(t);
}

inline GaussianRational q(long p, long d = 1) { return GaussianRational(mpq_class(p, d)); }
inline GaussianRational gi(long re, long im) { return GaussianRational(mpq_class(re), mpq_class(im)); }

}  // namespace oracle
