#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "superreal/linalg.hpp"
#include "superreal/super_linear.hpp"

namespace superreal {

using Vec = std::vector<GaussianRational>;

enum class Family { gl, sl, osp };

const char* family_name(Family f);

// Matrix Lie superalgebra with a fixed basis and its structure constants.
class LieSuperAlgebra {
 public:
  LieSuperAlgebra(Family family, int p, int q, SuperDim dim, std::vector<ScalarMatrix> basis,
                  std::vector<int> parity);

  Family family() const { return family_; }
  // (m, n) for gl/sl; (m, 2t) for osp.
  int param_p() const { return p_; }
  int param_q() const { return q_; }
  std::string label() const;
  SuperDim dim() const { return dim_; }
  std::size_t size() const { return basis_.size(); }
  const ScalarMatrix& basis(std::size_t i) const { return basis_[i]; }
  const std::vector<ScalarMatrix>& basis() const { return basis_; }
  int parity(std::size_t i) const { return parity_[i]; }
  const std::vector<int>& parities() const { return parity_; }
  std::size_t even_dim() const;
  std::size_t odd_dim() const { return size() - even_dim(); }

  std::optional<Vec> coordinates(const ScalarMatrix& m) const;
  Vec coordinates_or_throw(const ScalarMatrix& m) const;
  ScalarMatrix element(const Vec& coords) const;
  Vec unit(std::size_t i) const;

  const Vec& bracket_basis(std::size_t i, std::size_t j) const { return table_[i][j]; }
  Vec bracket(const Vec& x, const Vec& y) const;
  // Matrix of ad(b_i) in the basis.
  ScalarMatrix ad(std::size_t i) const;
  ScalarMatrix ad(const Vec& x) const;
  // 0 or 1 for homogeneous vectors (0 for zero), -1 for mixed.
  int vector_parity(const Vec& x) const;

  // Gram matrix of the defining form (osp only; empty otherwise).
  const ScalarMatrix& form() const { return form_; }
  void set_form(ScalarMatrix g) { form_ = std::move(g); }

 private:
  Family family_;
  int p_;
  int q_;
  SuperDim dim_;
  std::vector<ScalarMatrix> basis_;
  std::vector<int> parity_;
  SpanCoordinates<GaussianRational> coords_;
  std::vector<std::vector<Vec>> table_;
  ScalarMatrix form_;
};

LieSuperAlgebra build_gl(int m, int n);
LieSuperAlgebra build_sl(int m, int n);
LieSuperAlgebra build_osp(int m, int two_t);

// Gram matrix of (a b; c d) preserved by osp(m|2t): split symmetric on even, [[0,-I],[I,0]] on odd.
ScalarMatrix osp_form(int m, int t);

// First failing triple of the super Jacobi identity, if any.
std::optional<std::array<std::size_t, 3>> super_jacobi_violation(const LieSuperAlgebra& g);
bool bracket_closed(const LieSuperAlgebra& g);

// Gram matrix of kappa(x, y) = str(ad x ad y).
ScalarMatrix killing_form(const LieSuperAlgebra& g);
GaussianRational killing(const LieSuperAlgebra& g, const ScalarMatrix& kappa, const Vec& x, const Vec& y);

struct Root {
  Vec weight;  // values on the Cartan basis
  int parity = 0;
  Vec vector;  // normalized root vector (coordinates)
  ScalarMatrix matrix;
  bool positive = false;
};

struct RootDecomposition {
  std::vector<Vec> cartan;  // coordinates of a diagonal Cartan basis
  std::vector<Root> roots;
  std::vector<std::size_t> simple;  // indices into roots, ordered
  std::optional<std::size_t> find(const Vec& weight) const;
};

RootDecomposition root_decomposition(const LieSuperAlgebra& g);

struct ChevalleySet {
  std::vector<Vec> x_plus;
  std::vector<Vec> x_minus;
  std::vector<Vec> h;
  std::vector<int> odd;  // tau, 0-based indices
  // Cartan directions not generated by the x's (gl only).
  std::vector<Vec> extra_cartan;
};

ChevalleySet chevalley_generators(const LieSuperAlgebra& g, const RootDecomposition& rd);

// Dimension of the span reached by iterated brackets of the given elements.
std::size_t bracket_span_dimension(const LieSuperAlgebra& g, const std::vector<Vec>& gens);

// exp(ad n) for even n with nilpotent ad n.
ScalarMatrix inner_exp_ad(const LieSuperAlgebra& g, const Vec& n);
// x -> u x u^{-1} for an even invertible scalar matrix u normalizing g.
ScalarMatrix inner_conjugation(const LieSuperAlgebra& g, const ScalarMatrix& u);

bool is_automorphism(const LieSuperAlgebra& g, const ScalarMatrix& map);

}  // namespace superreal
