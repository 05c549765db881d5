#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superreal/hermitian.hpp"
#include "superreal/lie.hpp"
#include "superreal/real_structure.hpp"
#include "superreal/super_linear.hpp"

namespace superreal {

// Point of GL(m|n)(A): even supermatrix with invertible body blocks.
struct GroupPoint {
  SuperDim dim;
  GrassmannMatrix matrix;
};

bool is_group_point(const GroupPoint& g);

// g = g_plus exp(y), g_plus block-diagonal, y off-diagonal.
struct FactoredPoint {
  GrassmannMatrix g_plus;
  GrassmannMatrix y;
};

FactoredPoint factorize_point(const GroupPoint& g);
GrassmannMatrix recombine(const FactoredPoint& f);

// d/dt exp(y + t z) at t = 0.
GrassmannMatrix dexp(const GrassmannMatrix& y, const GrassmannMatrix& z);
// Dimension of the kernel of (h, z) -> h exp(y) + g_plus dexp_y(z), h block-diagonal even, z off-diagonal odd.
std::size_t factorization_kernel_dim(const FactoredPoint& f, SuperDim dim);

// Phi(g) = J tilde(g) J^{-1}; on gl: X -> J conj(X) J^{-1}.
struct GroupRealStructure {
  SuperDim dim;
  ScalarMatrix j;
  Kind kind = Kind::standard;

  GrassmannMatrix phi_plus(const GrassmannMatrix& g_plus) const;
  GrassmannMatrix phi_a(const GrassmannMatrix& y) const;
};

GroupRealStructure conjugation_structure(SuperDim dim);
// J = diag(I_m, (0 I_t; -I_t 0)) on C^{m|2t}, graded.
GroupRealStructure quaternionic_structure(int m, int t);
// J conj(J) must be diag(I, I) (standard) or diag(I, -I) (graded).
Report verify_group_structure(const GroupRealStructure& phi);

RealStructureMap lie_structure(const LieSuperAlgebra& gl, const GroupRealStructure& phi);
// Phi_plus(1 + e X) = 1 + e phi(X) on gl_0, with e a real even nilpotent from a fresh pair.
Report compatibility(const GroupRealStructure& phi, const LieSuperAlgebra& gl);

GroupPoint apply_group_structure(const GroupRealStructure& phi, const GroupPoint& g);
// Closed form J tilde(g) J^{-1}.
GrassmannMatrix apply_group_structure_direct(const GroupRealStructure& phi, const GrassmannMatrix& g);

struct Membership {
  bool member = false;
  bool g_plus_fixed = false;
  bool y_fixed = false;
  FactoredPoint factors;
  std::string witness;
};

Membership real_form_membership(const GroupRealStructure& phi, const GroupPoint& g);

// (eps choose n) = eps (eps - 1) ... (eps - n + 1) / n!.
GaussianRational generalized_binomial(const GaussianRational& eps, int n);
// sum_n (eps choose n) z^n for nilpotent z.
GrassmannMatrix binomial_power(const GrassmannMatrix& z, const GaussianRational& eps);

// g^circledast = (g_plus^star)^{-1} exp(Y^circledast).
GrassmannMatrix unitary_star_point(const GroupPoint& g, const SuperHermitianForm& b, Kind kind);
// (g_plus^star)^{-1} (1 + Z)^eps with Z = exp(Y^star) - 1, eps = i or -1.
GrassmannMatrix unitary_star_binomial(const GroupPoint& g, const SuperHermitianForm& b, Kind kind);
// Same with Z = (exp(Y) - 1)^star.
GrassmannMatrix unitary_star_block_literal(const GroupPoint& g, const SuperHermitianForm& b, Kind kind);
// (g^star)^{-1} and (g^{-1})^star.
GrassmannMatrix star_then_inverse(const GrassmannMatrix& g, const SuperHermitianForm& b, Kind kind);
GrassmannMatrix inverse_then_star(const GrassmannMatrix& g, const SuperHermitianForm& b, Kind kind);
bool unitary_group_membership(const GroupPoint& g, const SuperHermitianForm& b, Kind kind);

// Lie-valued matrices: sum over monomials of xi_m (x) c_m with c_m coordinates in g.
std::vector<std::pair<Monomial, Vec>> lie_coefficients(const LieSuperAlgebra& g, const GrassmannMatrix& y);
GrassmannMatrix from_lie_coefficients(const LieSuperAlgebra& g, GrassmannSpec spec,
                                      const std::vector<std::pair<Monomial, Vec>>& c);
// phi_A(sum a_k e_k) = sum conj(a_k) phi(e_k).
GrassmannMatrix phi_lie_valued(const LieSuperAlgebra& g, const RealStructureMap& phi, const GrassmannMatrix& y);

struct GlobalCartanResult {
  Report report;  // product, k_directions, p_directions, sigma_k, sigma_p
  GrassmannMatrix k;
  GrassmannMatrix p;
  int iterations = 0;
  bool body_skipped = true;
};

// g = k p with k in exp(A (x) k)_0 and p in exp(A (x) p)_0; g must have body 1.
GlobalCartanResult global_cartan_check(const LieSuperAlgebra& g, const CartanDecomposition& cd,
                                       const RealStructureMap& sigma, const GroupPoint& point);

}  // namespace superreal
