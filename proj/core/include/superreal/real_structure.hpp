#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "superreal/lie.hpp"

namespace superreal {

// Antilinear map v -> M conj(v) on coordinates of g.
struct RealStructureMap {
  ScalarMatrix matrix;
  Kind kind = Kind::standard;
};

// Linear map v -> M v on coordinates of g; order is 2 or 4.
struct LinearAutomorphism {
  ScalarMatrix matrix;
  int order = 2;
};

Vec act(const RealStructureMap& phi, const Vec& v);
Vec act(const LinearAutomorphism& theta, const Vec& v);

// a o b for the four combinations.
LinearAutomorphism compose(const RealStructureMap& a, const RealStructureMap& b);
RealStructureMap compose(const RealStructureMap& a, const LinearAutomorphism& b);
RealStructureMap compose(const LinearAutomorphism& a, const RealStructureMap& b);
LinearAutomorphism compose(const LinearAutomorphism& a, const LinearAutomorphism& b);
RealStructureMap inverse(const RealStructureMap& phi);

struct Check {
  std::string name;
  bool passed = true;
  std::string witness;
};

struct Report {
  std::vector<Check> checks;
  bool passed() const;
  const Check* find(const std::string& name) const;
  void add(std::string name, bool ok, std::string witness = {});
};

// parity, square_law, bracket.
Report verify_real_structure(const LieSuperAlgebra& g, const RealStructureMap& phi);
// parity, square_law (order 2: id; order 4: id on even, -id on odd), bracket, invertible.
Report verify_linear_automorphism(const LieSuperAlgebra& g, const LinearAutomorphism& theta);

// Antilinear structure induced by an antilinear matrix map that preserves g.
RealStructureMap structure_from_matrix_map(const LieSuperAlgebra& g,
                                           const std::function<ScalarMatrix(const ScalarMatrix&)>& f, Kind kind);
RealStructureMap entrywise_conjugation(const LieSuperAlgebra& g, Kind kind = Kind::standard);
// M -> -conj(M)^st.
RealStructureMap negative_superadjoint(const LieSuperAlgebra& g);

class ExtensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unique antilinear bracket morphism with the given generator images, extended along bracket words.
RealStructureMap extend_antilinear_from_generators(const LieSuperAlgebra& g, const std::vector<Vec>& generators,
                                                   const std::vector<Vec>& images, Kind kind);

struct OmegaData {
  RealStructureMap omega;
  RootDecomposition roots;
  ChevalleySet chevalley;
};

OmegaData omega_data(const LieSuperAlgebra& g);
RealStructureMap omega_compact(const LieSuperAlgebra& g);
// omega(h) = -h; omega(x+) = -x-, omega(x-) = -x+ (even); omega(x+) = x-, omega(x-) = -x+ (odd).
Report omega_generator_rules(const LieSuperAlgebra& g, const ChevalleySet& cs, const RealStructureMap& omega);

// Explicit standard structure on osp(2|2t) in the (b, x, y, z, w, A, B, C, D) block layout.
RealStructureMap sigma_C_n(const LieSuperAlgebra& g);

LinearAutomorphism inner_ad(const LieSuperAlgebra& g, const ScalarMatrix& u, int order);

bool same_on_parity(const LieSuperAlgebra& g, const ScalarMatrix& a, const ScalarMatrix& b, int parity);
bool is_identity_on_parity(const LieSuperAlgebra& g, const ScalarMatrix& a, int parity);

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// aut_{2,4} -> baut_{2,2} minus {theta | theta = omega on g0}; theta -> omega o theta.
RealStructureMap phi_wedge(const LieSuperAlgebra& g, const RealStructureMap& omega, const LinearAutomorphism& theta);
LinearAutomorphism psi_wedge(const LieSuperAlgebra& g, const RealStructureMap& omega, const RealStructureMap& sigma);
// aut_{2,2} -> baut_{2,4} minus {theta | theta = omega on g0 or on g1}.
RealStructureMap phi_vee(const LieSuperAlgebra& g, const RealStructureMap& omega, const LinearAutomorphism& s);
LinearAutomorphism psi_vee(const LieSuperAlgebra& g, const RealStructureMap& omega, const RealStructureMap& theta);

struct CartanDecomposition {
  std::vector<Vec> k;
  std::vector<Vec> p;
  LinearAutomorphism theta;
  Report report;  // direct_sum, k_k, k_p, sigma_k, sigma_p; p_p is informational
  bool p_p_in_k = false;
};

CartanDecomposition cartan_decomposition(const LieSuperAlgebra& g, const LinearAutomorphism& theta,
                                         const RealStructureMap& omega);

// +1 or -1 if theta'_1 = eps theta_1, none otherwise.
std::optional<int> sign_twin_check(const LieSuperAlgebra& g, const LinearAutomorphism& theta,
                                   const LinearAutomorphism& theta_prime);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

// Exact inertia of a Hermitian matrix by congruence.
Inertia hermitian_inertia(ScalarMatrix h);

struct CompactnessReport {
  std::size_t dim = 0;
  std::size_t derived_dim = 0;
  Inertia killing;
  Inertia derived;
  bool negative_semidefinite = false;
  bool derived_negative_definite = false;
  bool compact() const { return negative_semidefinite && derived_negative_definite; }
};

// Real basis (complex coordinates) of the phi-fixed even part.
std::vector<Vec> fixed_even_basis(const LieSuperAlgebra& g, const RealStructureMap& phi);
// Killing form test on the fixed even real Lie algebra.
CompactnessReport even_fixed_compactness(const LieSuperAlgebra& g, const RealStructureMap& phi);

}  // namespace superreal
