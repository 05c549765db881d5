#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superreal/lie.hpp"
#include "superreal/real_structure.hpp"
#include "superreal/super_linear.hpp"

namespace superreal {

// Bilinear form <x, y> = x^t S y on a superspace with the given parities.
struct SuperSymmetricForm {
  std::vector<int> parity;
  ScalarMatrix gram;
};

Report verify_supersymmetric(const SuperSymmetricForm& s);

// B(x, y) = sum x_k G_kl conj(y_l).
struct SuperHermitianForm {
  std::vector<int> parity;
  ScalarMatrix gram;

  static SuperHermitianForm on(SuperDim dim, ScalarMatrix gram);
  std::size_t size() const { return parity.size(); }
  // B = B0 + i B1 with B0 on even vectors and B1 on odd vectors.
  ScalarMatrix b0() const;
  ScalarMatrix b1() const;
};

std::vector<int> parities_of(SuperDim dim);

// hermitian_symmetry, consistency.
Report verify_super_hermitian(const SuperHermitianForm& b);

// Leading principal minors of a Hermitian matrix (all real).
std::vector<mpq_class> leading_minors(const ScalarMatrix& h);
bool sylvester_positive_definite(const ScalarMatrix& h);

struct DefinitenessReport {
  bool b0_positive = false;
  bool b1_positive = false;
  // B' = B0 - i B1 is positive definite (B1 negative definite).
  bool alternative_positive = false;
  // -B positive definite.
  bool negative_definite = false;
  std::vector<mpq_class> b0_minors;
  std::vector<mpq_class> b1_minors;
  bool positive_definite() const { return b0_positive && b1_positive; }
};

DefinitenessReport definiteness(const SuperHermitianForm& b);
bool is_positive_definite(const SuperHermitianForm& b);

// Antilinear map on a superspace with arbitrary parity order: v -> P conj(v).
struct SpaceMap {
  std::vector<int> parity;
  ScalarMatrix matrix;
  Kind kind = Kind::standard;
};

// B(x, y) = (sign i)^{nu |x||y|} <x, phi(y)>, nu = 1 for graded.
SuperHermitianForm hermitian_from_susy(const SuperSymmetricForm& s, const SpaceMap& phi, int sign);

// <x, y>_V = z.z' + zeta+.zeta'- - zeta-.zeta'+ on C^{m|2t}.
SuperSymmetricForm symplectic_pairing(int m, int t);
SpaceMap phi_standard(int m, int n);
// (z, zeta+, zeta-) -> (conj z, conj zeta-, -conj zeta+).
SpaceMap phi_graded(int m, int t);

using GVec = std::vector<GrassmannElement>;

// Functorial extension B(a x, b y) = i^{|x||y|} a b~ B(x, y).
class FunctorialHermitianForm {
 public:
  FunctorialHermitianForm(SuperHermitianForm base, Kind kind) : base_(std::move(base)), kind_(kind) {}

  const SuperHermitianForm& base() const { return base_; }
  Kind kind() const { return kind_; }

  GrassmannElement evaluate(const GVec& x, const GVec& y) const;
  // Recover the scalar form by evaluation at C[xi+, xi-].
  SuperHermitianForm restrict() const;

 private:
  SuperHermitianForm base_;
  Kind kind_;
};

FunctorialHermitianForm functorial_extend(const SuperHermitianForm& b, Kind kind);

// Def. axioms at A: left A0-linear, right A0-antilinear, symmetry. x, y, a sampled by the caller.
Report functorial_axioms(const FunctorialHermitianForm& f, const GVec& x, const GVec& y, const GrassmannElement& a,
                         int degree_x, int degree_y);

// Homogeneous parts by block position: 0 diagonal blocks, 1 off-diagonal blocks.
GrassmannMatrix block_part(const GrassmannMatrix& m, const std::vector<int>& parity, int part);

// M* defined by B(x, M* y) = (-1)^{(1-nu)[x][M]} B(M x, y).
GrassmannMatrix adjoint_star(const GrassmannMatrix& m, const SuperHermitianForm& b, Kind kind);
// Standard: -M0* + i M1*. Graded: -M*.
GrassmannMatrix circledast(const GrassmannMatrix& m, const SuperHermitianForm& b, Kind kind);

// Scalar-level structure on gl(m|n) induced by circledast; gl basis order E_ij lexicographic.
RealStructureMap circledast_structure(const LieSuperAlgebra& gl, const SuperHermitianForm& b, Kind kind);

// Real basis of u_B(A) = {M even-total : M^circledast = M}.
struct UnitaryAlgebra {
  SuperDim dim;
  GrassmannSpec spec;
  SuperHermitianForm form;
  std::vector<GrassmannMatrix> basis;
  bool contains(const GrassmannMatrix& m) const;
};

UnitaryAlgebra unitary_algebra(const SuperHermitianForm& b, SuperDim dim, GrassmannSpec spec);

struct CompactCertificate {
  std::string algebra;
  Kind kind = Kind::graded;
  SuperHermitianForm form;
  Report super_hermitian;
  DefinitenessReport definite;
  // Embedding identity at A with two pairs; matrix world uses the plain commutator of A-matrices,
  // tensor world the Koszul rule [a x, c y] = (-1)^{|x||c|} a c [x, y].
  bool embeds_matrix_world = false;
  bool embeds_tensor_world = false;
  std::size_t embed_checks = 0;
  std::string embed_witness;
  CompactnessReport even_part;
  bool positive_definite() const { return definite.positive_definite(); }
  bool embeds_in_unitary() const { return embeds_matrix_world || embeds_tensor_world; }
};

// B(x, y) = (-i)^{nu |x||y|} kappa(x, phi(y)).
SuperHermitianForm killing_hermitian(const LieSuperAlgebra& g, const ScalarMatrix& kappa, const RealStructureMap& phi);
CompactCertificate compact_certificate(const LieSuperAlgebra& g, const RealStructureMap& phi);

}  // namespace superreal
