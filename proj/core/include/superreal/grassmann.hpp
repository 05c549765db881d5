#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "superreal/gaussian.hpp"

namespace superreal {

enum class Kind { plain, standard, graded };

const char* kind_name(Kind k);
Kind parse_kind(const std::string& s);

// Grassmann algebra on generator pairs (xi_k^+, xi_k^-), k = 0..pairs-1.
// Generator 2k is xi_k^+ and 2k+1 is xi_k^-.
struct GrassmannSpec {
  int pairs = 0;
  Kind kind = Kind::plain;

  static constexpr int kMaxPairs = 4;

  int generators() const { return 2 * pairs; }
  int monomials() const { return 1 << generators(); }
  friend bool operator==(const GrassmannSpec& a, const GrassmannSpec& b) {
    return a.pairs == b.pairs && a.kind == b.kind;
  }
};

using Monomial = std::uint8_t;

inline int monomial_degree(Monomial m) { return __builtin_popcount(m); }
inline int monomial_parity(Monomial m) { return __builtin_popcount(m) & 1; }

// Sign of xi_a * xi_b after sorting into increasing order; 0 if they share a generator.
int monomial_product_sign(Monomial a, Monomial b);

// Element of the Grassmann algebra. A default-constructed element is a zero
// without a parent; it adopts the parent of whatever it is combined with.
class GrassmannElement {
 public:
  using Term = std::pair<Monomial, GaussianRational>;

  GrassmannElement() = default;
  explicit GrassmannElement(GrassmannSpec spec) : spec_(spec), has_spec_(true) { check_spec(); }
  GrassmannElement(GrassmannSpec spec, const GaussianRational& scalar);

  static GrassmannElement generator(GrassmannSpec spec, int index);
  static GrassmannElement monomial(GrassmannSpec spec, Monomial m, const GaussianRational& c = 1);
  static GrassmannElement from_terms(GrassmannSpec spec, std::vector<Term> terms);
  // Scalar without a parent; adopts the parent of its operands.
  static GrassmannElement constant(const GaussianRational& c);

  const GrassmannSpec& spec() const { return spec_; }
  bool has_spec() const { return has_spec_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  GaussianRational coefficient(Monomial m) const;
  GaussianRational body() const { return coefficient(0); }
  GrassmannElement soul() const;

  GrassmannElement even_part() const;
  GrassmannElement odd_part() const;
  bool is_even() const;
  bool is_odd() const;

  // Tilde conjugation; requires kind standard or graded.
  GrassmannElement conjugate() const;
  // Inverse of an element with nonzero body.
  GrassmannElement inverse() const;
  // Least k with (soul)^(k+1) = 0.
  int nilpotency_index() const;

  GrassmannElement operator-() const;
  GrassmannElement& operator+=(const GrassmannElement& o);
  GrassmannElement& operator-=(const GrassmannElement& o);
  GrassmannElement& operator*=(const GrassmannElement& o);
  GrassmannElement& operator*=(const GaussianRational& c);

  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) { return a += b; }
  friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) { return a -= b; }
  friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b);
  friend GrassmannElement operator*(GrassmannElement a, const GaussianRational& c) { return a *= c; }
  friend GrassmannElement operator*(const GaussianRational& c, GrassmannElement a) { return a *= c; }
  friend bool operator==(const GrassmannElement& a, const GrassmannElement& b);
  friend bool operator!=(const GrassmannElement& a, const GrassmannElement& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void check_spec() const;
  void adopt(const GrassmannElement& o);
  void normalize();

  GrassmannSpec spec_{};
  bool has_spec_ = false;
  std::vector<Term> terms_;
};

inline bool is_zero(const GrassmannElement& x) { return x.is_zero(); }
inline GrassmannElement conj(const GrassmannElement& x) { return x.conjugate(); }

// Conjugation with the extra sign on odd parts undone: the inverse map of tilde.
GrassmannElement conjugate_inverse(const GrassmannElement& x);

// Rational basis of the tilde-fixed subset; standard kind only.
std::vector<GrassmannElement> real_part_basis(GrassmannSpec spec);

// Monomials of the given parity, ascending.
std::vector<Monomial> monomials_of_parity(GrassmannSpec spec, int parity);

}  // namespace superreal
