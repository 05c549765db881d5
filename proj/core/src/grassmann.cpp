#include "superreal/grassmann.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace superreal {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::plain:
      return "plain";
    case Kind::standard:
      return "standard";
    case Kind::graded:
      return "graded";
  }
  return "plain";
}

Kind parse_kind(const std::string& s) {
  if (s == "plain") return Kind::plain;
  if (s == "standard") return Kind::standard;
  if (s == "graded") return Kind::graded;
  throw std::invalid_argument("unknown kind: " + s);
}

int monomial_product_sign(Monomial a, Monomial b) {
  if (a & b) return 0;
  int swaps = 0;
  for (int j = 0; j < 8; ++j) {
    if (b & (1u << j)) swaps += __builtin_popcount(static_cast<unsigned>(a) >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

void GrassmannElement::check_spec() const {
  if (spec_.pairs < 0 || spec_.pairs > GrassmannSpec::kMaxPairs)
    throw std::invalid_argument("Grassmann pair count out of range");
}

GrassmannElement::GrassmannElement(GrassmannSpec spec, const GaussianRational& scalar)
    : spec_(spec), has_spec_(true) {
  check_spec();
  if (!scalar.is_zero()) terms_.emplace_back(0, scalar);
}

GrassmannElement GrassmannElement::generator(GrassmannSpec spec, int index) {
  if (index < 0 || index >= spec.generators()) throw std::out_of_range("generator index out of range");
  return monomial(spec, static_cast<Monomial>(1u << index));
}

GrassmannElement GrassmannElement::monomial(GrassmannSpec spec, Monomial m, const GaussianRational& c) {
  GrassmannElement x(spec);
  if (m >> spec.generators()) throw std::out_of_range("monomial outside the algebra");
  if (!c.is_zero()) x.terms_.emplace_back(m, c);
  return x;
}

GrassmannElement GrassmannElement::from_terms(GrassmannSpec spec, std::vector<Term> terms) {
  GrassmannElement x(spec);
  for (const auto& [m, c] : terms)
    if (m >> spec.generators()) throw std::out_of_range("monomial outside the algebra");
  x.terms_ = std::move(terms);
  x.normalize();
  return x;
}

GrassmannElement GrassmannElement::constant(const GaussianRational& c) {
  GrassmannElement x;
  if (!c.is_zero()) x.terms_.emplace_back(0, c);
  return x;
}

void GrassmannElement::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  terms_ = std::move(out);
}

void GrassmannElement::adopt(const GrassmannElement& o) {
  if (!o.has_spec_) return;
  if (!has_spec_) {
    spec_ = o.spec_;
    has_spec_ = true;
    return;
  }
  if (!(spec_ == o.spec_)) throw std::invalid_argument("mismatched Grassmann parents");
}

GaussianRational GrassmannElement::coefficient(Monomial m) const {
  for (const auto& t : terms_)
    if (t.first == m) return t.second;
  return 0;
}

GrassmannElement GrassmannElement::soul() const {
  GrassmannElement x = *this;
  if (!x.terms_.empty() && x.terms_.front().first == 0) x.terms_.erase(x.terms_.begin());
  return x;
}

GrassmannElement GrassmannElement::even_part() const {
  GrassmannElement x;
  x.spec_ = spec_;
  x.has_spec_ = has_spec_;
  for (const auto& t : terms_)
    if (monomial_parity(t.first) == 0) x.terms_.push_back(t);
  return x;
}

GrassmannElement GrassmannElement::odd_part() const {
  GrassmannElement x;
  x.spec_ = spec_;
  x.has_spec_ = has_spec_;
  for (const auto& t : terms_)
    if (monomial_parity(t.first) == 1) x.terms_.push_back(t);
  return x;
}

bool GrassmannElement::is_even() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return monomial_parity(t.first) == 0; });
}

bool GrassmannElement::is_odd() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return monomial_parity(t.first) == 1; });
}

namespace {

// Image of a monomial under tilde: returns (sign, image mask).
std::pair<int, Monomial> conjugate_monomial(Monomial m, Kind kind) {
  int sign = 1;
  std::vector<int> images;
  for (int g = 0; g < 8; ++g) {
    if (!(m & (1u << g))) continue;
    int partner = g ^ 1;
    images.push_back(partner);
    if (kind == Kind::graded && (g & 1)) sign = -sign;
  }
  int inversions = 0;
  for (std::size_t a = 0; a < images.size(); ++a)
    for (std::size_t b = a + 1; b < images.size(); ++b)
      if (images[a] > images[b]) ++inversions;
  if (inversions & 1) sign = -sign;
  Monomial out = 0;
  for (int g : images) out |= static_cast<Monomial>(1u << g);
  return {sign, out};
}

}  // namespace

GrassmannElement GrassmannElement::conjugate() const {
  if (has_spec_ && spec_.kind == Kind::plain)
    throw std::logic_error("conjugation is unsupported on a plain Grassmann algebra");
  GrassmannElement x;
  x.spec_ = spec_;
  x.has_spec_ = has_spec_;
  x.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    auto [sign, img] = conjugate_monomial(m, spec_.kind);
    GaussianRational cc = c.conj();
    if (sign < 0) cc = -cc;
    x.terms_.emplace_back(img, std::move(cc));
  }
  x.normalize();
  return x;
}

GrassmannElement conjugate_inverse(const GrassmannElement& x) {
  GrassmannElement y = x.conjugate();
  if (x.spec().kind == Kind::graded) return y.even_part() - y.odd_part();
  return y;
}

GrassmannElement GrassmannElement::operator-() const {
  GrassmannElement x = *this;
  for (auto& t : x.terms_) t.second = -t.second;
  return x;
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& o) {
  adopt(o);
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      a->second += b->second;
      if (!a->second.is_zero()) out.push_back(std::move(*a));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& o) { return *this += -o; }

GrassmannElement& GrassmannElement::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
  GrassmannElement x;
  x.spec_ = a.spec_;
  x.has_spec_ = a.has_spec_;
  x.adopt(b);
  if (a.terms_.empty() || b.terms_.empty()) return x;
  x.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      int s = monomial_product_sign(ma, mb);
      if (s == 0) continue;
      GaussianRational c = ca * cb;
      if (s < 0) c = -c;
      x.terms_.emplace_back(static_cast<Monomial>(ma | mb), std::move(c));
    }
  }
  x.normalize();
  return x;
}

GrassmannElement& GrassmannElement::operator*=(const GrassmannElement& o) {
  *this = *this * o;
  return *this;
}

bool operator==(const GrassmannElement& a, const GrassmannElement& b) {
  if (a.has_spec_ && b.has_spec_ && !(a.spec_ == b.spec_)) return false;
  return a.terms_ == b.terms_;
}

GrassmannElement GrassmannElement::inverse() const {
  GaussianRational b = body();
  if (b.is_zero()) throw std::domain_error("Grassmann element with zero body is not invertible");
  GaussianRational binv = b.inverse();
  GrassmannElement n = soul() * binv;
  GrassmannElement sum(spec_, 1);
  GrassmannElement power(spec_, 1);
  for (int k = 1; k <= 2 * GrassmannSpec::kMaxPairs; ++k) {
    power = power * (-n);
    if (power.is_zero()) break;
    sum += power;
  }
  return sum * binv;
}

int GrassmannElement::nilpotency_index() const {
  GrassmannElement n = soul();
  if (n.is_zero()) return 0;
  GrassmannElement power = n;
  int k = 1;
  while (true) {
    power = power * n;
    if (power.is_zero()) return k;
    ++k;
  }
}

std::string GrassmannElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (int g = 0; g < 8; ++g) {
      if (m & (1u << g)) os << "*x" << (g / 2 + 1) << ((g & 1) ? "-" : "+");
    }
  }
  return os.str();
}

std::vector<Monomial> monomials_of_parity(GrassmannSpec spec, int parity) {
  std::vector<Monomial> out;
  for (int m = 0; m < spec.monomials(); ++m)
    if (monomial_parity(static_cast<Monomial>(m)) == parity) out.push_back(static_cast<Monomial>(m));
  return out;
}

std::vector<GrassmannElement> real_part_basis(GrassmannSpec spec) {
  if (spec.kind != Kind::standard)
    throw std::logic_error("real part basis is only defined for the standard kind");
  // Tilde permutes monomials up to sign, so the fixed set splits over orbits {m, m~}.
  std::vector<GrassmannElement> basis;
  std::vector<bool> seen(spec.monomials(), false);
  GaussianRational i = GaussianRational::i();
  for (int mi = 0; mi < spec.monomials(); ++mi) {
    if (seen[mi]) continue;
    auto m = static_cast<Monomial>(mi);
    GrassmannElement x = GrassmannElement::monomial(spec, m);
    GrassmannElement xt = x.conjugate();
    Monomial img = xt.terms().front().first;
    seen[mi] = seen[img] = true;
    GrassmannElement ix = x * i;
    GaussianRational scale = img == m ? GaussianRational(mpq_class(1, 2)) : GaussianRational(1);
    for (const GrassmannElement& v : {x, ix}) {
      GrassmannElement r = v + v.conjugate();
      if (!r.is_zero()) basis.push_back(r * scale);
    }
  }
  return basis;
}

}  // namespace superreal
