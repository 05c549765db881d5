#include "superreal/gaussian.hpp"

#include <ostream>
#include <stdexcept>

namespace superreal {

GaussianRational GaussianRational::inverse() const {
  mpq_class n = norm();
  if (sgn(n) == 0) throw std::domain_error("division by zero in GaussianRational");
  return {mpq_class(re_ / n), mpq_class(-im_ / n)};
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(o.im_) == 0) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  if (sgn(im_) == 0) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class m = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

mpq_class parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "i";
  }
  if (sgn(re_) == 0) return imag;
  if (imag[0] == '-') return re_.get_str() + imag;
  return re_.get_str() + "+" + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

GaussianRational i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return 1;
    case 1:
      return GaussianRational::i();
    case 2:
      return -1;
    default:
      return -GaussianRational::i();
  }
}

}  // namespace superreal
