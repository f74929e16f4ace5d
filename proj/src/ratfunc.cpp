#include "bisp/ratfunc.hpp"

#include <ostream>
#include <stdexcept>

namespace bisp {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.degree() > 0) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
  }
  if (!den_.lead().is_one()) {
    Rational s = Rational(1) / den_.lead();
    num_ *= s;
    den_ *= s;
  }
}

const Poly& RatFunc::as_poly() const {
  if (!is_polynomial()) throw std::domain_error("RatFunc: not a polynomial: " + str());
  return num_;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ + b.num_);
  if (b.is_polynomial()) return RatFunc(a.num_ + b.num_ * a.den_, a.den_);
  if (a.is_polynomial()) return RatFunc(a.num_ * b.den_ + b.num_, b.den_);
  // Henrici: only the gcd of the denominators can cancel.
  Poly g = gcd(a.den_, b.den_);
  if (g.degree() == 0) return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  Poly ad = exact_divide(a.den_, g), bd = exact_divide(b.den_, g);
  Poly t = a.num_ * bd + b.num_ * ad;
  return RatFunc(std::move(t), ad * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_);
  Poly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
  Poly n = exact_divide(a.num_, g1) * exact_divide(b.num_, g2);
  Poly d = exact_divide(a.den_, g2) * exact_divide(b.den_, g1);
  RatFunc r;
  r.num_ = std::move(n);
  r.den_ = std::move(d);
  if (!r.den_.lead().is_one()) {
    Rational s = Rational(1) / r.den_.lead();
    r.num_ *= s;
    r.den_ *= s;
  }
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
  return a * RatFunc(b.den_, b.num_);
}

RatFunc RatFunc::derivative() const {
  if (is_polynomial()) return RatFunc(num_.derivative());
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational RatFunc::eval(const Rational& at) const {
  Rational d = den_.eval(at);
  if (d.is_zero()) throw std::domain_error("RatFunc: evaluation at a pole");
  return num_.eval(at) / d;
}

std::string RatFunc::str(const std::string& var) const {
  if (is_polynomial()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

}  // namespace bisp
