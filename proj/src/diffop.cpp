#include "bisp/diffop.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bisp {

namespace {

Rational binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

/// Splits A into a common denominator: A = (1/den)∘num with num polynomial.
struct Cleared {
  std::vector<Poly> num;
  Poly den;
};

Cleared clear_denominators(const DiffOp& a) {
  Cleared out{{}, Poly(1)};
  for (const auto& c : a.coeffs()) out.den = lcm(out.den, c.den());
  for (const auto& c : a.coeffs()) out.num.push_back(c.num() * exact_divide(out.den, c.den()));
  return out;
}

/// Positive rational c with every coefficient of v / c an integer and
/// those integers coprime; 1 for all-zero input.
Rational content(const std::vector<Poly>& v) {
  mpz_class l = 1, g = 0;
  for (const auto& p : v)
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.value().get_den_mpz_t());
  for (const auto& p : v)
    for (const auto& c : p.coeffs()) {
      const mpz_class t = c.num() * (l / c.den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.get_mpz_t());
    }
  if (g == 0) return Rational(1);
  mpq_class c(g, l);
  c.canonicalize();
  return Rational(c);
}

void trim_polys(std::vector<Poly>& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

/// (sum_i a_i D^i)∘(sum_j b_j D^j) with polynomial coefficients.
std::vector<Poly> compose_poly(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Poly> out(a.size() + b.size() - 1);
  for (std::size_t j = 0; j < b.size(); ++j) {
    Poly deriv = b[j];
    for (std::size_t k = 0; k < a.size() && !deriv.is_zero(); ++k) {
      for (std::size_t i = k; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        out[i + j - k] += a[i] * deriv * binomial(static_cast<int>(i), static_cast<int>(k));
      }
      deriv = deriv.derivative();
    }
  }
  trim_polys(out);
  return out;
}

/// n / s^e for a fixed squarefree s.
struct RadicalFraction {
  Poly num;
  int e = 0;
};

class RadicalPowers {
 public:
  explicit RadicalPowers(Poly s) : pow_{Poly(1), std::move(s)} {}
  const Poly& base() const { return pow_[1]; }
  const Poly& pow(int e) {
    while (static_cast<int>(pow_.size()) <= e) pow_.push_back(pow_.back() * pow_[1]);
    return pow_[static_cast<std::size_t>(e)];
  }
  RadicalFraction convert(const RatFunc& f) {
    if (f.is_zero()) return {};
    for (int e = 0;; ++e) {
      auto [q, r] = divmod(pow(e), f.den());
      if (r.is_zero()) return {f.num() * q, e};
    }
  }
  void accumulate(RadicalFraction& acc, const RadicalFraction& t) {
    if (t.num.is_zero()) return;
    if (acc.num.is_zero()) {
      acc = t;
    } else if (acc.e >= t.e) {
      acc.num += t.num * pow(acc.e - t.e);
    } else {
      acc.num = acc.num * pow(t.e - acc.e) + t.num;
      acc.e = t.e;
    }
  }
  /// num/den for a den dividing a constant times a power of the base.
  RatFunc reduce_over(Poly num, Poly den) {
    if (num.is_zero()) return {};
    for (;;) {
      if (den.degree() <= 0) break;
      auto [qd, rd] = divmod(den, base());
      if (!rd.is_zero()) break;
      auto [qn, rn] = divmod(num, base());
      if (!rn.is_zero()) break;
      num = std::move(qn);
      den = std::move(qd);
    }
    return RatFunc(std::move(num), std::move(den));
  }
  RatFunc reduce(RadicalFraction f) {
    if (f.num.is_zero()) return {};
    while (f.e > 0) {
      auto [q, r] = divmod(f.num, base());
      if (!r.is_zero()) break;
      f.num = std::move(q);
      --f.e;
    }
    return RatFunc(std::move(f.num), pow(f.e));
  }

 private:
  std::vector<Poly> pow_;
};

}  // namespace

void DiffOp::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

DiffOp DiffOp::d(int k) { return monomial(RatFunc(1), k); }

DiffOp DiffOp::monomial(const RatFunc& f, int k) {
  if (k < 0) throw std::invalid_argument("DiffOp::monomial: negative order");
  DiffOp r;
  if (f.is_zero()) return r;
  r.c_.assign(static_cast<std::size_t>(k) + 1, RatFunc());
  r.c_.back() = f;
  return r;
}

RatFunc DiffOp::coeff(int k) const {
  if (k < 0 || k > order()) return {};
  return c_[static_cast<std::size_t>(k)];
}

bool DiffOp::is_polynomial() const {
  for (const auto& c : c_)
    if (!c.is_polynomial()) return false;
  return true;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

DiffOp DiffOp::operator-() const {
  DiffOp r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial()) {
    std::vector<Poly> pa, pb;
    for (const auto& c : a.c_) pa.push_back(c.num());
    for (const auto& c : b.c_) pb.push_back(c.num());
    std::vector<RatFunc> out;
    for (auto& p : compose_poly(pa, pb)) out.emplace_back(std::move(p));
    return DiffOp(std::move(out));
  }
  // Every denominator divides a power of the squarefree radical s, and
  // d/dx (n / s^e) = (n' s - e s' n) / s^{e+1}, so exponents stay small.
  Poly big(1);
  for (const auto& c : a.c_) big = lcm(big, c.den());
  for (const auto& c : b.c_) big = lcm(big, c.den());
  RadicalPowers rad(exact_divide(big, gcd(big, big.derivative())));
  const Poly ds = rad.base().derivative();
  std::vector<RadicalFraction> fa, out(a.c_.size() + b.c_.size() - 1);
  for (const auto& c : a.c_) fa.push_back(rad.convert(c));
  for (std::size_t j = 0; j < b.c_.size(); ++j) {
    RadicalFraction deriv = rad.convert(b.c_[j]);
    for (std::size_t k = 0; k < a.c_.size() && !deriv.num.is_zero(); ++k) {
      for (std::size_t i = k; i < a.c_.size(); ++i) {
        if (fa[i].num.is_zero()) continue;
        RadicalFraction term{fa[i].num * deriv.num * binomial(static_cast<int>(i), static_cast<int>(k)), fa[i].e + deriv.e};
        rad.accumulate(out[i + j - k], term);
      }
      if (k + 1 < a.c_.size())
        deriv = {deriv.num.derivative() * rad.base() - deriv.num * ds * Rational(deriv.e), deriv.e + 1};
    }
  }
  std::vector<RatFunc> res;
  for (auto& f : out) res.push_back(rad.reduce(std::move(f)));
  return DiffOp(std::move(res));
}

DiffOp DiffOp::left_mul(const RatFunc& f) const {
  if (f.is_zero()) return {};
  DiffOp r = *this;
  for (auto& c : r.c_) c = f * c;
  return r;
}

RatFunc DiffOp::apply(const RatFunc& u) const {
  RatFunc acc, deriv = u;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    acc += c_[i] * deriv;
    if (i + 1 < c_.size()) deriv = deriv.derivative();
  }
  return acc;
}

std::string DiffOp::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = order(); k >= 0; --k) {
    const RatFunc& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string body = c.str(var);
    bool simple_const = c.is_polynomial() && c.num().degree() == 0;
    if (!first) os << " ";
    if (simple_const) {
      Rational v = c.num().lead();
      if (v.sign() < 0) {
        os << (first ? "-" : "- ");
        v = -v;
      } else if (!first) {
        os << "+ ";
      }
      if (k == 0) os << v;
      else if (!v.is_one()) os << v << "*";
    } else {
      if (!first) os << "+ ";
      os << "(" << body << ")";
      if (k > 0) os << "*";
    }
    if (k > 0) {
      os << "D";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

std::pair<DiffOp, DiffOp> right_divide(const DiffOp& a, const DiffOp& b) {
  if (b.is_zero()) throw std::domain_error("right_divide: zero divisor");
  if (a.order() < b.order()) return {DiffOp(), a};
  // A = (1/da)Â, B = (1/db)B̂. Pseudo-divide Â by B̂ over Q[x]:
  // F·Â = Q'∘B̂ + R' with F a polynomial built from the divisor's leading
  // coefficient. Then Q = (1/(da F))Q' ∘ db and R = (1/(da F))R'.
  Cleared ca = clear_denominators(a), cb = clear_denominators(b);
  const int m = b.order();
  const Poly& lead = cb.num.back();
  std::vector<Poly> rem = ca.num;
  std::vector<Poly> quot(static_cast<std::size_t>(a.order() - m) + 1);
  // factor = c * (product of divisors of lead), c a rational constant.
  Poly factor(1);
  while (static_cast<int>(rem.size()) - 1 >= m) {
    const int s = static_cast<int>(rem.size()) - 1 - m;
    Poly alpha = rem.back();
    Poly g = gcd(alpha, lead);
    Poly scale = exact_divide(lead, g);
    alpha = exact_divide(alpha, g);
    if (scale.degree() == 0) {
      alpha *= Rational(1) / scale.lead();
    } else {
      for (auto& p : rem) p *= scale;
      for (auto& p : quot) p *= scale;
      factor *= scale;
    }
    quot[static_cast<std::size_t>(s)] += alpha;
    std::vector<Poly> step(static_cast<std::size_t>(s) + 1);
    step.back() = alpha;
    auto sub = compose_poly(step, cb.num);
    for (std::size_t i = 0; i < sub.size(); ++i) rem[i] -= sub[i];
    trim_polys(rem);
    const Rational c = content(rem);
    if (!c.is_one()) {
      const Rational inv = Rational(1) / c;
      for (auto& p : rem) p *= inv;
      for (auto& p : quot) p *= inv;
      factor *= inv;
    }
  }
  const Poly both = lcm(lead, ca.den);
  RadicalPowers rad(exact_divide(both, gcd(both, both.derivative())));
  const Poly denom = ca.den * factor;
  std::vector<RatFunc> r;
  for (auto& p : rem) r.push_back(rad.reduce_over(std::move(p), denom));
  std::vector<RatFunc> q;
  for (auto& p : compose_poly(quot, {cb.den})) q.push_back(rad.reduce_over(std::move(p), denom));
  return {DiffOp(std::move(q)), DiffOp(std::move(r))};
}

DiffOp normalize_monic(const DiffOp& a) {
  if (a.is_zero()) throw std::domain_error("normalize_monic: zero operator");
  return a.left_mul(RatFunc(1) / a.lead());
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

DiffOp pow(const DiffOp& a, int e) {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  DiffOp r(1);
  for (int i = 0; i < e; ++i) r = r * a;
  return r;
}

DiffOp poly_of(const Poly& p, const DiffOp& l) {
  DiffOp acc;
  for (int k = p.degree(); k >= 0; --k) acc = acc * l + DiffOp(p.coeff(k));
  return acc;
}

std::ostream& operator<<(std::ostream& os, const DiffOp& a) { return os << a.str(); }

}  // namespace bisp
