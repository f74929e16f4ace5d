#include "bisp/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bisp {

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(const Rational& c, int k) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::from_roots(const std::vector<Rational>& roots) {
  Poly p(1);
  for (const auto& r : roots) p *= Poly{-r, 1};
  return p;
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return {};
  return c_[static_cast<std::size_t>(k)];
}

Rational Poly::lead() const { return c_.empty() ? Rational() : c_.back(); }

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

namespace {

/// Integer numerators over the lcm of the denominators.
std::vector<mpz_class> scaled_integers(const std::vector<Rational>& c, mpz_class& den) {
  den = 1;
  for (const auto& v : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.value().get_den_mpz_t());
  std::vector<mpz_class> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    mpz_divexact(out[i].get_mpz_t(), den.get_mpz_t(), c[i].value().get_den_mpz_t());
    out[i] *= c[i].value().get_num();
  }
  return out;
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  mpz_class da, db;
  const auto za = scaled_integers(a.c_, da), zb = scaled_integers(b.c_, db);
  std::vector<mpz_class> acc(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < za.size(); ++i) {
    if (za[i] == 0) continue;
    for (std::size_t j = 0; j < zb.size(); ++j) mpz_addmul(acc[i + j].get_mpz_t(), za[i].get_mpz_t(), zb[j].get_mpz_t());
  }
  const mpz_class den = da * db;
  std::vector<Rational> out;
  out.reserve(acc.size());
  for (auto& v : acc) {
    out.emplace_back(mpq_class(v, den));
  }
  return Poly(std::move(out));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(d));
}

Rational Poly::eval(const Rational& at) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::shift(const Rational& s) const {
  // Horner in (x + s).
  Poly acc;
  const Poly lin{s, 1};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + Poly(*it);
  return acc;
}

Poly Poly::reflect() const {
  Poly r = *this;
  for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
  Poly result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero() || lead().is_one()) return *this;
  return *this * (Rational(1) / lead());
}

Poly Poly::primitive() const {
  if (is_zero()) return {};
  mpz_class l = 1, g = 0;
  for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.value().get_den_mpz_t());
  std::vector<Rational> out;
  out.reserve(c_.size());
  for (const auto& c : c_) {
    mpz_class v = c.num() * (l / c.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.emplace_back(v);
  }
  Rational s(mpq_class(1, g));
  if (out.back().sign() < 0) s = -s;
  for (auto& c : out) c *= s;
  return Poly(std::move(out));
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const Rational inv = Rational(1) / b.lead();
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int k = a.degree(); k >= db; --k) {
    Rational t = r[static_cast<std::size_t>(k)] * inv;
    if (t.is_zero()) continue;
    q[static_cast<std::size_t>(k - db)] = t;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= t * bc[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly exact_divide(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("exact division: nonzero remainder");
  return q;
}

namespace {

using ZPoly = std::vector<mpz_class>;

void trim_z(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0 || g == 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

ZPoly to_integer(const Poly& p) {
  const Poly q = p.primitive();
  ZPoly out;
  out.reserve(q.coeffs().size());
  for (const auto& c : q.coeffs()) out.push_back(c.num());
  return out;
}

/// Remainder of lc(v)^k u by v, computed over Z.
ZPoly pseudo_remainder(ZPoly u, const ZPoly& v) {
  const std::size_t dv = v.size() - 1;
  const mpz_class& lv = v.back();
  while (u.size() > dv && !u.empty()) {
    const mpz_class lu = u.back();
    const std::size_t shift = u.size() - 1 - dv;
    for (auto& c : u) c *= lv;
    for (std::size_t j = 0; j <= dv; ++j) u[shift + j] -= lu * v[j];
    trim_z(u);
  }
  return u;
}

using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, a = mul_mod(a, a, p))
    if (e & 1) r = mul_mod(r, a, p);
  return r;
}

/// Degree of gcd(u mod p, v mod p); -1 when p divides a leading coefficient.
int modular_gcd_degree(const ZPoly& u, const ZPoly& v, u64 p) {
  auto reduce = [p](const ZPoly& z) {
    std::vector<u64> out;
    out.reserve(z.size());
    for (const auto& c : z) out.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
    return out;
  };
  std::vector<u64> a = reduce(u), b = reduce(v);
  if (a.back() == 0 || b.back() == 0) return -1;
  auto trim = [](std::vector<u64>& w) {
    while (!w.empty() && w.back() == 0) w.pop_back();
  };
  while (!b.empty()) {
    const u64 inv = pow_mod(b.back(), p - 2, p);
    const std::size_t db = b.size() - 1;
    while (a.size() > db && !a.empty()) {
      const u64 t = mul_mod(a.back(), inv, p);
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t j = 0; j <= db; ++j) a[shift + j] = (a[shift + j] + p - mul_mod(t, b[j], p)) % p;
      trim(a);
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.is_zero() ? Poly() : b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return Poly(1);
  ZPoly u = to_integer(a), v = to_integer(b);
  // A coprime image modulo a prime not dividing either leading coefficient
  // proves coprimality over Q.
  for (u64 p : {2305843009213693951ULL, 4294967291ULL}) {
    const int d = modular_gcd_degree(u, v, p);
    if (d == 0) return Poly(1);
    if (d > 0) break;
  }
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    if (v.size() == 1) return Poly(1);
    ZPoly r = pseudo_remainder(std::move(u), v);
    make_primitive(r);
    u = std::move(v);
    v = std::move(r);
  }
  std::vector<Rational> c;
  c.reserve(u.size());
  for (auto& z : u) c.emplace_back(std::move(z));
  return Poly(std::move(c)).monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return (exact_divide(a, gcd(a, b)) * b).monic();
}

bool is_squarefree(const Poly& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).degree() == 0;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace bisp
