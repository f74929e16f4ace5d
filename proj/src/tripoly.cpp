#include "bisp/tripoly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bisp {

TriPoly TriPoly::from_x(const Poly& p) {
  TriPoly r;
  for (int i = 0; i <= p.degree(); ++i) r.add_term({i, 0, 0}, p.coeff(i));
  return r;
}

TriPoly TriPoly::term(const Rational& c, int i, int j, int k) {
  TriPoly r;
  r.add_term({i, j, k}, c);
  return r;
}

Rational TriPoly::coeff(const Exp& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? Rational() : it->second;
}

bool TriPoly::is_pure_x() const {
  for (const auto& [e, c] : t_)
    if (e[1] != 0 || e[2] != 0) return false;
  return true;
}

Poly TriPoly::x_coeff(int j, int k) const {
  std::vector<Rational> v;
  for (const auto& [e, c] : t_) {
    if (e[1] != j || e[2] != k) continue;
    if (static_cast<int>(v.size()) <= e[0]) v.resize(static_cast<std::size_t>(e[0]) + 1);
    v[static_cast<std::size_t>(e[0])] = c;
  }
  return Poly(std::move(v));
}

Poly TriPoly::to_poly_x() const {
  if (!is_pure_x()) throw std::domain_error("TriPoly: not a polynomial in x alone: " + str());
  return x_coeff(0, 0);
}

int TriPoly::degree(int var) const {
  int d = -1;
  for (const auto& [e, c] : t_) d = std::max(d, e[static_cast<std::size_t>(var)]);
  return d;
}

void TriPoly::add_term(const Exp& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

TriPoly& TriPoly::operator+=(const TriPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

TriPoly& TriPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [e, c] : t_) c *= s;
  return *this;
}

TriPoly TriPoly::operator-() const {
  TriPoly r = *this;
  for (auto& [e, c] : r.t_) c = -c;
  return r;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
  TriPoly r;
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return r;
}

TriPoly TriPoly::swap_xz() const {
  TriPoly r;
  for (const auto& [e, c] : t_) r.t_.emplace(Exp{e[1], e[0], e[2]}, c);
  return r;
}

std::string TriPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  static const char* names[3] = {"x", "z", "xi"};
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c.sign() < 0 ? -c : c;
    os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
    first = false;
    bool constant = e[0] == 0 && e[1] == 0 && e[2] == 0;
    bool need_star = false;
    if (!mag.is_one() || constant) {
      os << mag;
      need_star = true;
    }
    for (int v = 0; v < 3; ++v) {
      if (e[static_cast<std::size_t>(v)] == 0) continue;
      if (need_star) os << "*";
      os << names[v];
      if (e[static_cast<std::size_t>(v)] > 1) os << "^" << e[static_cast<std::size_t>(v)];
      need_star = true;
    }
  }
  return os.str();
}

TriPoly exact_divide(const TriPoly& a, const TriPoly& b) {
  if (b.is_zero()) throw std::domain_error("TriPoly: division by zero");
  const auto lb = b.leading_exp();
  const Rational inv = Rational(1) / b.coeff(lb);
  TriPoly rem = a, quot;
  while (!rem.is_zero()) {
    const auto la = rem.leading_exp();
    if (la[0] < lb[0] || la[1] < lb[1] || la[2] < lb[2])
      throw std::domain_error("TriPoly exact division: nonzero remainder");
    TriPoly t = TriPoly::term(rem.coeff(la) * inv, la[0] - lb[0], la[1] - lb[1], la[2] - lb[2]);
    quot += t;
    rem -= t * b;
  }
  return quot;
}

std::ostream& operator<<(std::ostream& os, const TriPoly& p) { return os << p.str(); }

}  // namespace bisp
