#include "bisp/weyl.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bisp {

WeylOp WeylOp::term(const Rational& c, int i, int j) {
  WeylOp r;
  r.add_term(i, j, c);
  return r;
}

Rational WeylOp::coeff(int i, int j) const {
  auto it = t_.find({i, j});
  return it == t_.end() ? Rational() : it->second;
}

int WeylOp::order() const {
  int o = -1;
  for (const auto& [k, c] : t_) o = std::max(o, k.second);
  return o;
}

int WeylOp::x_degree() const { return t_.empty() ? -1 : t_.rbegin()->first.first; }

void WeylOp::add_term(int i, int j, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

WeylOp& WeylOp::operator+=(const WeylOp& o) {
  for (const auto& [k, c] : o.t_) add_term(k.first, k.second, c);
  return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o) {
  for (const auto& [k, c] : o.t_) add_term(k.first, k.second, -c);
  return *this;
}

WeylOp& WeylOp::operator*=(const Rational& s) {
  if (s.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [k, c] : t_) c *= s;
  return *this;
}

WeylOp WeylOp::operator-() const {
  WeylOp r = *this;
  for (auto& [k, c] : r.t_) c = -c;
  return r;
}

WeylOp operator*(const WeylOp& a, const WeylOp& b) {
  // (x^p D^q)(x^s D^t) = sum_k C(q,k) s!/(s-k)! x^{p+s-k} D^{q+t-k}
  WeylOp r;
  for (const auto& [ka, ca] : a.t_) {
    const auto [p, q] = ka;
    for (const auto& [kb, cb] : b.t_) {
      const auto [s, t] = kb;
      mpz_class binom = 1, falling = 1;
      Rational base = ca * cb;
      for (int k = 0; k <= std::min(q, s); ++k) {
        r.add_term(p + s - k, q + t - k, base * Rational(mpz_class(binom * falling)));
        binom = binom * (q - k) / (k + 1);
        falling *= (s - k);
      }
    }
  }
  return r;
}

WeylOp WeylOp::pow(int e) const {
  if (e < 0) throw std::invalid_argument("WeylOp::pow: negative exponent");
  WeylOp r(1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string WeylOp::str() const { return weyl_to_diffop(*this).str(); }

DiffOp weyl_to_diffop(const WeylOp& t) {
  std::vector<std::vector<Rational>> coeffs;
  for (const auto& [k, c] : t.terms()) {
    auto [i, j] = k;
    if (static_cast<int>(coeffs.size()) <= j) coeffs.resize(static_cast<std::size_t>(j) + 1);
    auto& v = coeffs[static_cast<std::size_t>(j)];
    if (static_cast<int>(v.size()) <= i) v.resize(static_cast<std::size_t>(i) + 1);
    v[static_cast<std::size_t>(i)] = c;
  }
  std::vector<RatFunc> out;
  out.reserve(coeffs.size());
  for (auto& v : coeffs) out.emplace_back(Poly(std::move(v)));
  return DiffOp(std::move(out));
}

WeylOp diffop_to_weyl(const DiffOp& a) {
  WeylOp r;
  for (int j = 0; j <= a.order(); ++j) {
    const RatFunc c = a.coeff(j);
    if (!c.is_polynomial()) throw std::domain_error("diffop_to_weyl: non-polynomial coefficient " + c.str());
    const Poly& p = c.num();
    for (int i = 0; i <= p.degree(); ++i) r.add_term(i, j, p.coeff(i));
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const WeylOp& t) { return os << t.str(); }

}  // namespace bisp
