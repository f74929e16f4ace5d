#include "bisp/lseries.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

namespace bisp {

LSeries LSeries::from_coeffs(const std::vector<Rational>& coeffs, int precision) {
  LSeries s;
  s.val_ = 0;
  s.c_.assign(static_cast<std::size_t>(std::max(precision, 0)), Rational());
  for (std::size_t k = 0; k < coeffs.size() && k < s.c_.size(); ++k) s.c_[k] = coeffs[k];
  s.normalize();
  return s;
}

LSeries LSeries::zero(int precision) {
  LSeries s;
  s.val_ = precision;
  return s;
}

void LSeries::normalize() {
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead == 0) return;
  val_ += static_cast<int>(lead);
  c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
}

Rational LSeries::coeff(int k) const {
  if (k >= precision()) throw std::out_of_range("LSeries::coeff beyond known precision");
  if (k < val_) return {};
  return c_[static_cast<std::size_t>(k - val_)];
}

LSeries operator+(const LSeries& a, const LSeries& b) {
  LSeries r;
  const int prec = std::min(a.precision(), b.precision());
  r.val_ = std::min({a.val_, b.val_, prec});
  r.c_.resize(static_cast<std::size_t>(prec - r.val_));
  for (int k = r.val_; k < prec; ++k) r.c_[static_cast<std::size_t>(k - r.val_)] = a.coeff(k) + b.coeff(k);
  r.normalize();
  return r;
}

LSeries operator-(const LSeries& a, const LSeries& b) { return a + b.scaled(-1); }

LSeries operator*(const LSeries& a, const LSeries& b) {
  if (!a.known_nonzero() || !b.known_nonzero())
    return LSeries::zero(std::min(a.val_ + b.precision(), b.val_ + a.precision()));
  LSeries r;
  r.val_ = a.val_ + b.val_;
  const std::size_t len = std::min(a.c_.size(), b.c_.size());
  std::vector<mpq_class> acc(len);
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = 0; i + j < len; ++j) acc[i + j] += a.c_[i].value() * b.c_[j].value();
  r.c_.reserve(len);
  for (auto& v : acc) r.c_.emplace_back(std::move(v));
  return r;
}

LSeries operator/(const LSeries& a, const LSeries& b) {
  if (!b.known_nonzero()) throw std::domain_error("LSeries: division by a series with no known nonzero term");
  LSeries inv;
  inv.val_ = -b.val_;
  const std::size_t len = b.c_.size();
  inv.c_.resize(len);
  const Rational u0 = Rational(1) / b.c_[0];
  inv.c_[0] = u0;
  for (std::size_t k = 1; k < len; ++k) {
    mpq_class s = 0;
    for (std::size_t j = 1; j <= k; ++j) s += b.c_[j].value() * inv.c_[k - j].value();
    inv.c_[k] = -Rational(mpq_class(s)) * u0;
  }
  return a * inv;
}

LSeries LSeries::scaled(const Rational& s) const {
  if (s.is_zero()) return zero(precision());
  LSeries r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

LSeries det_series(std::vector<std::vector<LSeries>> m) {
  const std::size_t n = m.size();
  if (n == 0) return LSeries::from_coeffs({Rational(1)}, 1);
  std::optional<LSeries> det;
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i) {
      if (!m[i][k].known_nonzero()) continue;
      if (piv == n || m[i][k].valuation() < m[piv][k].valuation() ||
          (m[i][k].valuation() == m[piv][k].valuation() && m[i][k].precision() > m[piv][k].precision()))
        piv = i;
    }
    if (piv == n) {
      // Remaining block has a column known only to be O(x^p): bound the
      // valuation of every Leibniz term by the column minima.
      int bound = det ? det->valuation() : 0;
      for (std::size_t j = k; j < n; ++j) {
        int col_min = std::numeric_limits<int>::max();
        for (std::size_t i = k; i < n; ++i) col_min = std::min(col_min, m[i][j].valuation());
        bound += col_min;
      }
      return LSeries::zero(bound);
    }
    if (piv != k) {
      std::swap(m[piv], m[k]);
      negate = !negate;
    }
    const LSeries& p = m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const LSeries f = m[i][k] / p;
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = m[i][j] - f * m[k][j];
    }
    det = det ? *det * p : p;
  }
  return negate ? det->scaled(-1) : *det;
}

}  // namespace bisp
