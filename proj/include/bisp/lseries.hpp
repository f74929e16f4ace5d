#pragma once

#include "bisp/rational.hpp"

#include <vector>

namespace bisp {

/// Truncated Laurent series with tracked absolute precision: the value is
/// known modulo x^precision(). Stored as x^val * (c0 + c1 x + ...), c0 != 0;
/// a series with no known nonzero coefficient has valuation == precision.
class LSeries {
 public:
  /// Series whose coefficients of x^0 .. x^{precision-1} are `coeffs` (missing entries zero).
  static LSeries from_coeffs(const std::vector<Rational>& coeffs, int precision);
  static LSeries zero(int precision);

  int valuation() const { return val_; }
  int precision() const { return val_ + static_cast<int>(c_.size()); }
  bool known_nonzero() const { return !c_.empty(); }
  /// Coefficient of x^k; requires k < precision().
  Rational coeff(int k) const;

  friend LSeries operator+(const LSeries& a, const LSeries& b);
  friend LSeries operator-(const LSeries& a, const LSeries& b);
  friend LSeries operator*(const LSeries& a, const LSeries& b);
  /// Throws std::domain_error when b has no known nonzero coefficient.
  friend LSeries operator/(const LSeries& a, const LSeries& b);
  LSeries scaled(const Rational& s) const;

 private:
  void normalize();
  int val_ = 0;
  std::vector<Rational> c_;
};

/// Determinant by elimination with minimal-valuation pivots. The result's
/// precision is a rigorous bound derived from the entries' precisions.
LSeries det_series(std::vector<std::vector<LSeries>> m);

}  // namespace bisp
