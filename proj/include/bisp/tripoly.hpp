#pragma once

#include "bisp/poly.hpp"

#include <array>
#include <iosfwd>
#include <map>
#include <string>

namespace bisp {

/// Sparse polynomial in x, z, xi. Exponent key is {i, j, k} for x^i z^j xi^k.
/// No stored zeros.
class TriPoly {
 public:
  using Exp = std::array<int, 3>;
  using Terms = std::map<Exp, Rational>;

  TriPoly() = default;
  TriPoly(const Rational& c) { add_term({0, 0, 0}, c); }  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  TriPoly(T c) : TriPoly(Rational(c)) {}  // NOLINT
  /// Embeds a polynomial in x.
  static TriPoly from_x(const Poly& p);
  static TriPoly term(const Rational& c, int i, int j, int k);
  static TriPoly x() { return term(1, 1, 0, 0); }
  static TriPoly z() { return term(1, 0, 1, 0); }
  static TriPoly xi() { return term(1, 0, 0, 1); }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Rational coeff(const Exp& e) const;
  /// True when no term involves z or xi.
  bool is_pure_x() const;
  /// The polynomial in x multiplying z^j xi^k.
  Poly x_coeff(int j, int k) const;
  /// Throws std::domain_error unless is_pure_x().
  Poly to_poly_x() const;
  /// Lexicographically largest exponent (x, then z, then xi); requires nonzero.
  const Exp& leading_exp() const { return t_.rbegin()->first; }
  int degree(int var) const;

  void add_term(const Exp& e, const Rational& c);

  TriPoly& operator+=(const TriPoly& o);
  TriPoly& operator-=(const TriPoly& o);
  TriPoly& operator*=(const Rational& s);
  TriPoly operator-() const;
  friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
  friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator*(TriPoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const TriPoly&, const TriPoly&) = default;

  /// Exchanges the roles of x and z.
  TriPoly swap_xz() const;

  std::string str() const;

 private:
  Terms t_;
};

/// a / b for exact multivariate division (lex order); throws std::domain_error
/// if b does not divide a, or b = 0.
TriPoly exact_divide(const TriPoly& a, const TriPoly& b);

std::ostream& operator<<(std::ostream& os, const TriPoly& p);

}  // namespace bisp
