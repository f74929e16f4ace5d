#pragma once

#include "bisp/diffop.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bisp {

/// Element sum c_ij x^i D^j of the Weyl algebra in normal order (every x to the
/// left of every D). No stored zeros, so equality is equality of normal forms.
class WeylOp {
 public:
  using Key = std::pair<int, int>;  // (power of x, power of D)
  using Terms = std::map<Key, Rational>;

  WeylOp() = default;
  WeylOp(const Rational& c) { add_term(0, 0, c); }  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  WeylOp(T c) : WeylOp(Rational(c)) {}  // NOLINT
  static WeylOp x(int i = 1) { return term(1, i, 0); }
  static WeylOp d(int j = 1) { return term(1, 0, j); }
  static WeylOp term(const Rational& c, int i, int j);

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Rational coeff(int i, int j) const;
  /// Highest power of D, -1 for zero.
  int order() const;
  /// Highest power of x, -1 for zero.
  int x_degree() const;

  void add_term(int i, int j, const Rational& c);

  WeylOp& operator+=(const WeylOp& o);
  WeylOp& operator-=(const WeylOp& o);
  WeylOp& operator*=(const Rational& s);
  WeylOp operator-() const;
  friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
  friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
  friend WeylOp operator*(const WeylOp& a, const WeylOp& b);
  friend WeylOp operator*(WeylOp a, const Rational& s) { return a *= s; }
  friend bool operator==(const WeylOp&, const WeylOp&) = default;

  WeylOp pow(int e) const;
  std::string str() const;

 private:
  Terms t_;
};

/// Polynomial-coefficient DiffOp with the same action.
DiffOp weyl_to_diffop(const WeylOp& t);
/// Inverse of weyl_to_diffop; throws std::domain_error on a coefficient that
/// is not a polynomial.
WeylOp diffop_to_weyl(const DiffOp& a);

std::ostream& operator<<(std::ostream& os, const WeylOp& t);

}  // namespace bisp
