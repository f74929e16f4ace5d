#pragma once

#include "bisp/rational.hpp"

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace bisp {

/// Dense univariate polynomial over Q, coefficients stored lowest degree first.
/// The highest stored coefficient is nonzero; the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(const Rational& constant) { if (!constant.is_zero()) c_.push_back(constant); }  // NOLINT
  template <std::integral T>
  Poly(T constant) : Poly(Rational(constant)) {}  // NOLINT

  static Poly x() { return Poly{0, 1}; }
  static Poly monomial(const Rational& c, int k);
  /// prod (x - r) over the given roots.
  static Poly from_roots(const std::vector<Rational>& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  /// Coefficient of x^k; zero outside the stored range.
  Rational coeff(int k) const;
  /// Leading coefficient; zero for the zero polynomial.
  Rational lead() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Rational& s);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  template <std::integral T>
  friend Poly operator*(Poly a, T s) { return a *= Rational(s); }
  template <std::integral T>
  friend Poly operator*(T s, Poly a) { return a *= Rational(s); }
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly derivative() const;
  Rational eval(const Rational& at) const;
  /// p(x + s).
  Poly shift(const Rational& s) const;
  /// p(x) with x -> -x.
  Poly reflect() const;
  Poly pow(int e) const;
  /// Divides by the leading coefficient; zero stays zero.
  Poly monic() const;
  /// Scales to an integer polynomial with coprime coefficients and positive leading term.
  Poly primitive() const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Euclidean division a = q*b + r with deg r < deg b. Throws std::domain_error if b = 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// a / b, throwing std::domain_error when b does not divide a.
Poly exact_divide(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
/// Monic least common multiple.
Poly lcm(const Poly& a, const Poly& b);
/// True when p has no repeated factor (p nonzero).
bool is_squarefree(const Poly& p);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace bisp
