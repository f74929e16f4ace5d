#pragma once

#include "bisp/poly.hpp"

#include <iosfwd>
#include <string>

namespace bisp {

/// Reduced rational function num/den in one indeterminate: den is monic and
/// gcd(num, den) = 1. Zero is 0/1.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  template <std::integral T>
  RatFunc(T c) : RatFunc(Rational(c)) {}  // NOLINT
  /// Reduces; throws std::domain_error on a zero denominator.
  RatFunc(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  /// The numerator when the denominator is 1; throws std::domain_error otherwise.
  const Poly& as_poly() const;

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc operator-() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  RatFunc derivative() const;
  /// Throws std::domain_error at a pole.
  Rational eval(const Rational& at) const;

  std::string str(const std::string& var = "x") const;

 private:
  Poly num_, den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

}  // namespace bisp
