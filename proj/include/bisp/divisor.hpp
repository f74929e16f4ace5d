#pragma once

#include "bisp/poly.hpp"

#include <compare>
#include <vector>

namespace bisp {

/// The distribution delta_lambda∘(D_z + gamma).
struct Cusp {
  Rational lambda;
  Rational gamma;
  friend bool operator==(const Cusp&, const Cusp&) = default;
  friend auto operator<=>(const Cusp&, const Cusp&) = default;
};

/// A point of the cusp-divisor space: first-order distributions with
/// pairwise distinct support points. The empty divisor is allowed and
/// gives the identity transformation.
class CuspDivisor {
 public:
  CuspDivisor() = default;
  /// Throws std::invalid_argument("duplicate lambda ...") if two cusps share lambda.
  explicit CuspDivisor(std::vector<Cusp> cusps);

  const std::vector<Cusp>& cusps() const { return cusps_; }
  int n() const { return static_cast<int>(cusps_.size()); }
  int big_n(int r) const { return r * n(); }
  /// q(z) = prod (z - lambda_i).
  Poly q() const;
  /// prod_{i<j} (lambda_i - lambda_j), in the stored order.
  Rational vandermonde() const;
  /// Cusps sorted by lambda; two divisors are equal as spaces iff these match.
  CuspDivisor canonical() const;
  bool same_space(const CuspDivisor& o) const { return canonical().cusps_ == o.canonical().cusps_; }
  friend bool operator==(const CuspDivisor&, const CuspDivisor&) = default;

 private:
  std::vector<Cusp> cusps_;
};

}  // namespace bisp
