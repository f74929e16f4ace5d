#pragma once

#include "bisp/ratfunc.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace bisp {

/// Ordinary differential operator sum_i a_i(x) D^i with coefficients in Q(x).
/// Index i of the coefficient list is the power of D; the last stored
/// coefficient is nonzero and the zero operator is empty.
class DiffOp {
 public:
  DiffOp() = default;
  explicit DiffOp(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) { trim(); }
  DiffOp(const RatFunc& f) { if (!f.is_zero()) c_.push_back(f); }  // NOLINT(google-explicit-constructor)
  DiffOp(const Poly& f) : DiffOp(RatFunc(f)) {}                    // NOLINT
  DiffOp(const Rational& c) : DiffOp(RatFunc(c)) {}                // NOLINT
  template <std::integral T>
  DiffOp(T c) : DiffOp(RatFunc(c)) {}  // NOLINT

  /// D^k.
  static DiffOp d(int k = 1);
  /// f D^k.
  static DiffOp monomial(const RatFunc& f, int k);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<RatFunc>& coeffs() const { return c_; }
  /// Coefficient of D^k, zero outside the stored range.
  RatFunc coeff(int k) const;
  RatFunc lead() const { return c_.empty() ? RatFunc() : c_.back(); }
  bool is_polynomial() const;
  bool is_monic() const { return !c_.empty() && c_.back() == RatFunc(1); }

  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  DiffOp operator-() const;
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  /// Composition a∘b (Leibniz rule).
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
  friend bool operator==(const DiffOp&, const DiffOp&) = default;

  /// f∘this, i.e. every coefficient multiplied by f.
  DiffOp left_mul(const RatFunc& f) const;
  /// Applies the operator to a function.
  RatFunc apply(const RatFunc& u) const;

  /// Descending powers, e.g. "(x - 1)*D^2 - D + (-x^2 + x + 1)".
  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<RatFunc> c_;
};

/// A = Q∘B + R with order(R) < order(B). Throws std::domain_error if B = 0.
std::pair<DiffOp, DiffOp> right_divide(const DiffOp& a, const DiffOp& b);

/// (1/lead)∘A. Throws std::domain_error for the zero operator.
DiffOp normalize_monic(const DiffOp& a);

DiffOp commutator(const DiffOp& a, const DiffOp& b);
DiffOp pow(const DiffOp& a, int e);
/// p(L) by Horner's rule.
DiffOp poly_of(const Poly& p, const DiffOp& l);

std::ostream& operator<<(std::ostream& os, const DiffOp& a);

}  // namespace bisp
