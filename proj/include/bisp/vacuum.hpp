#pragma once

#include "bisp/weyl.hpp"

#include <string>
#include <vector>

namespace bisp {

/// Generalized Airy operator L0 = D^r - a_{r-2} D^{r-2} - ... - a_1 D - x.
/// `a[i-1]` holds a_i; the D^{r-1} coefficient is absent.
class AiryVacuum {
 public:
  /// Throws std::invalid_argument unless r >= 2 and a.size() == r - 2.
  AiryVacuum(int r, std::vector<Rational> a = {});

  int r() const { return r_; }
  const std::vector<Rational>& a() const { return a_; }
  /// a_i for 1 <= i <= r-2, zero otherwise.
  Rational a_coeff(int i) const;

  WeylOp as_weyl() const;
  DiffOp as_diffop() const { return weyl_to_diffop(as_weyl()); }
  std::string str() const { return as_diffop().str(); }
  friend bool operator==(const AiryVacuum&, const AiryVacuum&) = default;

 private:
  int r_;
  std::vector<Rational> a_;
};

/// The anti-automorphism of the Weyl algebra with x -> L0 and D -> D,
/// applied monomial by monomial: x^i D^j -> D^j L0^i.
WeylOp flat(const WeylOp& t, const AiryVacuum& l0);

}  // namespace bisp
