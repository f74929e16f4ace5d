#pragma once

#include "bisp/poly.hpp"

#include <vector>

namespace bisp {

/// Number of distinct real roots in (lo, hi], from a Sturm sequence.
int sturm_count(const Poly& p, const Rational& lo, const Rational& hi);

/// Distinct rational roots in increasing order. Real roots are isolated by
/// Sturm bisection to width below 1/A, where A is the leading coefficient of
/// the primitive integer form; the single candidate k/A in each interval is
/// then tested exactly. Throws std::domain_error for the zero polynomial.
std::vector<Rational> rational_roots(const Poly& p);

}  // namespace bisp
