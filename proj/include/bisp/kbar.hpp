#pragma once

#include "bisp/divisor.hpp"
#include "bisp/matrix.hpp"
#include "bisp/vacuum.hpp"

namespace bisp {

/// Output of the bordered-determinant construction for one divisor.
///
/// `tripoly` is the raw determinant in x, z, xi; `scale` = sign * V^r with
/// V = prod_{i<j}(lambda_i - lambda_j), and kbar is the substitution
/// x^i z^j xi^k -> x^i D^k L0^j of tripoly / scale.
struct KbarResult {
  DiffOp kbar;       ///< order N, polynomial coefficients
  Poly tau;          ///< leading coefficient of kbar, monic of degree n
  Poly q;            ///< prod (z - lambda_i)
  DiffOp flat_kbar;  ///< image of kbar under flat
  TriPoly tripoly;
  int sign = 1;
  Rational scale{1};
  friend bool operator==(const KbarResult&, const KbarResult&) = default;
};

/// The (N+1)x(N+1) bordered matrix over Q[x, z, xi]. Column (i, j) of cusp i
/// holds, at row m = r*k + l, the entry [alpha_ik I + lambda_i^k B(x + lambda_i)]_{l,j}
/// with alpha_ik = gamma_i lambda_i^k + k lambda_i^{k-1} and B the companion
/// matrix of L0 (last row x, a_1, ..., a_{r-2}, 0). The last column holds
/// z^{m/r} xi^{m%r}.
PolyMatrix build_bordered_matrix(const AiryVacuum& l0, const CuspDivisor& c);

/// x^i z^j xi^k -> x^i D^k L0^j, as a Weyl element.
WeylOp substitute_operators(const TriPoly& t, const AiryVacuum& l0);

/// Inverse of substitute_operators: the unique t with w = sum t_ijk x^i D^k L0^j
/// and k < r, found by peeling leading terms under the order
/// (r * x-degree + D-degree, then D-degree).
TriPoly airy_coordinates(const WeylOp& w, const AiryVacuum& l0);

/// Builds Kbar, tau, q and flat(Kbar). The sign makes tau monic.
KbarResult build_kbar(const AiryVacuum& l0, const CuspDivisor& c);

/// flat(Kbar) by swapping x and z in the determinant before substituting.
DiffOp flat_kbar(const KbarResult& result, const AiryVacuum& l0);

/// The monic operator K = (1/tau) Kbar.
inline DiffOp monic_k(const KbarResult& result) { return normalize_monic(result.kbar); }

}  // namespace bisp
