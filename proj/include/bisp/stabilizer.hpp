#pragma once

#include "bisp/divisor.hpp"
#include "bisp/kbar.hpp"
#include "bisp/vacuum.hpp"

#include <vector>

namespace bisp {

/// Basis of {p : deg p <= degree_bound} intersected with a stabilizer ring.
/// The basis is in canonical form: monic elements of distinct degrees, each
/// with zero coefficient at the other elements' leading degrees, sorted by degree.
struct StabilizerBasis {
  int degree_bound = 0;
  std::vector<Poly> basis;
  friend bool operator==(const StabilizerBasis&, const StabilizerBasis&) = default;
};

/// Canonical form of span(polys) restricted to degree <= bound.
StabilizerBasis canonical_span(const std::vector<Poly>& polys, int bound);

/// {p : p'(lambda_i) = 0 for every cusp}, by exact linear algebra.
StabilizerBasis stabilizer_closed(const CuspDivisor& c, int degree_bound);

/// {p : T p(L) lies in the left ideal generated by T}, decided by the
/// vanishing of the right-division remainder. Throws std::invalid_argument
/// for a zero T or L.
StabilizerBasis stabilizer_generic(const DiffOp& t, const DiffOp& l, int degree_bound);

/// L_p = K p(L0) K^{-1} for K = (1/tau) Kbar, as the exact quotient of
/// K∘p(L0) by K. Throws std::domain_error("... not in the stabilizer") when
/// the remainder is nonzero.
DiffOp darboux_conjugate(const DiffOp& kbar, const AiryVacuum& l0, const Poly& p);

struct RingGenerator {
  Poly p;
  DiffOp op;
  int order() const { return op.order(); }
  friend bool operator==(const RingGenerator&, const RingGenerator&) = default;
};

struct CommutatorCheck {
  int first = 0, second = 0;
  bool commutes = false;
  friend bool operator==(const CommutatorCheck&, const CommutatorCheck&) = default;
};

/// Commutative ring of Darboux-conjugated operators {L_p : p in R_C}.
struct BispectralRing {
  AiryVacuum vacuum{2};
  CuspDivisor divisor;
  DiffOp kbar;
  std::vector<RingGenerator> generators;
  std::vector<CommutatorCheck> commutators;
  /// gcd of generator orders (0 when there are no generators).
  int rank() const;
  bool all_commute() const;
};

/// Generators are L_p for every non-constant element of the canonical
/// stabilizer basis of degree <= degree_bound; all pairwise commutators are
/// computed exactly.
BispectralRing build_ring(const AiryVacuum& l0, const CuspDivisor& c, int degree_bound);
BispectralRing build_ring(const AiryVacuum& l0, const CuspDivisor& c, const KbarResult& kbar, int degree_bound);

/// Q with q^2(L0) = Q∘K. Throws std::logic_error on a nonzero remainder.
DiffOp truerank_witness(const DiffOp& kbar, const AiryVacuum& l0, const CuspDivisor& c);

}  // namespace bisp
