#pragma once

#include "bisp/divisor.hpp"
#include "bisp/kbar.hpp"
#include "bisp/tripoly.hpp"
#include "bisp/vacuum.hpp"

#include <string>
#include <vector>

namespace bisp {

/// gamma = (v(mu) - w''(mu)) / w'(mu), where w is the leading coefficient of
/// kbar and v its D^{N-2} coefficient. Throws std::domain_error unless mu is
/// a simple root of w and kbar has order >= 2 with polynomial coefficients.
Rational gamma_from_wronskian(const DiffOp& kbar, const Rational& mu);

/// delta_lambda∘(D + gamma)∘Q in normal form: entry k is the coefficient of
/// delta_lambda∘D^k, i.e. (a_k' + gamma a_k + a_{k-1}) evaluated at lambda.
/// Requires polynomial coefficients.
std::vector<Rational> apply_distribution(const Cusp& c, const DiffOp& q);

/// True when apply_distribution(c, q) vanishes identically.
bool annihilates(const Cusp& c, const DiffOp& q);

enum class BetaStatus { computed, irrational_roots };

std::string to_string(BetaStatus s);

struct BetaResult {
  CuspDivisor source;
  CuspDivisor target;  ///< meaningful only when computed
  DiffOp kbar_beta;    ///< Kbar of the target
  Poly tau_beta;
  BetaStatus status = BetaStatus::computed;
};

/// C^beta: cusps (mu, gamma_from_wronskian(kbar, mu)) over the roots mu of tau.
/// When tau does not split over Q the status is irrational_roots and only the
/// source is filled. Throws std::domain_error if tau is not squarefree.
BetaResult compute_beta(const AiryVacuum& l0, const CuspDivisor& c, const KbarResult& result);

struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::string residual;  ///< "0" on pass, otherwise the exact difference or a reason
  friend bool operator==(const IdentityCheck&, const IdentityCheck&) = default;
};

struct InvolutionReport {
  bool precondition_ok = false;
  std::string precondition_error;
  BetaStatus status = BetaStatus::computed;
  CuspDivisor source, target;
  Poly tau, q, tau_beta;
  std::vector<IdentityCheck> checks;
  bool all_pass() const;
};

/// Root-free checks on flat(Kbar): leading coefficient q and D^{N-1}
/// coefficient -q'. Then, when tau splits: tau^beta = q, flat(Kbar) = Kbar of
/// C^beta, (C^beta)^beta = C, and every target cusp annihilates Kbar(z, D_z).
/// Precondition failures are reported, not thrown.
InvolutionReport verify_involution(const AiryVacuum& l0, const CuspDivisor& c);
InvolutionReport verify_involution(const AiryVacuum& l0, const CuspDivisor& c, const KbarResult& result);

/// f(x, z) = (1/(q(z) tau(x))) sum_l N_l(x, z) f^(l)(x + z), where f^(r) is
/// rewritten through f^(r)(s) = s f(s) + sum a_i f^(i)(s).
struct FormalEigenfunction {
  AiryVacuum vacuum{2};
  DiffOp k;  ///< monic
  Poly q;
  /// N_l as polynomials in x, z (xi unused), l = 0 .. r-1.
  std::vector<TriPoly> numerators;
  Poly tau;
};

FormalEigenfunction formal_eigenfunction(const AiryVacuum& l0, const DiffOp& kbar, const Poly& q);

struct SymmetryReport {
  std::vector<IdentityCheck> checks;
  bool all_pass() const;
};

/// f_C(x, z) = f_{C^beta}(z, x): checks tau^beta = q and flat(Kbar) = Kbar^beta,
/// and compares both eigenfunctions directly in the basis f^(l)(x + z).
SymmetryReport eigenfunction_symmetry_check(const AiryVacuum& l0, const CuspDivisor& c);

/// Lower-level form taking the operators explicitly, for negative controls.
SymmetryReport eigenfunction_symmetry_check(const AiryVacuum& l0, const DiffOp& kbar, const Poly& q,
                                            const DiffOp& flat_kbar, const DiffOp& kbar_beta,
                                            const Poly& q_beta);

}  // namespace bisp
