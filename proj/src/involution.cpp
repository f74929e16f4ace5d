#include "bisp/involution.hpp"

#include "bisp/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace bisp {

namespace {

const Poly& poly_coeff(const DiffOp& op, int k, const char* who) {
  static const Poly zero;
  if (k < 0 || k > op.order()) return zero;
  if (!op.coeffs()[static_cast<std::size_t>(k)].is_polynomial())
    throw std::domain_error(std::string(who) + ": operator has non-polynomial coefficients");
  return op.coeffs()[static_cast<std::size_t>(k)].num();
}

IdentityCheck poly_check(std::string name, const Poly& lhs, const Poly& rhs) {
  const Poly diff = lhs - rhs;
  return {std::move(name), diff.is_zero(), diff.str()};
}

IdentityCheck op_check(std::string name, const DiffOp& lhs, const DiffOp& rhs) {
  const DiffOp diff = lhs - rhs;
  return {std::move(name), diff.is_zero(), diff.is_zero() ? "0" : diff.str()};
}

std::string cusps_str(const CuspDivisor& c) {
  std::string s = "{";
  for (const auto& cusp : c.cusps()) {
    if (s.size() > 1) s += ", ";
    s += "(" + cusp.lambda.str() + ", " + cusp.gamma.str() + ")";
  }
  return s + "}";
}

TriPoly in_z(const Poly& p) { return TriPoly::from_x(p).swap_xz(); }

TriPoly at_sum(const Poly& p) {
  const TriPoly s = TriPoly::x() + TriPoly::z();
  TriPoly acc;
  for (int k = p.degree(); k >= 0; --k) acc = acc * s + TriPoly(p.coeff(k));
  return acc;
}

}  // namespace

Rational gamma_from_wronskian(const DiffOp& kbar, const Rational& mu) {
  const int n = kbar.order();
  if (n < 2) throw std::domain_error("gamma_from_wronskian: operator order below 2");
  const Poly& w = poly_coeff(kbar, n, "gamma_from_wronskian");
  const Poly& v = poly_coeff(kbar, n - 2, "gamma_from_wronskian");
  const Poly dw = w.derivative();
  if (!w.eval(mu).is_zero() || dw.eval(mu).is_zero())
    throw std::domain_error("gamma_from_wronskian: " + mu.str() + " is not a simple root of the leading coefficient");
  return (v.eval(mu) - dw.derivative().eval(mu)) / dw.eval(mu);
}

std::vector<Rational> apply_distribution(const Cusp& c, const DiffOp& q) {
  if (q.is_zero()) return {};
  std::vector<Rational> out(static_cast<std::size_t>(q.order()) + 2);
  for (int k = 0; k <= q.order(); ++k) {
    const Poly& a = poly_coeff(q, k, "apply_distribution");
    out[static_cast<std::size_t>(k)] += a.derivative().eval(c.lambda) + c.gamma * a.eval(c.lambda);
    out[static_cast<std::size_t>(k) + 1] += a.eval(c.lambda);
  }
  return out;
}

bool annihilates(const Cusp& c, const DiffOp& q) {
  const auto v = apply_distribution(c, q);
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

std::string to_string(BetaStatus s) { return s == BetaStatus::computed ? "computed" : "irrational-roots"; }

BetaResult compute_beta(const AiryVacuum& l0, const CuspDivisor& c, const KbarResult& result) {
  if (!is_squarefree(result.tau)) throw std::domain_error("compute_beta: tau = " + result.tau.str() + " has a repeated root");
  BetaResult out;
  out.source = c;
  const auto roots = rational_roots(result.tau);
  if (static_cast<int>(roots.size()) < result.tau.degree()) {
    out.status = BetaStatus::irrational_roots;
    return out;
  }
  std::vector<Cusp> cusps;
  for (const auto& mu : roots) cusps.push_back({mu, gamma_from_wronskian(result.kbar, mu)});
  out.target = CuspDivisor(std::move(cusps));
  const KbarResult beta = build_kbar(l0, out.target);
  out.kbar_beta = beta.kbar;
  out.tau_beta = beta.tau;
  return out;
}

bool InvolutionReport::all_pass() const {
  return precondition_ok && std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

InvolutionReport verify_involution(const AiryVacuum& l0, const CuspDivisor& c) {
  return verify_involution(l0, c, build_kbar(l0, c));
}

InvolutionReport verify_involution(const AiryVacuum& l0, const CuspDivisor& c, const KbarResult& result) {
  InvolutionReport rep;
  rep.source = c;
  rep.tau = result.tau;
  rep.q = result.q;
  const int big_n = result.flat_kbar.order();
  rep.checks.push_back(poly_check("flat leading coefficient = q", result.flat_kbar.lead().as_poly(), result.q));
  rep.checks.push_back(
      poly_check("flat subleading coefficient = -q'", result.flat_kbar.coeff(big_n - 1).as_poly(), -result.q.derivative()));
  if (!is_squarefree(result.tau)) {
    rep.precondition_error = "tau = " + result.tau.str() + " has a repeated root";
    return rep;
  }
  rep.precondition_ok = true;
  const BetaResult beta = compute_beta(l0, c, result);
  rep.status = beta.status;
  if (beta.status != BetaStatus::computed) return rep;
  rep.target = beta.target;
  rep.tau_beta = beta.tau_beta;
  rep.checks.push_back(poly_check("tau^beta = q", beta.tau_beta, result.q));
  rep.checks.push_back(op_check("flat Kbar = Kbar^beta", result.flat_kbar, beta.kbar_beta));

  bool annihilated = true;
  std::string failing;
  for (const auto& cusp : beta.target.cusps())
    if (!annihilates(cusp, result.kbar)) {
      annihilated = false;
      failing += (failing.empty() ? "" : ", ") + cusp.lambda.str();
    }
  rep.checks.push_back({"C^beta annihilates Kbar(z, D_z)", annihilated, annihilated ? "0" : "fails at lambda = " + failing});

  IdentityCheck twice{"beta^2 = id", false, ""};
  try {
    const KbarResult kb{beta.kbar_beta, beta.tau_beta, beta.target.q(), {}, {}, 1, Rational(1)};
    const BetaResult back = compute_beta(l0, beta.target, kb);
    if (back.status != BetaStatus::computed) {
      twice.residual = "tau of C^beta does not split over Q";
    } else {
      twice.pass = back.target.same_space(c);
      twice.residual = twice.pass ? "0" : cusps_str(back.target.canonical()) + " != " + cusps_str(c.canonical());
    }
  } catch (const std::exception& e) {
    twice.residual = e.what();
  }
  rep.checks.push_back(std::move(twice));
  return rep;
}

FormalEigenfunction formal_eigenfunction(const AiryVacuum& l0, const DiffOp& kbar, const Poly& q) {
  const int r = l0.r();
  // p[l] holds the coefficient of f^(l)(s) in the current derivative f^(k)(s).
  std::vector<Poly> p(static_cast<std::size_t>(r));
  p[0] = Poly(1);
  std::vector<TriPoly> num(static_cast<std::size_t>(r));
  for (int k = 0; k <= kbar.order(); ++k) {
    const TriPoly ck = TriPoly::from_x(poly_coeff(kbar, k, "formal_eigenfunction"));
    if (!ck.is_zero())
      for (int l = 0; l < r; ++l) num[static_cast<std::size_t>(l)] += ck * at_sum(p[static_cast<std::size_t>(l)]);
    std::vector<Poly> next(static_cast<std::size_t>(r));
    for (int l = 0; l < r; ++l) next[static_cast<std::size_t>(l)] += p[static_cast<std::size_t>(l)].derivative();
    for (int l = 0; l + 1 < r; ++l) next[static_cast<std::size_t>(l) + 1] += p[static_cast<std::size_t>(l)];
    const Poly& top = p[static_cast<std::size_t>(r) - 1];
    next[0] += top * Poly::x();
    for (int i = 1; i <= r - 2; ++i) next[static_cast<std::size_t>(i)] += top * l0.a_coeff(i);
    p = std::move(next);
  }
  return {l0, normalize_monic(kbar), q, std::move(num), poly_coeff(kbar, kbar.order(), "formal_eigenfunction")};
}

bool SymmetryReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

SymmetryReport eigenfunction_symmetry_check(const AiryVacuum& l0, const CuspDivisor& c) {
  const KbarResult res = build_kbar(l0, c);
  if (!is_squarefree(res.tau)) return {{{"precondition", false, "tau = " + res.tau.str() + " has a repeated root"}}};
  const BetaResult beta = compute_beta(l0, c, res);
  if (beta.status != BetaStatus::computed) return {{{"precondition", false, "tau does not split over Q"}}};
  return eigenfunction_symmetry_check(l0, res.kbar, res.q, res.flat_kbar, beta.kbar_beta, beta.target.q());
}

SymmetryReport eigenfunction_symmetry_check(const AiryVacuum& l0, const DiffOp& kbar, const Poly& q,
                                            const DiffOp& flat_kbar, const DiffOp& kbar_beta,
                                            const Poly& q_beta) {
  SymmetryReport rep;
  const FormalEigenfunction f = formal_eigenfunction(l0, kbar, q);
  const FormalEigenfunction g = formal_eigenfunction(l0, kbar_beta, q_beta);
  rep.checks.push_back(poly_check("tau^beta = q", g.tau, q));
  rep.checks.push_back(op_check("flat Kbar = Kbar^beta", flat_kbar, kbar_beta));
  // f(x, z) = N_l(x, z) / (q(z) tau(x)); g(z, x) = N^beta_l(z, x) / (q^beta(x) tau^beta(z)).
  const TriPoly lhs_scale = TriPoly::from_x(q_beta) * in_z(g.tau);
  const TriPoly rhs_scale = in_z(q) * TriPoly::from_x(f.tau);
  bool same = true;
  std::string residual = "0";
  for (std::size_t l = 0; l < f.numerators.size(); ++l) {
    const TriPoly diff = f.numerators[l] * lhs_scale - g.numerators[l].swap_xz() * rhs_scale;
    if (!diff.is_zero() && same) {
      same = false;
      residual = "f^(" + std::to_string(l) + ") coefficient: " + diff.str();
    }
  }
  rep.checks.push_back({"f_C(x, z) = f_C^beta(z, x)", same, residual});
  return rep;
}

}  // namespace bisp
