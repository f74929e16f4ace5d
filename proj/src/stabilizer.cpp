#include "bisp/stabilizer.hpp"

#include "bisp/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bisp {

StabilizerBasis canonical_span(const std::vector<Poly>& polys, int bound) {
  // Rows are coefficient vectors with the highest degree in column 0, so the
  // reduced echelon form pivots on leading terms.
  const auto cols = static_cast<std::size_t>(bound) + 1;
  RatMatrix rows;
  for (const auto& p : polys) {
    if (p.degree() > bound) throw std::invalid_argument("canonical_span: polynomial exceeds degree bound");
    RatVector v(cols);
    for (int k = 0; k <= p.degree(); ++k) v[static_cast<std::size_t>(bound - k)] = p.coeff(k);
    rows.push_back(std::move(v));
  }
  auto pivots = rref(rows, cols);
  StabilizerBasis out{bound, {}};
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    std::vector<Rational> c(cols);
    for (std::size_t k = 0; k < cols; ++k) c[static_cast<std::size_t>(bound) - k] = rows[r][k];
    out.basis.emplace_back(std::move(c));
  }
  std::sort(out.basis.begin(), out.basis.end(), [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });
  return out;
}

namespace {

std::vector<Poly> vectors_to_polys(const std::vector<RatVector>& vs) {
  std::vector<Poly> out;
  for (const auto& v : vs) out.emplace_back(v);
  return out;
}

}  // namespace

StabilizerBasis stabilizer_closed(const CuspDivisor& c, int degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("stabilizer_closed: negative degree bound");
  const auto cols = static_cast<std::size_t>(degree_bound) + 1;
  RatMatrix eqs;
  for (const auto& cusp : c.cusps()) {
    RatVector row(cols);
    for (int k = 1; k <= degree_bound; ++k) row[static_cast<std::size_t>(k)] = Rational(k) * cusp.lambda.pow(k - 1);
    eqs.push_back(std::move(row));
  }
  return canonical_span(vectors_to_polys(nullspace(eqs, cols)), degree_bound);
}

StabilizerBasis stabilizer_generic(const DiffOp& t, const DiffOp& l, int degree_bound) {
  if (t.is_zero() || l.is_zero()) throw std::invalid_argument("stabilizer_generic: zero operator");
  if (degree_bound < 0) throw std::invalid_argument("stabilizer_generic: negative degree bound");
  const auto cols = static_cast<std::size_t>(degree_bound) + 1;
  std::vector<DiffOp> rems;
  DiffOp tl = t;
  for (int k = 0; k <= degree_bound; ++k) {
    if (k > 0) tl = tl * l;
    rems.push_back(right_divide(tl, t).second);
  }
  // sum_k c_k R_k = 0, coefficient by coefficient over a common denominator.
  RatMatrix eqs;
  for (int i = 0; i < t.order(); ++i) {
    Poly den(1);
    for (const auto& r : rems) den = lcm(den, r.coeff(i).den());
    std::vector<Poly> nums;
    int top = -1;
    for (const auto& r : rems) {
      const RatFunc f = r.coeff(i);
      nums.push_back(f.num() * exact_divide(den, f.den()));
      top = std::max(top, nums.back().degree());
    }
    for (int e = 0; e <= top; ++e) {
      RatVector row(cols);
      for (std::size_t k = 0; k < cols; ++k) row[k] = nums[k].coeff(e);
      eqs.push_back(std::move(row));
    }
  }
  return canonical_span(vectors_to_polys(nullspace(eqs, cols)), degree_bound);
}

DiffOp darboux_conjugate(const DiffOp& kbar, const AiryVacuum& l0, const Poly& p) {
  if (kbar.is_zero()) throw std::invalid_argument("darboux_conjugate: zero operator");
  const RatFunc inv_lead = RatFunc(1) / kbar.lead();
  const DiffOp k = kbar.left_mul(inv_lead);
  // K∘p(L0) = (1/tau)∘(Kbar∘p(L0)); the inner product has polynomial coefficients.
  const DiffOp lhs = (kbar * poly_of(p, l0.as_diffop())).left_mul(inv_lead);
  auto [quot, rem] = right_divide(lhs, k);
  if (!rem.is_zero())
    throw std::domain_error("darboux_conjugate: p = " + p.str("z") + " is not in the stabilizer (nonzero remainder)");
  return quot;
}

int BispectralRing::rank() const {
  int g = 0;
  for (const auto& gen : generators) g = std::gcd(g, gen.order());
  return g;
}

bool BispectralRing::all_commute() const {
  return std::all_of(commutators.begin(), commutators.end(), [](const CommutatorCheck& c) { return c.commutes; });
}

BispectralRing build_ring(const AiryVacuum& l0, const CuspDivisor& c, int degree_bound) {
  return build_ring(l0, c, build_kbar(l0, c), degree_bound);
}

BispectralRing build_ring(const AiryVacuum& l0, const CuspDivisor& c, const KbarResult& kbar, int degree_bound) {
  BispectralRing ring{l0, c, kbar.kbar, {}, {}};
  for (const auto& p : stabilizer_closed(c, degree_bound).basis) {
    if (p.degree() < 1) continue;
    ring.generators.push_back({p, darboux_conjugate(kbar.kbar, l0, p)});
  }
  for (std::size_t i = 0; i < ring.generators.size(); ++i)
    for (std::size_t j = i + 1; j < ring.generators.size(); ++j)
      ring.commutators.push_back({static_cast<int>(i), static_cast<int>(j),
                                  commutator(ring.generators[i].op, ring.generators[j].op).is_zero()});
  return ring;
}

DiffOp truerank_witness(const DiffOp& kbar, const AiryVacuum& l0, const CuspDivisor& c) {
  const DiffOp k = normalize_monic(kbar);
  auto [quot, rem] = right_divide(poly_of(c.q().pow(2), l0.as_diffop()), k);
  if (!rem.is_zero()) throw std::logic_error("truerank_witness: q^2(L0) is not right-divisible by K");
  return quot;
}

}  // namespace bisp
