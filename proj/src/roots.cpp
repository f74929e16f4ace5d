#include "bisp/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace bisp {

namespace {

std::vector<Poly> sturm_sequence(const Poly& p) {
  std::vector<Poly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    Poly r = -divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(std::move(r));
  }
  return seq;
}

int sign_changes(const std::vector<Poly>& seq, const Rational& at) {
  int changes = 0, last = 0;
  for (const auto& s : seq) {
    const int v = s.eval(at).sign();
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

Rational floor_of(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.value().get_num_mpz_t(), q.value().get_den_mpz_t());
  return Rational(f);
}

}  // namespace

int sturm_count(const Poly& p, const Rational& lo, const Rational& hi) {
  const auto seq = sturm_sequence(p.monic());
  return sign_changes(seq, lo) - sign_changes(seq, hi);
}

std::vector<Rational> rational_roots(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
  if (p.degree() == 0) return {};
  const Poly sq = exact_divide(p, gcd(p, p.derivative())).primitive();
  const Rational a = sq.lead();
  const Rational inv_a = Rational(1) / a;
  Rational bound(1);
  for (const auto& c : sq.coeffs()) {
    const Rational m = (c.sign() < 0 ? -c : c) / a;
    if (m > bound) bound = m;
  }
  bound += 1;
  const auto seq = sturm_sequence(sq);
  std::vector<Rational> out;
  struct Interval {
    Rational lo, hi;
    int vlo, vhi;
  };
  std::vector<Interval> work{{-bound, bound, sign_changes(seq, -bound), sign_changes(seq, bound)}};
  while (!work.empty()) {
    Interval iv = work.back();
    work.pop_back();
    const int count = iv.vlo - iv.vhi;
    if (count == 0) continue;
    if (count == 1 && iv.hi - iv.lo < inv_a) {
      // The root lies in (lo, hi]; the only possible k/A there is floor(hi*A)/A.
      const Rational cand = floor_of(iv.hi * a) * inv_a;
      if (cand > iv.lo && sq.eval(cand).is_zero()) out.push_back(cand);
      continue;
    }
    const Rational mid = (iv.lo + iv.hi) / 2;
    const int vmid = sign_changes(seq, mid);
    work.push_back({iv.lo, mid, iv.vlo, vmid});
    work.push_back({mid, iv.hi, vmid, iv.vhi});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bisp
