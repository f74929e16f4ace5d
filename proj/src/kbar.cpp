#include "bisp/kbar.hpp"

#include <map>
#include <stdexcept>

namespace bisp {

namespace {

/// B(x + lambda) entry (l, j).
TriPoly companion_entry(const AiryVacuum& l0, const Rational& lambda, int l, int j) {
  const int r = l0.r();
  if (l < r - 1) return j == l + 1 ? TriPoly(1) : TriPoly();
  if (j == 0) return TriPoly::from_x(Poly{lambda, 1});
  if (j < r - 1) return TriPoly(l0.a_coeff(j));
  return {};
}

}  // namespace

PolyMatrix build_bordered_matrix(const AiryVacuum& l0, const CuspDivisor& c) {
  const int r = l0.r();
  const int n = c.n();
  const int big_n = r * n;
  PolyMatrix m(static_cast<std::size_t>(big_n) + 1, static_cast<std::size_t>(big_n) + 1);
  for (int i = 0; i < n; ++i) {
    const auto& [lambda, gamma] = c.cusps()[static_cast<std::size_t>(i)];
    for (int row = 0; row <= big_n; ++row) {
      const int k = row / r, l = row % r;
      const Rational lk = lambda.pow(k);
      const Rational alpha = gamma * lk + (k > 0 ? Rational(k) * lambda.pow(k - 1) : Rational());
      for (int j = 0; j < r; ++j) {
        TriPoly e = companion_entry(l0, lambda, l, j) * lk;
        if (l == j) e += TriPoly(alpha);
        m(static_cast<std::size_t>(row), static_cast<std::size_t>(i * r + j)) = std::move(e);
      }
    }
  }
  for (int row = 0; row <= big_n; ++row)
    m(static_cast<std::size_t>(row), static_cast<std::size_t>(big_n)) = TriPoly::term(1, 0, row / r, row % r);
  return m;
}

WeylOp substitute_operators(const TriPoly& t, const AiryVacuum& l0) {
  const WeylOp l = l0.as_weyl();
  std::vector<WeylOp> lpow{WeylOp(1)};
  std::map<std::pair<int, int>, WeylOp> dl;  // D^k L0^j
  WeylOp out;
  for (const auto& [e, c] : t.terms()) {
    const int i = e[0], j = e[1], k = e[2];
    while (static_cast<int>(lpow.size()) <= j) lpow.push_back(lpow.back() * l);
    auto it = dl.find({k, j});
    if (it == dl.end()) it = dl.emplace(std::pair{k, j}, WeylOp::d(k) * lpow[static_cast<std::size_t>(j)]).first;
    // x^i on the left of a normal-ordered element stays normal-ordered.
    for (const auto& [key, v] : it->second.terms()) out.add_term(key.first + i, key.second, c * v);
  }
  return out;
}

TriPoly airy_coordinates(const WeylOp& w, const AiryVacuum& l0) {
  const int r = l0.r();
  const WeylOp l = l0.as_weyl();
  std::vector<WeylOp> lpow{WeylOp(1)};
  std::map<std::pair<int, int>, WeylOp> dl;
  auto leads_before = [r](const WeylOp::Key& a, const WeylOp::Key& b) {
    const int wa = r * a.first + a.second, wb = r * b.first + b.second;
    return wa != wb ? wa < wb : a.second < b.second;
  };
  WeylOp rem = w;
  TriPoly out;
  while (!rem.is_zero()) {
    auto top = rem.terms().begin();
    for (auto it = rem.terms().begin(); it != rem.terms().end(); ++it)
      if (leads_before(top->first, it->first)) top = it;
    const auto [i, q] = top->first;
    const Rational c = top->second;
    const int j = q / r, k = q % r;
    while (static_cast<int>(lpow.size()) <= j) lpow.push_back(lpow.back() * l);
    auto it = dl.find({k, j});
    if (it == dl.end()) it = dl.emplace(std::pair{k, j}, WeylOp::d(k) * lpow[static_cast<std::size_t>(j)]).first;
    for (const auto& [key, v] : it->second.terms()) rem.add_term(key.first + i, key.second, -c * v);
    out.add_term({i, j, k}, c);
  }
  return out;
}

KbarResult build_kbar(const AiryVacuum& l0, const CuspDivisor& c) {
  KbarResult res;
  res.q = c.q();
  if (c.n() == 0) {
    res.kbar = DiffOp(1);
    res.tau = Poly(1);
    res.flat_kbar = DiffOp(1);
    res.tripoly = TriPoly(1);
    return res;
  }
  res.tripoly = det_fraction_free(build_bordered_matrix(l0, c));
  const Poly tau_raw = res.tripoly.x_coeff(c.n(), 0);
  if (tau_raw.degree() != c.n()) throw std::logic_error("build_kbar: leading coefficient has wrong degree");
  const Rational vr = c.vandermonde().pow(l0.r());
  const Rational ratio = tau_raw.lead() / vr;
  if (ratio != Rational(1) && ratio != Rational(-1))
    throw std::logic_error("build_kbar: leading coefficient is not +-V^r: " + tau_raw.lead().str());
  res.sign = ratio.sign();
  res.scale = tau_raw.lead();
  const Rational inv = Rational(1) / res.scale;
  res.kbar = weyl_to_diffop(substitute_operators(res.tripoly, l0) * inv);
  res.tau = res.kbar.lead().as_poly();
  res.flat_kbar = flat_kbar(res, l0);
  return res;
}

DiffOp flat_kbar(const KbarResult& result, const AiryVacuum& l0) {
  return weyl_to_diffop(substitute_operators(result.tripoly.swap_xz(), l0) * (Rational(1) / result.scale));
}

}  // namespace bisp
