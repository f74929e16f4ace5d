#include "bisp/series.hpp"

#include "bisp/lseries.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace bisp {

namespace {

/// (k+m)! / k!
Rational rising(int k, int m) {
  mpz_class v = 1;
  for (int t = 1; t <= m; ++t) v *= k + t;
  return Rational(v);
}

std::vector<Rational> derivative(const std::vector<Rational>& c) {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * Rational(static_cast<long>(k)));
  return d;
}

}  // namespace

SeriesBasis kernel_series_basis(const AiryVacuum& l0, int truncation, const Rational& shift) {
  const int r = l0.r();
  if (truncation < r) throw std::invalid_argument("kernel_series_basis: truncation must be at least r");
  SeriesBasis basis{truncation, shift, {}};
  for (int j = 0; j < r; ++j) {
    std::vector<Rational> c(static_cast<std::size_t>(truncation) + 1);
    c[static_cast<std::size_t>(j)] = Rational(1) / rising(0, j);
    for (int k = 0; k + r <= truncation; ++k) {
      Rational rhs = shift * c[static_cast<std::size_t>(k)];
      if (k >= 1) rhs += c[static_cast<std::size_t>(k - 1)];
      for (int i = 1; i <= r - 2; ++i) rhs += l0.a_coeff(i) * rising(k, i) * c[static_cast<std::size_t>(k + i)];
      c[static_cast<std::size_t>(k + r)] = rhs / rising(k, r);
    }
    basis.f.push_back(std::move(c));
  }
  return basis;
}

int SeriesOracleResult::guaranteed_degree() const {
  int p = std::numeric_limits<int>::max();
  for (int v : precision) p = std::min(p, v);
  return precision.empty() ? -1 : p - 1;
}

SeriesOracleResult kbar_series_oracle(const AiryVacuum& l0, const CuspDivisor& c, int truncation) {
  const int r = l0.r(), n = c.n(), big_n = r * n;
  if (truncation < big_n + 2) throw std::invalid_argument("kbar_series_oracle: truncation must be at least N + 2");
  SeriesOracleResult out;
  if (n == 0) {
    out.kbar = DiffOp(1);
    out.precision = {std::numeric_limits<int>::max()};
    out.scale = 1;
    return out;
  }
  // psi_{i,k} = gamma_i g_k + g_k', with g the local basis at lambda_i known to
  // degree truncation + 1, so psi is exact through x^truncation.
  std::vector<std::vector<Rational>> psi;
  for (const auto& [lambda, gamma] : c.cusps()) {
    auto basis = kernel_series_basis(l0, truncation + 1, lambda);
    for (const auto& g : basis.f) {
      auto dg = derivative(g);
      std::vector<Rational> s(static_cast<std::size_t>(truncation) + 1);
      for (int k = 0; k <= truncation; ++k) s[static_cast<std::size_t>(k)] = gamma * g[static_cast<std::size_t>(k)] + dg[static_cast<std::size_t>(k)];
      psi.push_back(std::move(s));
    }
  }
  // Wronskian rows 0..N; row m is exact through x^{truncation - m}.
  std::vector<std::vector<LSeries>> rows(static_cast<std::size_t>(big_n) + 1);
  for (int m = 0; m <= big_n; ++m) {
    for (auto& s : psi) {
      rows[static_cast<std::size_t>(m)].push_back(LSeries::from_coeffs(s, truncation - m + 1));
      s = derivative(s);
    }
  }
  std::vector<LSeries> cof;
  for (int k = 0; k <= big_n; ++k) {
    std::vector<std::vector<LSeries>> minor;
    for (int m = 0; m <= big_n; ++m)
      if (m != k) minor.push_back(rows[static_cast<std::size_t>(m)]);
    LSeries d = det_series(std::move(minor));
    cof.push_back((big_n - k) % 2 == 0 ? d : d.scaled(-1));
  }
  const LSeries& lead = cof.back();
  if (lead.precision() <= n) throw std::domain_error("kbar_series_oracle: truncation insufficient for the leading coefficient");
  out.scale = lead.coeff(n);
  if (out.scale.is_zero()) throw std::domain_error("kbar_series_oracle: leading coefficient has degree below n");
  const Rational inv = Rational(1) / out.scale;
  std::vector<RatFunc> coeffs;
  for (const auto& s : cof) {
    const int p = s.precision();
    std::vector<Rational> v;
    for (int d = 0; d < p; ++d) v.push_back(s.coeff(d) * inv);
    coeffs.emplace_back(Poly(std::move(v)));
    out.precision.push_back(p);
  }
  out.kbar = DiffOp(std::move(coeffs));
  return out;
}

OracleComparison compare_with_oracle(const DiffOp& kbar, const SeriesOracleResult& oracle) {
  OracleComparison cmp{true, true, {}};
  const int top = std::max(kbar.order(), static_cast<int>(oracle.precision.size()) - 1);
  for (int k = 0; k <= top; ++k) {
    const int prec = k < static_cast<int>(oracle.precision.size()) ? oracle.precision[static_cast<std::size_t>(k)] : 0;
    const RatFunc mine = kbar.coeff(k);
    if (!mine.is_polynomial()) {
      cmp.match = false;
      cmp.detail += "coefficient of D^" + std::to_string(k) + " is not a polynomial; ";
      continue;
    }
    const Poly& p = mine.num();
    const Poly theirs = oracle.kbar.coeff(k).num();
    if (p.degree() >= prec) cmp.fully_covered = false;
    const int last = std::min(prec - 1, std::max(p.degree(), theirs.degree()));
    for (int d = 0; d <= last; ++d) {
      if (p.coeff(d) != theirs.coeff(d)) {
        cmp.match = false;
        cmp.detail += "D^" + std::to_string(k) + " x^" + std::to_string(d) + ": " + p.coeff(d).str() +
                      " vs " + theirs.coeff(d).str() + "; ";
      }
    }
  }
  return cmp;
}

}  // namespace bisp
