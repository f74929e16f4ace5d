// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include "bisp/involution.hpp"
#include "bisp/kbar.hpp"
#include "bisp/roots.hpp"
#include "bisp/series.hpp"
#include "bisp/stabilizer.hpp"
#include "support/generators.hpp"
#include "support/printed.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace bisp;
using namespace printed;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Instance {
  AiryVacuum l0;
  CuspDivisor c;
};

int failures = 0;
int structural_instances = 0;
Outcome structural;

std::string describe(const Instance& in) {
  std::ostringstream os;
  os << "r=" << in.l0.r() << " a=[";
  for (std::size_t i = 0; i < in.l0.a().size(); ++i) os << (i ? "," : "") << in.l0.a()[i];
  os << "] C={";
  for (std::size_t i = 0; i < in.c.cusps().size(); ++i)
    os << (i ? "," : "") << "(" << in.c.cusps()[i].lambda << "," << in.c.cusps()[i].gamma << ")";
  os << "}";
  return os.str();
}

/// Structural invariants, recorded for every instance the suite constructs.
KbarResult construct(const Instance& in) {
  KbarResult res = build_kbar(in.l0, in.c);
  ++structural_instances;
  const int n = in.c.n(), big_n = in.l0.r() * n;
  auto need = [&](bool ok, const char* what) {
    if (!ok) structural.fail(describe(in) + ": " + what);
  };
  need(res.kbar.order() == big_n, "order of Kbar is not N");
  need(res.kbar.is_polynomial(), "Kbar has non-polynomial coefficients");
  need(res.tau.degree() == n && res.tau.lead().is_one() && res.kbar.lead() == RatFunc(res.tau), "tau not monic of degree n");
  need(res.flat_kbar.order() == big_n && res.flat_kbar.is_polynomial(), "flat Kbar order or coefficients");
  if (res.flat_kbar.is_polynomial())
    need(airy_coordinates(diffop_to_weyl(res.flat_kbar), in.l0).degree(0) <= n, "flat Kbar x-degree over Q[D, L0] exceeds n");
  return res;
}

void report(int id, const std::string& title, const Outcome& o, double seconds, double limit = 0) {
  bool pass = o.pass;
  std::string detail = o.detail;
  if (limit > 0 && seconds >= limit) {
    pass = false;
    detail = "exceeded time limit of " + std::to_string(limit) + " s";
  }
  if (!pass) ++failures;
  std::printf("[%s] %d. %s (%.3f s%s)%s%s\n", pass ? "PASS" : "FAIL", id, title.c_str(), seconds,
              limit > 0 ? (", limit " + std::to_string(static_cast<int>(limit)) + " s").c_str() : "",
              detail.empty() ? "" : ": ", detail.c_str());
  std::fflush(stdout);
}

double timed(const std::function<void()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Instance> grid_cases(gen::Rng& rng) {
  std::vector<Instance> out;
  for (int r = 2; r <= 4; ++r)
    for (int n = 0; n <= 3; ++n)
      for (int rep = 0; rep < 2; ++rep) out.push_back({gen::vacuum(rng, r), gen::divisor(rng, n, 4, 2)});
  return out;
}

}  // namespace

int main() {
  gen::Rng rng(20261016);

  {  // 1
    Outcome o;
    const std::vector<std::pair<Rational, Rational>> pairs = {{0, 0}, {0, 1}, {1, 2}, {Rational(-1, 2), Rational(3, 4)}, {Rational(5, 3), -2}};
    const double t = timed([&] {
      for (const auto& [l, g] : pairs) {
        const Instance in{AiryVacuum(2), CuspDivisor({{l, g}})};
        const KbarResult res = construct(in);
        if (res.kbar != kbar_r2(l, g)) o.fail(describe(in) + ": Kbar = " + res.kbar.str());
        if (res.flat_kbar != flat_r2(l, g)) o.fail(describe(in) + ": flat Kbar = " + res.flat_kbar.str());
      }
    });
    report(1, "printed Kbar and flat Kbar, r=2, n=1, five (lambda, gamma)", o, t, 1.0);
  }

  {  // 2
    Outcome o;
    const std::vector<std::pair<Rational, Rational>> pairs = {{0, 1}, {2, -1}, {Rational(-3, 2), Rational(1, 3)}};
    int count = 0;
    const double t = timed([&] {
      for (const Rational a : {Rational(0), Rational(1), Rational(-2)})
        for (const auto& [l, g] : pairs) {
          const Instance in{AiryVacuum(3, {a}), CuspDivisor({{l, g}})};
          const KbarResult res = construct(in);
          ++count;
          if (res.kbar != kbar_r3(a, l, g)) o.fail(describe(in) + ": Kbar = " + res.kbar.str());
          if (res.flat_kbar != flat_r3(a, l, g)) o.fail(describe(in) + ": flat Kbar = " + res.flat_kbar.str());
        }
    });
    report(2, "printed Kbar and flat Kbar, r=3, n=1, a in {0, 1, -2}, " + std::to_string(count) + " divisors", o, t, 1.0);
  }

  {  // 3
    Outcome o;
    const double t = timed([&] {
      for (const Rational g : {Rational(0), Rational(1)}) {
        const Instance in{AiryVacuum(2), CuspDivisor({{0, g}})};
        const KbarResult res = construct(in);
        const DiffOp l4 = darboux_conjugate(res.kbar, in.l0, Poly::monomial(1, 2));
        const DiffOp l6 = darboux_conjugate(res.kbar, in.l0, Poly::monomial(1, 3));
        if (l4 != l4_printed(g)) o.fail("gamma=" + g.str() + ": L4 = " + l4.str());
        if (l6 != l6_printed(g)) o.fail("gamma=" + g.str() + ": L6 = " + l6.str());
        const DiffOp comm = commutator(l4, l6);
        if (!comm.is_zero()) o.fail("gamma=" + g.str() + ": [L4, L6] = " + comm.str());
      }
    });
    report(3, "printed L4, L6 for r=2, lambda=0, gamma in {0, 1}; [L4, L6] = 0", o, t, 5.0);
  }

  {  // 4
    Outcome o;
    int count = 0;
    const double t = timed([&] {
      for (int r = 2; r <= 4; ++r)
        for (int n = 1; n <= 2; ++n) {
          const int want = n == 1 ? 4 : 3;
          int found = 0;
          for (int attempt = 0; attempt < 4000 && found < want; ++attempt) {
            const Instance in{gen::vacuum(rng, r), gen::divisor(rng, n, 3, 1)};
            const KbarResult res = construct(in);
            if (!is_squarefree(res.tau) || static_cast<int>(rational_roots(res.tau).size()) != n) continue;
            ++found;
            ++count;
            const InvolutionReport rep = verify_involution(in.l0, in.c, res);
            for (const auto& ch : rep.checks)
              if (!ch.pass) o.fail(describe(in) + ": " + ch.name + ": " + ch.residual);
            if (rep.status != BetaStatus::computed || rep.target.n() != n) o.fail(describe(in) + ": beta not computed");
          }
          if (found < want) o.fail("only " + std::to_string(found) + " divisors with rational tau-roots for r=" +
                                   std::to_string(r) + ", n=" + std::to_string(n));
        }
    });
    report(4, "tau^beta = q, flat Kbar = Kbar^beta, beta^2 = id over " + std::to_string(count) + " divisors", o, t, 30.0);
  }

  {  // 5
    Outcome o;
    int count = 0;
    const double t = timed([&] {
      while (count < 24) {
        const int r = 2 + count % 3, n = 1 + (count / 3) % 3;
        const Instance in{gen::vacuum(rng, r), gen::divisor(rng, n)};
        const KbarResult res = construct(in);
        if (!is_squarefree(res.tau)) continue;
        ++count;
        const int big_n = r * n;
        if (res.flat_kbar.lead() != RatFunc(res.q)) o.fail(describe(in) + ": leading coefficient " + res.flat_kbar.lead().str());
        if (res.flat_kbar.coeff(big_n - 1) != RatFunc(-res.q.derivative()))
          o.fail(describe(in) + ": subleading coefficient " + res.flat_kbar.coeff(big_n - 1).str());
      }
    });
    report(5, "flat Kbar leading coefficient q and next coefficient -q' over " + std::to_string(count) + " random divisors", o, t);
  }

  const std::vector<Instance> grid = grid_cases(rng);
  std::vector<KbarResult> built;
  for (const auto& in : grid) built.push_back(construct(in));

  {  // 6
    Outcome o;
    const double t = timed([&] {
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const int d = 2 * grid[i].c.n() + 2;
        const StabilizerBasis generic = stabilizer_generic(built[i].kbar, grid[i].l0.as_diffop(), d);
        const StabilizerBasis closed = stabilizer_closed(grid[i].c, d);
        if (generic != closed) o.fail(describe(grid[i]) + ": dimension " + std::to_string(generic.basis.size()) + " vs " +
                                      std::to_string(closed.basis.size()));
      }
    });
    report(6, "stabilizer of Kbar equals the closed form, d = 2n+2, " + std::to_string(grid.size()) + " grid cases", o, t);
  }

  {  // 7
    Outcome o;
    int covered = 0;
    const double t = timed([&] {
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const int big_n = grid[i].l0.r() * grid[i].c.n();
        const SeriesOracleResult oracle = kbar_series_oracle(grid[i].l0, grid[i].c, big_n + 2 * grid[i].c.n() + 4);
        const OracleComparison cmp = compare_with_oracle(built[i].kbar, oracle);
        if (!cmp.match) o.fail(describe(grid[i]) + ": " + cmp.detail);
        if (cmp.fully_covered) ++covered;
      }
    });
    report(7, "Kbar equals the truncated series Wronskian (" + std::to_string(covered) + "/" + std::to_string(grid.size()) +
                  " with every coefficient inside the guaranteed range)",
           o, t);
  }

  {  // 8
    Outcome o;
    const double t = timed([&] {
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& in = grid[i];
        const DiffOp k = monic_k(built[i]);
        const DiffOp q2 = poly_of(built[i].q.pow(2), in.l0.as_diffop());
        const auto [quot, rem] = right_divide(q2, k);
        if (!rem.is_zero()) {
          o.fail(describe(in) + ": remainder " + rem.str());
          continue;
        }
        const DiffOp lq2 = darboux_conjugate(built[i].kbar, in.l0, built[i].q.pow(2));
        if (k * quot != lq2) o.fail(describe(in) + ": K Q != L[q^2]");
        if ((k * quot) * k != lq2 * k) o.fail(describe(in) + ": (K Q) K != L[q^2] K");
      }
    });
    report(8, "q^2(L0) = Q K with K Q = L[q^2], " + std::to_string(grid.size()) + " grid cases", o, t);
  }

  report(9, "order N, polynomial coefficients, monic tau of degree n, flat Kbar order N with x-degree <= n, over " +
                std::to_string(structural_instances) + " constructed instances",
         structural, 0);

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
