#include "bisp/kbar.hpp"
#include "bisp/lseries.hpp"
#include "bisp/series.hpp"
#include "support/generators.hpp"
#include "support/printed.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using namespace bisp;

namespace {

const Poly X = Poly::x();

CuspDivisor divisor(std::initializer_list<std::pair<long, long>> cusps) {
  std::vector<Cusp> v;
  for (const auto& [l, g] : cusps) v.push_back({l, g});
  return CuspDivisor(std::move(v));
}

}  // namespace

TEST(LSeries, PrecisionBookkeeping) {
  const LSeries a = LSeries::from_coeffs({0, 1, 2}, 3);  // x + 2x^2 + O(x^3)
  const LSeries b = LSeries::from_coeffs({1, 1}, 5);     // 1 + x + O(x^5)
  EXPECT_EQ(a.valuation(), 1);
  EXPECT_EQ((a * b).precision(), 3);
  EXPECT_EQ((a * b).coeff(2), Rational(3));
  EXPECT_EQ((a + b).precision(), 3);
  const LSeries q = b / a;  // x^-1 (1 + x)(1 - 2x + ...)
  EXPECT_EQ(q.valuation(), -1);
  EXPECT_EQ(q.coeff(-1), Rational(1));
  EXPECT_EQ(q.coeff(0), Rational(-1));
  EXPECT_EQ(q.precision(), 1);
  EXPECT_THROW(b / LSeries::zero(4), std::domain_error);
  EXPECT_THROW(a.coeff(3), std::out_of_range);
}

TEST(LSeries, DeterminantOfDiagonalAndSingular) {
  const LSeries x = LSeries::from_coeffs({0, 1}, 6), one = LSeries::from_coeffs({1}, 6);
  const LSeries d = det_series({{x, one}, {LSeries::zero(6), x}});
  EXPECT_EQ(d.coeff(2), Rational(1));
  EXPECT_EQ(d.coeff(3), Rational(0));
  const LSeries s = det_series({{x, x}, {x, x}});
  EXPECT_FALSE(s.known_nonzero());
}

TEST(SeriesBasis, AiryCoefficients) {
  const SeriesBasis b = kernel_series_basis(AiryVacuum(2), 10);
  // c_{k+2} (k+2)(k+1) = c_{k-1}
  EXPECT_EQ(b.f[0][0], Rational(1));
  EXPECT_EQ(b.f[0][3], Rational(1, 6));
  EXPECT_EQ(b.f[0][6], Rational(1, 180));
  EXPECT_EQ(b.f[1][1], Rational(1));
  EXPECT_EQ(b.f[1][4], Rational(1, 12));
  EXPECT_EQ(b.f[1][2], Rational(0));
  EXPECT_THROW(kernel_series_basis(AiryVacuum(3, {1}), 2), std::invalid_argument);
}

TEST(SeriesBasisProperty, SolvesTheShiftedEquation) {
  gen::Rng rng(51);
  for (int it = 0; it < 20; ++it) {
    const int r = static_cast<int>(gen::uniform(rng, 2, 4));
    const AiryVacuum l0 = gen::vacuum(rng, r);
    const Rational shift = gen::rational(rng);
    const int m = 14;
    const SeriesBasis b = kernel_series_basis(l0, m, shift);
    // (L0 - shift) f = 0 through degree m - r, with unit initial block.
    const DiffOp op = l0.as_diffop() - DiffOp(shift);
    for (int j = 0; j < r; ++j) {
      const Poly f(b.f[static_cast<std::size_t>(j)]);
      const Poly lf = op.apply(RatFunc(f)).as_poly();
      for (int k = 0; k <= m - r; ++k) EXPECT_TRUE(lf.coeff(k).is_zero()) << "r=" << r << " j=" << j << " k=" << k;
      for (int i = 0; i < r; ++i) {
        Poly d = f;
        for (int t = 0; t < i; ++t) d = d.derivative();
        EXPECT_EQ(d.coeff(0), Rational(i == j ? 1 : 0));
      }
    }
  }
}

TEST(Kbar, RankTwoSingleCuspMatchesClosedForm) {
  const KbarResult res = build_kbar(AiryVacuum(2), divisor({{0, 1}}));
  EXPECT_EQ(res.tau.str(), "x - 1");
  EXPECT_EQ(res.kbar, printed::kbar_r2(0, 1));
  EXPECT_EQ(res.flat_kbar, printed::flat_r2(0, 1));
  EXPECT_EQ(res.q, Poly({0, 1}));
}

TEST(KbarProperty, RankTwoFamily) {
  gen::Rng rng(52);
  for (int it = 0; it < 40; ++it) {
    const Rational l = gen::rational(rng), g = gen::rational(rng);
    const KbarResult res = build_kbar(AiryVacuum(2), CuspDivisor({{l, g}}));
    EXPECT_EQ(res.kbar, printed::kbar_r2(l, g));
    EXPECT_EQ(res.flat_kbar, printed::flat_r2(l, g));
  }
}

TEST(KbarProperty, RankThreeFamily) {
  gen::Rng rng(53);
  for (int it = 0; it < 30; ++it) {
    const Rational a = gen::rational(rng, 3, 2), l = gen::rational(rng), g = gen::rational(rng);
    const KbarResult res = build_kbar(AiryVacuum(3, {a}), CuspDivisor({{l, g}}));
    EXPECT_EQ(res.kbar, printed::kbar_r3(a, l, g));
    EXPECT_EQ(res.flat_kbar, printed::flat_r3(a, l, g));
  }
}

TEST(Kbar, EmptyDivisorIsIdentity) {
  const KbarResult res = build_kbar(AiryVacuum(3, {2}), CuspDivisor());
  EXPECT_EQ(res.kbar, DiffOp(1));
  EXPECT_EQ(res.flat_kbar, DiffOp(1));
  EXPECT_EQ(res.tau, Poly(1));
  EXPECT_EQ(res.q, Poly(1));
}

TEST(Kbar, DuplicateLambdaRejected) {
  EXPECT_THROW(divisor({{1, 0}, {1, 2}}), std::invalid_argument);
}

TEST(KbarProperty, StructuralInvariants) {
  gen::Rng rng(54);
  for (int it = 0; it < 24; ++it) {
    const int r = static_cast<int>(gen::uniform(rng, 2, 4));
    const int n = static_cast<int>(gen::uniform(rng, 1, r == 4 ? 2 : 3));
    const AiryVacuum l0 = gen::vacuum(rng, r);
    const CuspDivisor c = gen::divisor(rng, n);
    const KbarResult res = build_kbar(l0, c);
    const int big_n = r * n;
    ASSERT_EQ(res.kbar.order(), big_n);
    EXPECT_TRUE(res.kbar.is_polynomial());
    EXPECT_EQ(res.kbar.lead().as_poly(), res.tau);
    EXPECT_EQ(res.tau.degree(), n);
    EXPECT_TRUE(res.tau.lead().is_one());
    EXPECT_EQ(res.kbar.coeff(big_n - 1), RatFunc(-res.tau.derivative()));
    EXPECT_EQ(res.q, c.q());
    EXPECT_EQ(res.scale, Rational(res.sign) * c.vandermonde().pow(r));
    // flat by substitution agrees with the Weyl-algebra anti-automorphism.
    EXPECT_EQ(res.flat_kbar, weyl_to_diffop(flat(diffop_to_weyl(res.kbar), l0)));
    EXPECT_EQ(res.flat_kbar.order(), big_n);
    EXPECT_LE(airy_coordinates(diffop_to_weyl(res.flat_kbar), l0).degree(0), n);
    EXPECT_EQ(res.flat_kbar.lead().as_poly(), res.q);
  }
}

TEST(KbarProperty, AiryCoordinatesRoundTrip) {
  gen::Rng rng(55);
  for (int it = 0; it < 60; ++it) {
    const int r = static_cast<int>(gen::uniform(rng, 2, 4));
    const AiryVacuum l0 = gen::vacuum(rng, r);
    TriPoly t;
    for (int k = 0; k < 4; ++k)
      t.add_term({static_cast<int>(gen::uniform(rng, 0, 2)), static_cast<int>(gen::uniform(rng, 0, 2)),
                  static_cast<int>(gen::uniform(rng, 0, r - 1))},
                 gen::rational(rng));
    EXPECT_EQ(airy_coordinates(substitute_operators(t, l0), l0), t);
  }
}

TEST(Oracle, RankTwoPrintedExample) {
  const SeriesOracleResult o = kbar_series_oracle(AiryVacuum(2), divisor({{0, 1}}), 20);
  const OracleComparison cmp = compare_with_oracle(printed::kbar_r2(0, 1), o);
  EXPECT_TRUE(cmp.match) << cmp.detail;
  EXPECT_TRUE(cmp.fully_covered);
}

TEST(Oracle, RankTwoTwoCusps) {
  const AiryVacuum l0(2);
  const CuspDivisor c = divisor({{0, 0}, {1, 0}});
  const KbarResult res = build_kbar(l0, c);
  const SeriesOracleResult o = kbar_series_oracle(l0, c, 30);
  const OracleComparison cmp = compare_with_oracle(res.kbar, o);
  EXPECT_TRUE(cmp.match) << cmp.detail;
  EXPECT_TRUE(cmp.fully_covered);
  EXPECT_EQ(o.scale, res.scale);
}

TEST(Oracle, RankThreePrintedExample) {
  const SeriesOracleResult o = kbar_series_oracle(AiryVacuum(3, {1}), divisor({{0, 1}}), 12);
  EXPECT_TRUE(compare_with_oracle(printed::kbar_r3(1, 0, 1), o).match);
}

TEST(Oracle, DetectsAPerturbation) {
  const SeriesOracleResult o = kbar_series_oracle(AiryVacuum(2), divisor({{0, 1}}), 20);
  const DiffOp wrong = printed::kbar_r2(0, 1) + DiffOp::monomial(RatFunc(X), 1);
  EXPECT_FALSE(compare_with_oracle(wrong, o).match);
  EXPECT_THROW(kbar_series_oracle(AiryVacuum(2), divisor({{0, 1}}), 3), std::invalid_argument);
}

TEST(OracleProperty, AgreesWithConstruction) {
  gen::Rng rng(56);
  for (int it = 0; it < 12; ++it) {
    const int r = static_cast<int>(gen::uniform(rng, 2, 4));
    const int n = static_cast<int>(gen::uniform(rng, 0, 2));
    const AiryVacuum l0 = gen::vacuum(rng, r);
    const CuspDivisor c = gen::divisor(rng, n);
    const KbarResult res = build_kbar(l0, c);
    const SeriesOracleResult o = kbar_series_oracle(l0, c, r * n + 2 * n + 4);
    const OracleComparison cmp = compare_with_oracle(res.kbar, o);
    EXPECT_TRUE(cmp.match) << cmp.detail;
    EXPECT_TRUE(cmp.fully_covered);
  }
}
