#include "bisp/involution.hpp"
#include "bisp/roots.hpp"
#include "support/generators.hpp"
#include "support/printed.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using namespace bisp;

namespace {

CuspDivisor single(const Rational& l, const Rational& g) { return CuspDivisor({{l, g}}); }

bool passes(const InvolutionReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return c.pass;
  return false;
}

}  // namespace

TEST(Gamma, RecoversGammaForRankTwo) {
  gen::Rng rng(71);
  for (int it = 0; it < 30; ++it) {
    const Rational l = gen::rational(rng), g = gen::rational(rng);
    EXPECT_EQ(gamma_from_wronskian(printed::kbar_r2(l, g), g * g - l), g);
  }
}

TEST(Gamma, RejectsNonRoots) {
  const DiffOp k = printed::kbar_r2(0, 1);
  EXPECT_THROW(gamma_from_wronskian(k, 0), std::domain_error);
  EXPECT_THROW(gamma_from_wronskian(DiffOp::d(), 0), std::domain_error);
}

TEST(Beta, RankTwoMap) {
  gen::Rng rng(72);
  for (int it = 0; it < 30; ++it) {
    const Rational l = gen::rational(rng), g = gen::rational(rng);
    const CuspDivisor c = single(l, g);
    const KbarResult res = build_kbar(AiryVacuum(2), c);
    const BetaResult b = compute_beta(AiryVacuum(2), c, res);
    ASSERT_EQ(b.status, BetaStatus::computed);
    EXPECT_EQ(b.target, single(g * g - l, g));
    EXPECT_EQ(b.tau_beta, c.q());
  }
}

TEST(Beta, RankThreeMap) {
  gen::Rng rng(73);
  for (int it = 0; it < 30; ++it) {
    const Rational a = gen::rational(rng, 3, 2), l = gen::rational(rng), g = gen::rational(rng);
    const AiryVacuum l0(3, {a});
    const CuspDivisor c = single(l, g);
    const BetaResult b = compute_beta(l0, c, build_kbar(l0, c));
    EXPECT_EQ(b.target, single(a * g - g * g * g - l, g));
  }
  const AiryVacuum l0(3, {-2});
  const CuspDivisor c = single(Rational(1, 2), 3);
  EXPECT_EQ(compute_beta(l0, c, build_kbar(l0, c)).target, single(Rational(-67, 2), 3));
}

TEST(Beta, FixedPointAndDoubleRoot) {
  const AiryVacuum l0(2);
  const KbarResult fixed = build_kbar(l0, single(0, 0));
  EXPECT_EQ(fixed.flat_kbar, fixed.kbar);
  EXPECT_EQ(compute_beta(l0, single(0, 0), fixed).target, single(0, 0));
  const AiryVacuum l1(3, {1});
  EXPECT_EQ(compute_beta(l1, single(0, 1), build_kbar(l1, single(0, 1))).target, single(0, 1));
  const CuspDivisor doubled({{-3, 0}, {-2, -1}});
  const KbarResult res = build_kbar(l0, doubled);
  ASSERT_EQ(res.tau, Poly::from_roots({2, 2}));
  EXPECT_THROW(compute_beta(l0, doubled, res), std::domain_error);
  const InvolutionReport rep = verify_involution(l0, doubled, res);
  EXPECT_FALSE(rep.precondition_ok);
  EXPECT_FALSE(rep.all_pass());
}

TEST(Beta, IrrationalRootsReported) {
  // r = 2, two cusps whose tau is irreducible over Q.
  gen::Rng rng(74);
  int seen = 0;
  for (int it = 0; it < 200 && seen < 3; ++it) {
    const CuspDivisor c = gen::divisor(rng, 2, 5, 1);
    const AiryVacuum l0(2);
    const KbarResult res = build_kbar(l0, c);
    if (!is_squarefree(res.tau) || rational_roots(res.tau).size() == 2) continue;
    ++seen;
    EXPECT_EQ(compute_beta(l0, c, res).status, BetaStatus::irrational_roots);
    const InvolutionReport rep = verify_involution(l0, c, res);
    EXPECT_EQ(rep.status, BetaStatus::irrational_roots);
    EXPECT_TRUE(rep.all_pass());
    EXPECT_EQ(rep.checks.size(), 2u);
  }
  EXPECT_GT(seen, 0);
  EXPECT_EQ(to_string(BetaStatus::irrational_roots), "irrational-roots");
}

TEST(Involution, RankTwoExample) {
  const InvolutionReport rep = verify_involution(AiryVacuum(2), single(1, 2));
  EXPECT_TRUE(rep.precondition_ok);
  EXPECT_EQ(rep.target, single(3, 2));
  EXPECT_TRUE(rep.all_pass());
  EXPECT_TRUE(passes(rep, "beta^2 = id"));
}

TEST(InvolutionProperty, IdentitiesHoldWhenTauSplits) {
  gen::Rng rng(75);
  int tested = 0;
  for (int it = 0; it < 120 && tested < 10; ++it) {
    const int r = static_cast<int>(gen::uniform(rng, 2, 3));
    const AiryVacuum l0 = gen::vacuum(rng, r);
    const CuspDivisor c = gen::divisor(rng, static_cast<int>(gen::uniform(rng, 1, 2)), 3, 1);
    const KbarResult res = build_kbar(l0, c);
    if (!is_squarefree(res.tau) || static_cast<int>(rational_roots(res.tau).size()) != c.n()) continue;
    ++tested;
    const InvolutionReport rep = verify_involution(l0, c, res);
    EXPECT_TRUE(rep.all_pass());
    EXPECT_EQ(rep.target.n(), c.n());
    for (const Cusp& t : rep.target.cusps()) EXPECT_TRUE(annihilates(t, res.kbar));
  }
  EXPECT_GT(tested, 3);
}

TEST(Distribution, DetectsWrongGamma) {
  const DiffOp k = printed::kbar_r2(2, 3);
  EXPECT_TRUE(annihilates({7, 3}, k));
  EXPECT_FALSE(annihilates({7, 4}, k));
  EXPECT_FALSE(annihilates({6, 3}, k));
  // Entry k collects a_k' + gamma a_k + a_{k-1} at lambda.
  const DiffOp q({RatFunc(Poly({1, 1})), RatFunc(Poly({0, 0, 1}))});
  EXPECT_EQ(apply_distribution({2, 5}, q), (std::vector<Rational>{Rational(1 + 5 * 3), Rational(4 + 5 * 4 + 3), Rational(4)}));
}

TEST(Eigenfunction, RankTwoNumerators) {
  // tau = x - gamma^2 and q = z at lambda = 0.
  const Rational g(3, 2);
  const AiryVacuum l0(2);
  const KbarResult res = build_kbar(l0, single(0, g));
  const FormalEigenfunction f = formal_eigenfunction(l0, res.kbar, res.q);
  ASSERT_EQ(f.numerators.size(), 2u);
  const TriPoly x = TriPoly::x(), z = TriPoly::z();
  EXPECT_EQ(f.numerators[0], z * (x - TriPoly(g * g)) + TriPoly(g));
  EXPECT_EQ(f.numerators[1], TriPoly(-1));
  EXPECT_EQ(f.tau, Poly({-g * g, 1}));
}

TEST(Eigenfunction, SymmetryHolds) {
  gen::Rng rng(76);
  for (int it = 0; it < 10; ++it) {
    const Rational g = gen::rational(rng);
    const SymmetryReport rep = eigenfunction_symmetry_check(AiryVacuum(2), single(0, g));
    EXPECT_TRUE(rep.all_pass());
    EXPECT_EQ(rep.checks.size(), 3u);
  }
  EXPECT_TRUE(eigenfunction_symmetry_check(AiryVacuum(3, {0}), CuspDivisor({{0, 1}, {1, 0}})).all_pass());
}

TEST(Eigenfunction, PerturbedOperatorFails) {
  const AiryVacuum l0(2);
  const CuspDivisor c = single(1, 2);
  const KbarResult res = build_kbar(l0, c);
  const BetaResult b = compute_beta(l0, c, res);
  const DiffOp bad = res.kbar + DiffOp(RatFunc(1));
  const SymmetryReport rep = eigenfunction_symmetry_check(l0, bad, res.q, res.flat_kbar, b.kbar_beta, b.target.q());
  EXPECT_FALSE(rep.all_pass());
}
