#include "bisp/diffop.hpp"
#include "bisp/vacuum.hpp"
#include "bisp/weyl.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using namespace bisp;

namespace {

const Poly X = Poly::x();
const DiffOp D = DiffOp::d();

WeylOp random_weyl(gen::Rng& rng, int max_x, int max_d) {
  WeylOp w;
  const int terms = static_cast<int>(gen::uniform(rng, 1, 4));
  for (int i = 0; i < terms; ++i)
    w.add_term(static_cast<int>(gen::uniform(rng, 0, max_x)), static_cast<int>(gen::uniform(rng, 0, max_d)),
               gen::rational(rng, 5, 3));
  return w;
}

}  // namespace

TEST(DiffOp, BasicIdentities) {
  EXPECT_EQ(commutator(D, DiffOp(X)), DiffOp(1));
  EXPECT_EQ(D * DiffOp(X), DiffOp({RatFunc(1), RatFunc(X)}));
  EXPECT_EQ(normalize_monic(DiffOp({RatFunc(X), RatFunc(2)})), DiffOp({RatFunc(X * Rational(1, 2)), RatFunc(1)}));
  const DiffOp monic({RatFunc(X), RatFunc(1)});
  EXPECT_EQ(normalize_monic(monic), monic);
  EXPECT_EQ(pow(D, 3), DiffOp::d(3));
  EXPECT_EQ(poly_of(Poly({1, 0, 1}), D), DiffOp::d(2) + DiffOp(1));
  EXPECT_EQ(DiffOp({RatFunc(0), RatFunc(0)}).order(), -1);
  EXPECT_EQ((D * DiffOp(X) - DiffOp(1)).str(), "(x)*D");
}

TEST(DiffOp, Errors) {
  EXPECT_THROW(right_divide(D, DiffOp()), std::domain_error);
  EXPECT_THROW(normalize_monic(DiffOp()), std::domain_error);
  EXPECT_THROW(pow(D, -1), std::invalid_argument);
  EXPECT_THROW(DiffOp::monomial(RatFunc(1), -1), std::invalid_argument);
  EXPECT_THROW(diffop_to_weyl(DiffOp(RatFunc(Poly(1), X))), std::domain_error);
}

TEST(DiffOp, AiryFactorsThroughItsSquare) {
  const DiffOp l0 = AiryVacuum(2).as_diffop();
  const auto [q, r] = right_divide(l0 * l0, l0);
  EXPECT_EQ(q, l0);
  EXPECT_TRUE(r.is_zero());
}

TEST(DiffOpProperty, Associativity) {
  gen::Rng rng(41);
  for (int it = 0; it < 60; ++it) {
    const DiffOp a = gen::rational_diffop(rng, 3, 2), b = gen::rational_diffop(rng, 3, 2), c = gen::rational_diffop(rng, 3, 2);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(DiffOpProperty, CompositionMatchesAction) {
  gen::Rng rng(42);
  for (int it = 0; it < 60; ++it) {
    const DiffOp a = gen::rational_diffop(rng, 3, 2), b = gen::rational_diffop(rng, 3, 2);
    for (int k = 0; k <= 6; ++k) {
      const RatFunc u(X.pow(k));
      EXPECT_EQ((a * b).apply(u), a.apply(b.apply(u)));
    }
    const RatFunc f = gen::ratfunc(rng, 2);
    EXPECT_EQ((a * b).apply(f), a.apply(b.apply(f)));
  }
}

TEST(DiffOpProperty, RightDivisionRoundTrip) {
  gen::Rng rng(43);
  for (int it = 0; it < 80; ++it) {
    const DiffOp a = gen::rational_diffop(rng, 5, 2);
    DiffOp b = gen::rational_diffop(rng, 3, 2);
    if (b.is_zero()) b = D;
    const auto [q, r] = right_divide(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.order(), b.order());
  }
}

TEST(DiffOpProperty, ExactQuotientIsRecovered) {
  gen::Rng rng(44);
  for (int it = 0; it < 60; ++it) {
    const DiffOp q = gen::poly_diffop(rng, 3, 3);
    DiffOp b = gen::poly_diffop(rng, 3, 2);
    if (b.is_zero()) b = D;
    const auto [q2, r] = right_divide(q * b, b);
    EXPECT_EQ(q2, q);
    EXPECT_TRUE(r.is_zero());
  }
}

TEST(Weyl, NormalOrdering) {
  const WeylOp x = WeylOp::x(), d = WeylOp::d();
  EXPECT_EQ(d * x, x * d + WeylOp(1));
  EXPECT_EQ(d.pow(2) * x, x * d.pow(2) + d * Rational(2));
  EXPECT_EQ((x * d).order(), 1);
  EXPECT_EQ((x.pow(3) * d).x_degree(), 3);
  EXPECT_EQ(WeylOp().order(), -1);
}

TEST(WeylProperty, ConversionToDiffOpIsAHomomorphism) {
  gen::Rng rng(45);
  for (int it = 0; it < 100; ++it) {
    const WeylOp a = random_weyl(rng, 3, 3), b = random_weyl(rng, 3, 3);
    EXPECT_EQ(weyl_to_diffop(a * b), weyl_to_diffop(a) * weyl_to_diffop(b));
    EXPECT_EQ(diffop_to_weyl(weyl_to_diffop(a)), a);
  }
}

TEST(Flat, SendsGeneratorsToGenerators) {
  for (int r = 2; r <= 4; ++r) {
    gen::Rng rng(static_cast<unsigned>(r));
    const AiryVacuum l0 = gen::vacuum(rng, r);
    EXPECT_EQ(flat(WeylOp::x(), l0), l0.as_weyl());
    EXPECT_EQ(flat(WeylOp::d(), l0), WeylOp::d());
    EXPECT_EQ(flat(l0.as_weyl(), l0), WeylOp::x());
  }
}

TEST(FlatProperty, AntiHomomorphismAndInvolution) {
  gen::Rng rng(46);
  for (int it = 0; it < 60; ++it) {
    const int r = static_cast<int>(gen::uniform(rng, 2, 4));
    const AiryVacuum l0 = gen::vacuum(rng, r);
    const WeylOp a = random_weyl(rng, 2, 3), b = random_weyl(rng, 2, 3);
    EXPECT_EQ(flat(a * b, l0), flat(b, l0) * flat(a, l0));
    EXPECT_EQ(flat(flat(a, l0), l0), a);
  }
}
