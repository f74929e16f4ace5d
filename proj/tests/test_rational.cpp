#include "bisp/rational.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <stdexcept>

using bisp::Rational;

TEST(Rational, ParsesCanonically) {
  EXPECT_EQ(Rational::parse("6/4"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("-6/4").str(), "-3/2");
  EXPECT_EQ(Rational::parse(" 7 ").str(), "7");
  EXPECT_EQ(Rational::parse("+0/5").str(), "0");
  EXPECT_EQ(Rational::parse("123456789012345678901234567890/10").str(), "12345678901234567890123456789");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "/", "1/", "/2", "1/0", "1/-2", "a", "1.5", "1/2/3", "--1", "1 /2"})
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
  EXPECT_THROW(Rational(1, 0), std::invalid_argument);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_THROW(Rational(0).pow(-1), std::domain_error);
}

TEST(Rational, NegativeDenominatorNormalizes) {
  const Rational q(3, -6);
  EXPECT_EQ(q.num(), -1);
  EXPECT_EQ(q.den(), 2);
}

TEST(Rational, PowersAndOrder) {
  EXPECT_EQ(Rational(-2, 3).pow(3), Rational(-8, 27));
  EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
  EXPECT_EQ(Rational(5).pow(0), Rational(1));
  EXPECT_LT(Rational(-1, 2), Rational(-1, 3));
  std::ostringstream os;
  os << Rational(-4, 6);
  EXPECT_EQ(os.str(), "-2/3");
}

TEST(RationalProperty, FieldAxiomsAndCanonicalForm) {
  gen::Rng rng(11);
  for (int it = 0; it < 500; ++it) {
    const Rational a = gen::rational(rng, 50, 30), b = gen::rational(rng, 50, 30), c = gen::rational(rng, 50, 30);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
    const Rational s = a * b + c;
    EXPECT_EQ(gcd(s.num(), s.den()), 1);
    EXPECT_GT(s.den(), 0);
    EXPECT_EQ(Rational::parse(s.str()), s);
  }
}
