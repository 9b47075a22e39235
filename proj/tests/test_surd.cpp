#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "liechain/surd.hpp"

using namespace liechain;

TEST(Surd, SquareRootsReduce) {
  EXPECT_EQ(Surd::sqrt(128), Surd(8) * Surd::sqrt(2));
  EXPECT_EQ(Surd::sqrt(248), Surd(2) * Surd::sqrt(62));
  EXPECT_EQ(Surd::sqrt(49), Surd(7));
  EXPECT_EQ(Surd::sqrt(Rational(289, 8)), Surd::rational(17, 4) * Surd::sqrt(2));
  EXPECT_TRUE(Surd::sqrt(0).is_zero());
}

TEST(Surd, RingIdentities) {
  const Surd a = Surd::sqrt(2) + Surd::sqrt(3);
  EXPECT_EQ(a * a, Surd(5) + Surd(2) * Surd::sqrt(6));
  EXPECT_EQ(Surd::sqrt(6) * Surd::sqrt(10), Surd(2) * Surd::sqrt(15));
  EXPECT_EQ(a - a, Surd(0));
  EXPECT_EQ(-(-a), a);
  EXPECT_EQ(beta_constant() * beta_inverse(), Surd(1));
}

TEST(Surd, Constants) {
  EXPECT_NEAR(alpha_constant().to_double(), 4.434307249038862, 1e-12);
  EXPECT_NEAR(beta_constant().to_double(), 1.7677669529663689, 1e-12);
  EXPECT_EQ(alpha_constant().str(), "-8*sqrt(2) + 2*sqrt(62)");
}

TEST(Surd, E8BoundIsExactEquality) {
  const Surd value = beta_constant() * (Surd::sqrt(248) - alpha_constant());
  EXPECT_EQ(value, Surd(20));
  EXPECT_EQ(value.sign(), 1);
  EXPECT_EQ((value - Surd(20)).sign(), 0);
}

TEST(Surd, F4BoundIsStrict) {
  const Surd value = beta_constant() * (Surd::sqrt(52) - Surd(1));
  EXPECT_LT(value, Surd(11));
  EXPECT_NEAR(value.to_double(), 10.97978183101559, 1e-10);
}

TEST(Surd, SignOfNearCancellations) {
  // 2*sqrt(3) - sqrt(6) - 1 = 0.0146...
  EXPECT_EQ((Surd(2) * Surd::sqrt(3) - Surd::sqrt(6) - Surd(1)).sign(), 1);
  // sqrt(2) + sqrt(3) - sqrt(10) = -0.0165...
  EXPECT_EQ((Surd::sqrt(2) + Surd::sqrt(3) - Surd::sqrt(10)).sign(), -1);
  const Surd x = Surd::sqrt(5) + Surd::sqrt(6) + Surd::sqrt(18) - Surd::sqrt(7) - Surd::sqrt(11) - Surd::sqrt(10);
  EXPECT_EQ(x.sign(), x.to_double() > 0 ? 1 : -1);
  EXPECT_GT(std::abs(x.to_double()), 1e-4);
}

TEST(Surd, SignAgreesWithFloatingPointAwayFromZero) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> radicand(1, 40);
  for (int trial = 0; trial < 2000; ++trial) {
    Surd x;
    long double approx = 0;
    for (int term = 0; term < 4; ++term) {
      const int c = coeff(rng);
      const int r = radicand(rng);
      x += Surd(c) * Surd::sqrt(r);
      approx += c * std::sqrt(static_cast<long double>(r));
    }
    if (std::abs(approx) < 1e-9) {
      continue;
    }
    EXPECT_EQ(x.sign(), approx > 0 ? 1 : -1) << x.str();
  }
}

TEST(Surd, OrderingIsTotalAndConsistent) {
  const Surd a = Surd::sqrt(7);
  const Surd b = Surd::rational(8, 3);
  EXPECT_GT(b, a);
  EXPECT_NE(a <=> b, std::strong_ordering::equal);
  EXPECT_GT(Surd::sqrt(8), b);
}

TEST(Surd, Display) {
  EXPECT_EQ(Surd(20).str(), "20");
  EXPECT_EQ(Surd::rational(-7, 4).str(), "-7/4");
  EXPECT_EQ(alpha_constant().display(), "-8*sqrt(2) + 2*sqrt(62) (4.4343)");
}
