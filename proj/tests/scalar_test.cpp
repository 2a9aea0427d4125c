#include <random>

#include <gtest/gtest.h>

#include "upair/error.hpp"
#include "upair/scalar.hpp"

using upair::InputError;
using upair::Rational;
using upair::Scalar;

namespace {

Scalar random_scalar(std::mt19937_64& rng) {
  auto r = [&] {
    long num = static_cast<long>(rng() % 41) - 20;
    long den = static_cast<long>(rng() % 9) + 1;
    Rational q(num, den);
    q.canonicalize();
    return q;
  };
  return Scalar(r(), r());
}

}  // namespace

TEST(ScalarTest, ConjugationExamples) {
  EXPECT_EQ(conj(Scalar(2, 3)), Scalar(2, -3));
  EXPECT_EQ(conj(Scalar(0)), Scalar(0));
  EXPECT_EQ(conj(Scalar(Rational(1, 2), Rational(-1, 3))), Scalar(Rational(1, 2), Rational(1, 3)));
}

TEST(ScalarTest, ConstructionReducesFractions) {
  Scalar s(Rational(4, -6), Rational(10, 5));
  EXPECT_EQ(s.re().get_num(), -2);
  EXPECT_EQ(s.re().get_den(), 3);
  EXPECT_EQ(s.im(), 2);
  EXPECT_EQ(upair::format_rational(s.re()), "-2/3");
  EXPECT_EQ(upair::format_rational(s.im()), "2/1");
}

TEST(ScalarTest, ArithmeticOnUnits) {
  EXPECT_EQ(Scalar::i() * Scalar::i(), Scalar(-1));
  EXPECT_EQ(Scalar::i() * conj(Scalar::i()), Scalar(1));
  EXPECT_EQ(Scalar(1, 1) / Scalar(1, -1), Scalar::i());
  EXPECT_THROW(Scalar(1) / Scalar(0), std::domain_error);
}

TEST(ScalarTest, ConjugationIsAFieldAutomorphism) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 500; ++k) {
    Scalar a = random_scalar(rng), b = random_scalar(rng);
    EXPECT_EQ(conj(conj(a)), a);
    EXPECT_EQ(conj(a * b), conj(a) * conj(b));
    EXPECT_EQ(conj(a + b), conj(a) + conj(b));
    Scalar n = a * conj(a);
    EXPECT_TRUE(n.is_real());
    EXPECT_GE(sgn(n.re()), 0);
    EXPECT_EQ(sgn(n.re()) == 0, a.is_zero());
    EXPECT_EQ(n.re(), a.norm());
  }
}

TEST(ScalarTest, JsonRoundTripIsExact) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 500; ++k) {
    Scalar a = random_scalar(rng) / Scalar(Rational(7919), Rational(3));
    nlohmann::json j = a;
    EXPECT_EQ(j.get<Scalar>(), a);
    EXPECT_EQ(nlohmann::json(j.get<Scalar>()).dump(), j.dump());
  }
}

TEST(ScalarTest, ParsesIntegerAndFractionLiterals) {
  EXPECT_EQ(upair::parse_rational("3"), 3);
  EXPECT_EQ(upair::parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(upair::parse_rational("+5/10"), Rational(1, 2));
  EXPECT_EQ(upair::parse_rational("123456789012345678901234567890/2"),
            Rational(mpz_class("61728394506172839450617283945")));
}

TEST(ScalarTest, RejectsMalformedLiterals) {
  for (const char* bad : {"", "1/0", "a", "1/-2", "1.5", "/3", "3/", "--1"})
    EXPECT_THROW(upair::parse_rational(bad), InputError) << bad;
  EXPECT_THROW(nlohmann::json({{"re", 1}, {"im", "0"}}).get<Scalar>(), InputError);
  EXPECT_THROW(nlohmann::json({{"re", "1"}}).get<Scalar>(), InputError);
}
