#include "oracles.hpp"

#include "weylkit/gaussian_rational.hpp"

#include <gtest/gtest.h>

using weylkit::ArithKind;
using weylkit::GaussianRational;
using weylkit::make_rational;
using GQ = GaussianRational;

namespace {

GQ q(long a, long b = 1) { return GQ(make_rational(a, b)); }
GQ c(long re_n, long re_d, long im_n, long im_d) {
  return GQ(make_rational(re_n, re_d), make_rational(im_n, im_d));
}

}  // namespace

TEST(ExactArith, ISquaredIsMinusOne) {
  EXPECT_EQ(weylkit::gq_arith(GQ::i(), GQ::i(), ArithKind::Mul), GQ(-1));
}

TEST(ExactArith, ConjugatePairSum) {
  EXPECT_EQ(weylkit::gq_arith(c(1, 2, 1, 2), c(1, 2, -1, 2), ArithKind::Add), GQ(1));
}

TEST(ExactArith, NormByHand) {
  // (2+3i)(2-3i) = 4 + 9
  EXPECT_EQ(weylkit::gq_arith(c(2, 1, 3, 1), c(2, 1, -3, 1), ArithKind::Mul), GQ(13));
}

TEST(ExactArith, SubNegConj) {
  EXPECT_EQ(weylkit::gq_arith(GQ(3), GQ::i(), ArithKind::Sub), c(3, 1, -1, 1));
  EXPECT_EQ(weylkit::gq_arith(c(1, 2, 5, 3), GQ(), ArithKind::Neg), c(-1, 2, -5, 3));
  EXPECT_EQ(weylkit::gq_arith(c(1, 2, 5, 3), GQ(), ArithKind::Conj), c(1, 2, -5, 3));
}

TEST(ExactArith, Inverses) {
  EXPECT_EQ(weylkit::gq_inv(GQ(2)), q(1, 2));
  EXPECT_EQ(weylkit::gq_inv(GQ::i()), -GQ::i());
  EXPECT_EQ(weylkit::gq_inv(c(1, 1, 1, 1)), c(1, 2, -1, 2));
}

TEST(ExactArith, InverseOfZeroIsDistinctError) {
  EXPECT_THROW(weylkit::gq_inv(GQ()), weylkit::DivisionByZero);
  EXPECT_THROW(GQ(1) / GQ(), weylkit::DivisionByZero);
}

TEST(ExactArith, CanonicalForm) {
  const GQ a = q(6, -4);
  EXPECT_EQ(a.re().get_num(), -3);
  EXPECT_EQ(a.re().get_den(), 2);
  EXPECT_EQ(q(0, 7).re().get_den(), 1);
  EXPECT_EQ(q(2, 4), q(1, 2));
}

TEST(ExactArith, Rendering) {
  EXPECT_EQ(GQ().str(), "0");
  EXPECT_EQ(q(-3, 2).str(), "-3/2");
  EXPECT_EQ(GQ::i().str(), "i");
  EXPECT_EQ((-GQ::i()).str(), "-i");
  EXPECT_EQ(c(0, 1, -1, 2).str(), "-1/2 i");
  EXPECT_EQ(c(1, 2, 3, 1).str(), "1/2 + 3 i");
  EXPECT_EQ(c(1, 2, -3, 4).str(), "1/2 - 3/4 i");
}

TEST(ExactArith, ParseAcceptsSpacing) {
  EXPECT_EQ(GQ::parse("1/2+3/4i"), c(1, 2, 3, 4));
  EXPECT_EQ(GQ::parse("  -1/2   -   3/4 i "), c(-1, 2, -3, 4));
  EXPECT_EQ(GQ::parse("-i"), -GQ::i());
  EXPECT_EQ(GQ::parse("7"), GQ(7));
  EXPECT_THROW(GQ::parse("1/0"), std::exception);
  EXPECT_THROW(GQ::parse("abc"), weylkit::ParseError);
}

TEST(ExactArith, BigIntermediates) {
  GQ x = q(1, 3);
  for (int k = 0; k < 200; ++k) x *= c(7, 11, 13, 17);
  GQ y = x;
  for (int k = 0; k < 200; ++k) y /= c(7, 11, 13, 17);
  EXPECT_EQ(y, q(1, 3));
}

TEST(ExactArithProperty, FieldAxioms) {
  oracle::Rng rng(20261016);
  for (int trial = 0; trial < 500; ++trial) {
    const GQ a = rng.rational(), b = rng.rational(), d = rng.rational();
    EXPECT_EQ((a + b) + d, a + (b + d));
    EXPECT_EQ((a * b) * d, a * (b * d));
    EXPECT_EQ(a * (b + d), a * b + a * d);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, GQ());
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inv(), GQ(1));
    }
  }
}

TEST(ExactArithProperty, ConjugationIsRingAutomorphism) {
  oracle::Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const GQ a = rng.rational(), b = rng.rational();
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    EXPECT_EQ((a + b).conj(), a.conj() + b.conj());
    EXPECT_EQ(a.conj().conj(), a);
  }
}

TEST(ExactArithProperty, RoundTripThroughText) {
  oracle::Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const GQ a = rng.sparse_rational(20);
    EXPECT_EQ(GQ::parse(a.str()), a) << a.str();
  }
}

TEST(ExactArith, Units) {
  EXPECT_TRUE(GQ(1).is_unit());
  EXPECT_TRUE(GQ(-1).is_unit());
  EXPECT_TRUE(GQ::i().is_unit());
  EXPECT_TRUE((-GQ::i()).is_unit());
  EXPECT_FALSE(GQ(2).is_unit());
  EXPECT_FALSE(c(3, 5, 4, 5).is_unit());
}
