#include <gtest/gtest.h>

#include "ptf/bounds.hpp"
#include "ptf/interval.hpp"

using namespace ptf;

TEST(Interval, Constants) {
  const Interval e = Interval::e(128);
  EXPECT_LT(e.width(), 1e-30);
  const BigRational e_below(BigInt("271828182845904523536028747135"), BigInt("100000000000000000000000000000"));
  const BigRational e_above = e_below + BigRational(1, BigInt("100000000000000000000000000000"));
  EXPECT_FALSE(e.contains(e_below));
  EXPECT_FALSE(e.contains(e_above));
  EXPECT_NEAR(e.mid_double(), 2.718281828459045, 1e-15);
  const Interval l = Interval::ln2(128);
  const BigRational l_below(BigInt("693147180559945309417232121458"), BigInt("1000000000000000000000000000000"));
  EXPECT_FALSE(l.contains(l_below));
  EXPECT_FALSE(l.contains(l_below + BigRational(1, BigInt("1000000000000000000000000000000"))));
  EXPECT_NEAR(l.mid_double(), 0.6931471805599453, 1e-15);
}

TEST(Interval, ExactRationalIsEnclosed) {
  const BigRational third(1, 3);
  const Interval x = Interval::exact(third, 64);
  EXPECT_TRUE(x.contains(third));
  EXPECT_GT(x.width(), 0.0);
  const Interval two = Interval::exact(BigInt(2), 64);
  EXPECT_EQ(two.width(), 0.0);
}

TEST(Interval, Arithmetic) {
  const Interval three = Interval::exact(BigInt(3), 128);
  const Interval seven = Interval::exact(BigInt(7), 128);
  EXPECT_TRUE((three / seven).contains(BigRational(3, 7)));
  EXPECT_TRUE((three * seven - seven).contains(BigRational(14)));
  EXPECT_TRUE(log2(Interval::exact(BigInt(8), 128)).contains(BigRational(3)));
  EXPECT_TRUE(pow(three, 5).contains(BigRational(243)));
  const Interval one = exp(log(Interval::exact(BigInt(1), 128)));
  EXPECT_TRUE(one.contains(BigRational(1)));
}

TEST(Interval, DivisionByZeroInterval) {
  const Interval zero = Interval::exact(BigInt(0), 64);
  EXPECT_THROW(Interval::exact(BigInt(1), 64) / zero, InvalidArgument);
}

TEST(CertifyPositive, Verdicts) {
  const PrecisionPolicy policy{64, 512};
  auto pos = certify_positive([](mpfr_prec_t p) { return Interval::exact(BigRational(1, 1000), p); }, policy);
  EXPECT_EQ(pos.verdict, Verdict::holds);
  auto neg = certify_positive([](mpfr_prec_t p) { return Interval::exact(BigRational(-1, 1000), p); }, policy);
  EXPECT_EQ(neg.verdict, Verdict::violated);
  auto zero = certify_positive([](mpfr_prec_t p) { return Interval::exact(BigInt(0), p); }, policy);
  EXPECT_EQ(zero.verdict, Verdict::undecided);
  auto zero_ok = certify_positive([](mpfr_prec_t p) { return Interval::exact(BigInt(0), p); }, policy, true);
  EXPECT_EQ(zero_ok.verdict, Verdict::holds);
}

TEST(CertifyPositive, TinyMarginNeedsMorePrecision) {
  // 2^-200 is invisible at 64 bits against a unit offset.
  const auto margin = [](mpfr_prec_t p) {
    const Interval one = Interval::exact(BigInt(1), p);
    return (one + BigRational(1, pow2(200))) - one;
  };
  const auto r = certify_positive(margin, PrecisionPolicy{64, 1024});
  EXPECT_EQ(r.verdict, Verdict::holds);
  EXPECT_GT(r.precision, 64);
  EXPECT_EQ(certify_positive(margin, PrecisionPolicy{64, 64}).verdict, Verdict::undecided);
}

TEST(CertifyPositive, VerdictStableAcrossPrecisions) {
  for (const BigRational x : {BigRational(1), alpha_ratio(), BigRational(306, 100)}) {
    const Interval lo = case1_gap(x, 128);
    const Interval hi = case1_gap(x, 256);
    EXPECT_EQ(lo.positive(), hi.positive());
    EXPECT_EQ(lo.negative(), hi.negative());
    EXPECT_LE(hi.width(), lo.width());
  }
}
