#include <gtest/gtest.h>

#include "ptf/ptf_count.hpp"

using namespace ptf;

TEST(CountPTF, SmallValues) {
  EXPECT_EQ(count_ptf(1, 1).count, 4);
  EXPECT_EQ(count_ptf(2, 1).count, 14);
  EXPECT_EQ(count_ptf(2, 2).count, 16);
}

TEST(CountPTF, AgreesWithFunctionOracle) {
  for (int n = 1; n <= 3; ++n)
    for (int d = 1; d <= n; ++d) {
      const auto a = count_ptf(n, d);
      const auto b = oracle_count_ptf(n, d, 2);
      EXPECT_EQ(a.count, b.count) << n << "," << d;
      EXPECT_EQ(a.method, "region-enumeration");
      EXPECT_EQ(b.method, "function-oracle");
    }
}

TEST(CountPTF, FullDegreeGivesAllFunctions) {
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(count_ptf(n, n).count, pow2(1UL << n));
}

TEST(CountPTF, MonotoneInDegreeAndEven) {
  for (int n = 1; n <= 4; ++n) {
    BigInt prev = 0;
    for (int d = 1; d <= n && in_count_envelope(n, d); ++d) {
      const BigInt c = count_ptf(n, d).count;
      EXPECT_LE(prev, c);
      EXPECT_EQ(c % 2, 0);
      prev = c;
    }
  }
}

TEST(CountPTF, ThreadCountDoesNotChangeResult) {
  EXPECT_EQ(count_ptf(4, 1, 1).count, count_ptf(4, 1, 4).count);
  EXPECT_EQ(count_ptf(3, 2, 1).count, count_ptf(3, 2, 3).count);
}

TEST(CountPTF, Envelope) {
  EXPECT_TRUE(in_count_envelope(5, 1));
  EXPECT_TRUE(in_count_envelope(4, 2));
  EXPECT_FALSE(in_count_envelope(5, 2));
  EXPECT_FALSE(in_count_envelope(6, 1));
  EXPECT_THROW(count_ptf(6, 1), ResourceLimit);
  EXPECT_THROW(count_ptf(2, 3), InvalidArgument);
  EXPECT_THROW(count_ptf(0, 1), InvalidArgument);
  EXPECT_THROW(oracle_count_ptf(5, 1), ResourceLimit);
}

TEST(UpperBounds, Examples) {
  PTFCountResult r;
  r.n = 2;
  r.d = 1;
  r.count = 14;
  auto c = verify_upper_bounds(r);
  EXPECT_EQ(c.sharp_upper, 14);
  EXPECT_TRUE(c.sharp_equal);
  EXPECT_EQ(c.theorem_upper, 6);
  EXPECT_EQ(c.saks_lower, 1);
  EXPECT_TRUE(c.holds());

  r.d = 2;
  r.count = 16;
  c = verify_upper_bounds(r);
  EXPECT_EQ(c.sharp_upper, 16);
  EXPECT_TRUE(c.sharp_equal);
  EXPECT_EQ(c.saks_lower, 0);

  r.n = 3;
  r.d = 1;
  r.count = 104;
  c = verify_upper_bounds(r);
  EXPECT_EQ(c.sharp_upper, 128);
  EXPECT_EQ(c.sharp_slack, 24);
  EXPECT_TRUE(c.holds());

  r.count = 129;
  EXPECT_FALSE(verify_upper_bounds(r).sharp_holds);
}

TEST(UpperBounds, SaksLowerOnComputedCounts) {
  for (int n = 2; n <= 4; ++n) {
    const auto r = count_ptf(n, 1);
    EXPECT_TRUE(verify_upper_bounds(r).saks_holds);
    EXPECT_EQ(verify_upper_bounds(r).saks_lower, binomial(static_cast<unsigned>(n), 2));
  }
}
