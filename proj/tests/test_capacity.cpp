#include <gtest/gtest.h>

#include <sstream>

#include "ptf/capacity.hpp"
#include "ptf/cube_lift.hpp"
#include "ptf/ptf_count.hpp"

using namespace ptf;

namespace {

PointSet points(const std::string& csv) {
  std::istringstream in(csv);
  return read_point_csv(in);
}

PointSet cube_set(int n) {
  PointSet s;
  s.n = n;
  for (const auto& x : enumerate_cube(n)) {
    RationalVector v(n);
    for (int i = 0; i < n; ++i) v[i] = x[i];
    s.points.push_back(v);
  }
  return s;
}

}  // namespace

TEST(GeneralLift, Examples) {
  RationalVector x(2);
  x << 3, 5;
  RationalVector expected(6);
  expected << 1, 3, 5, 9, 15, 25;
  EXPECT_EQ(general_lift(x, 2), expected);
  RationalVector lin(3);
  lin << 1, 3, 5;
  EXPECT_EQ(general_lift(x, 1), lin);
  const RationalVector z = general_lift(RationalVector::Zero(3), 3);
  EXPECT_EQ(z.size(), 20);
  EXPECT_EQ(z[0], 1);
  EXPECT_TRUE(z.tail(19).isZero());
  EXPECT_THROW(general_lift(x, 0), InvalidArgument);
}

TEST(GeneralLift, MonomialOrder) {
  const auto mons = general_monomials(2, 2);
  ASSERT_EQ(mons.size(), 6u);
  EXPECT_EQ(mons[3], (std::vector<int>{2, 0}));
  EXPECT_EQ(mons[4], (std::vector<int>{1, 1}));
  EXPECT_EQ(mons[5], (std::vector<int>{0, 2}));
}

TEST(PointCsv, ParseAndValidate) {
  const PointSet s = points("# comment\n1, 1/2\n0.5 -3\n");
  EXPECT_EQ(s.n, 2);
  ASSERT_EQ(s.points.size(), 2u);
  EXPECT_EQ(s.points[1][0], BigRational(1, 2));
  EXPECT_FALSE(s.boolean());
  EXPECT_THROW(points("1,2\n1,2\n").validate(), InvalidArgument);
  EXPECT_THROW(points("1,2\n1,2,3\n").validate(), DimensionMismatch);
  EXPECT_THROW(capacity_set(PointSet{}, 1), InvalidArgument);
}

TEST(Capacity, Examples) {
  const auto one = capacity_set(points("0.5,7\n"), 1);
  EXPECT_EQ(one.count, 2);
  EXPECT_EQ(one.capacity_lo, "1");

  const auto tri = capacity_set(points("0,0\n1,0\n0,1\n"), 1);
  EXPECT_EQ(tri.count, 8);

  const auto square = capacity_set(points("1,1\n1,-1\n-1,1\n-1,-1\n"), 1);
  EXPECT_EQ(square.count, count_ptf(2, 1).count);
  EXPECT_TRUE(square.boolean_reduced);
}

TEST(Capacity, QuadraticInThePlane) {
  // Five points on a parabola: degree 2 realises more splits than lines do.
  const PointSet s = points("0,0\n1,1\n2,4\n3,9\n-1,1\n");
  const auto lin = capacity_set(s, 1);
  const auto quad = capacity_set(s, 2);
  EXPECT_EQ(quad.m, 6);
  EXPECT_LE(lin.count, quad.count);
  EXPECT_TRUE(lin.chain_holds());
  EXPECT_TRUE(quad.chain_holds());
  EXPECT_THROW(capacity_set(s, 4), ResourceLimit);
}

TEST(Capacity, ChainMonotonicityAndLowerBound) {
  const std::vector<std::string> battery{
      "0,0\n1,0\n0,1\n1,1\n2,3\n",
      "0\n1\n2\n3\n4\n5\n",
      "1,2,3\n-1,0,2\n4,1,1\n0,0,0\n2,2,-5\n1/2,1/3,1/5\n",
      "1,1,-1\n-1,1,1\n1,-1,1\n-1,-1,-1\n1,1,1\n",
  };
  for (const auto& text : battery) {
    const PointSet s = points(text);
    BigInt prev = 0;
    for (int d = 1; d <= 3; ++d) {
      CapacityReport r;
      try {
        r = capacity_set(s, d);
      } catch (const ResourceLimit&) {
        break;
      }
      EXPECT_TRUE(r.chain_holds()) << text << " d=" << d;
      EXPECT_TRUE(r.lower_bound_holds) << text << " d=" << d;
      EXPECT_EQ(r.count % 2, 0);
      EXPECT_LE(r.count, pow2(s.points.size()));
      EXPECT_LE(prev, r.count);
      prev = r.count;
    }
  }
}

TEST(Capacity, FullCubeMatchesPTFCount) {
  for (int d = 1; d <= 3; ++d) EXPECT_EQ(capacity_set(cube_set(3), d).count, count_ptf(3, d).count) << d;
}

TEST(Capacity, Caps) {
  PointSet many;
  many.n = 1;
  for (int i = 0; i < 21; ++i) many.points.push_back(RationalVector::Constant(1, BigRational(i)));
  EXPECT_THROW(capacity_set(many, 1), ResourceLimit);
}
