#include <gtest/gtest.h>

#include <random>

#include "ptf/cube_lift.hpp"
#include "ptf/linalg_exact.hpp"

using namespace ptf;

namespace {

// Plain Gaussian elimination over Q, used as an independent rank oracle.
Index naive_rank(RationalMatrix a) {
  Index r = 0;
  for (Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Index piv = -1;
    for (Index i = r; i < a.rows(); ++i)
      if (a(i, c) != 0) piv = i;
    if (piv < 0) continue;
    a.row(piv).swap(a.row(r));
    for (Index i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const BigRational f = a(i, c) / a(r, c);
      for (Index j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

Matrix<std::int64_t> random_int_matrix(std::mt19937_64& rng, Index rows, Index cols, int lo, int hi) {
  std::uniform_int_distribution<int> u(lo, hi);
  Matrix<std::int64_t> m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = u(rng);
  return m;
}

SignConstraint constraint(std::initializer_list<int> normal, int s) {
  SignConstraint c;
  c.normal.resize(static_cast<Index>(normal.size()));
  Index k = 0;
  for (int v : normal) c.normal[k++] = v;
  c.sign = s;
  return c;
}

}  // namespace

TEST(Rank, Examples) {
  EXPECT_EQ(rank(Matrix<int>::Identity(3, 3)), 3);
  Matrix<int> repeated(2, 3);
  repeated << 1, 2, 3, 1, 2, 3;
  EXPECT_EQ(rank(repeated), 1);
  EXPECT_EQ(rank(Matrix<int>(0, 4)), 0);
  EXPECT_EQ(rank(Matrix<int>::Zero(3, 3)), 0);
}

TEST(Rank, AgreesWithTransposeAndOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Index rows = 1 + static_cast<Index>(rng() % 6);
    const Index cols = 1 + static_cast<Index>(rng() % 6);
    Matrix<std::int64_t> m = random_int_matrix(rng, rows, cols, -2, 2);
    if (trial % 3 == 0 && rows > 1) m.row(rows - 1) = m.row(0) * 3 - m.row(rows - 2);
    const Index r = rank(m);
    EXPECT_EQ(r, rank(Matrix<std::int64_t>(m.transpose())));
    EXPECT_EQ(r, naive_rank(to_rational(m)));
  }
}

TEST(Rank, OverflowFallsBackToBigIntegers) {
  Matrix<std::int64_t> m(3, 3);
  const std::int64_t big = std::int64_t{1} << 40;
  m << big, big + 1, 3, big + 7, big - 5, 11, 2 * big, 2 * big - 4, 14;
  EXPECT_EQ(rank(m), naive_rank(to_rational(m)));
  m.row(2) = m.row(0) + m.row(1);
  EXPECT_EQ(rank(m), 2);
}

TEST(Rank, RationalInput) {
  RationalMatrix m(2, 2);
  m << BigRational(1, 2), BigRational(1, 3), BigRational(3, 2), BigRational(1, 1);
  EXPECT_EQ(rank(m), 1);
}

TEST(SolveInSpan, Examples) {
  RationalMatrix b(2, 3);
  b << 1, 0, 1, 0, 1, 1;
  RationalVector t(3);
  t << 2, 3, 5;
  const auto a = solve_in_span(b, t);
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ((*a)[0], 2);
  EXPECT_EQ((*a)[1], 3);
  t << 1, 1, 1;
  EXPECT_FALSE(solve_in_span(b, t).has_value());
}

TEST(SolveInSpan, RandomRoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const RationalMatrix b = to_rational(random_int_matrix(rng, 3, 5, -3, 3));
    const RationalVector coeffs = to_rational(random_int_matrix(rng, 3, 1, -4, 4));
    const RationalVector t = b.transpose() * coeffs;
    const auto a = solve_in_span(b, t);
    ASSERT_TRUE(a.has_value());
    EXPECT_EQ(RationalVector(b.transpose() * *a), t);
  }
}

TEST(CanonicalRref, EqualSpansEqualForms) {
  RationalMatrix a(2, 3), b(2, 3);
  a << 1, 2, 3, 0, 1, 1;
  b << 1, 3, 4, 2, 5, 7;
  EXPECT_EQ(canonical_rref(a), canonical_rref(b));
  b << 1, 3, 4, 2, 5, 8;
  EXPECT_NE(canonical_rref(a), canonical_rref(b));
}

TEST(StrictFeasible, SingleAndOpposite) {
  std::vector<SignConstraint> c{constraint({1, 0}, +1)};
  auto r = strict_feasible(c);
  EXPECT_TRUE(r.feasible);
  EXPECT_TRUE(verify_feasibility(r, c));

  c.push_back(constraint({1, 0}, -1));
  r = strict_feasible(c);
  EXPECT_FALSE(r.feasible);
  EXPECT_TRUE(verify_feasibility(r, c));
}

TEST(StrictFeasible, EmptyAndZeroNormal) {
  const auto r = strict_feasible({}, 3);
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.witness.size(), 3);
  std::vector<SignConstraint> c{constraint({0, 0}, +1)};
  EXPECT_THROW(strict_feasible(c), InvalidArgument);
}

TEST(StrictFeasible, TwoBitLinearThresholdFunctions) {
  // Of the 16 sign patterns on the lifted square, exactly XOR and XNOR fail.
  const LiftMatrix lifted = lift_matrix(enumerate_cube(2), 1);
  int infeasible = 0;
  for (int f = 0; f < 16; ++f) {
    std::vector<SignConstraint> c;
    for (Index k = 0; k < 4; ++k) {
      SignConstraint s;
      s.normal = to_rational(lifted.row(k).transpose());
      s.sign = (f >> k) & 1 ? -1 : 1;
      c.push_back(s);
    }
    const auto r = strict_feasible(c);
    EXPECT_TRUE(verify_feasibility(r, c));
    infeasible += !r.feasible;
  }
  EXPECT_EQ(infeasible, 2);
}

TEST(StrictFeasible, RandomCertificatesVerify) {
  std::mt19937_64 rng(23);
  int feasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Index dim = 1 + static_cast<Index>(rng() % 4);
    const Index rows = 1 + static_cast<Index>(rng() % 7);
    const Matrix<std::int64_t> g = random_int_matrix(rng, rows, dim, -3, 3);
    const auto r = strict_feasible_rows(g);
    EXPECT_TRUE(verify_feasibility_rows(r, g.cast<BigInt>()));
    const auto big = strict_feasible_rows(IntegerMatrix(g.cast<BigInt>()));
    EXPECT_EQ(big.feasible, r.feasible);
    feasible += r.feasible;
  }
  EXPECT_GT(feasible, 0);
  EXPECT_LT(feasible, 300);
}

TEST(StrictFeasible, DimensionMismatch) {
  std::vector<SignConstraint> c{constraint({1, 0}, +1), constraint({1, 0, 0}, +1)};
  EXPECT_THROW(strict_feasible(c), DimensionMismatch);
}
