#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <map>
#include <random>
#include <set>

#include "ptf/random_tensors.hpp"

using namespace ptf;

namespace {

std::vector<BigRational> rationals(std::initializer_list<int> v) {
  return std::vector<BigRational>(v.begin(), v.end());
}

CubePoint pt(std::initializer_list<int> signs) {
  return CubePoint::from_signs(std::vector<int>(signs));
}

long long permutation_determinant(const std::vector<std::vector<int>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  long long det = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    long long term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < n; ++i) term *= a[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

std::vector<int> affine_row(const CubePoint& x) {
  std::vector<int> r{1};
  for (int i = 0; i < x.dimension(); ++i) r.push_back(x[i]);
  return r;
}

}  // namespace

TEST(LittlewoodOfford, P) {
  EXPECT_EQ(littlewood_offord_P(1), BigRational(1, 2));
  EXPECT_EQ(littlewood_offord_P(3), BigRational(3, 8));
  EXPECT_EQ(littlewood_offord_P(4), BigRational(3, 8));
  EXPECT_THROW(littlewood_offord_P(0), InvalidArgument);
}

TEST(LittlewoodOfford, PMonotoneAndBounded) {
  for (int n = 1; n < 64; ++n) {
    EXPECT_LE(littlewood_offord_P(n + 1), littlewood_offord_P(n));
    if (n >= 3) EXPECT_LE(littlewood_offord_P(n), BigRational(3, 8));
  }
}

TEST(LittlewoodOfford, ExactExamples) {
  const auto ones = rationals({1, 1, 1});
  EXPECT_EQ(lo_exact_probability(ones, 1), BigRational(3, 8));
  EXPECT_EQ(lo_exact_probability(ones, 0), 0);
  EXPECT_EQ(lo_exact_probability(rationals({1, 2}), 1), BigRational(1, 4));
  EXPECT_THROW(lo_exact_probability(rationals({1, 0}), 1), InvalidArgument);
}

TEST(LittlewoodOfford, ExactMatchesDirectEnumeration) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> u(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 8;
    std::vector<BigRational> a;
    while (static_cast<int>(a.size()) < n) {
      const int v = u(rng);
      if (v != 0) a.emplace_back(v, 1 + static_cast<int>(rng() % 3));
    }
    std::map<BigRational, int> hits;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      BigRational sum = 0;
      for (int k = 0; k < n; ++k) sum += (s >> k) & 1U ? -a[static_cast<std::size_t>(k)] : a[static_cast<std::size_t>(k)];
      ++hits[sum];
    }
    for (const auto& [target, h] : hits)
      EXPECT_EQ(lo_exact_probability(a, target), BigRational(h, 1 << n));
  }
}

TEST(LittlewoodOfford, EmpiricalAttachesExactAndIsReproducible) {
  const auto a = rationals({1, 1, 1});
  const MCReport r1 = lo_empirical(a, 1, 4000, 99, true, 1);
  const MCReport r4 = lo_empirical(a, 1, 4000, 99, true, 4);
  ASSERT_TRUE(r1.exact.has_value());
  EXPECT_EQ(*r1.exact, BigRational(3, 8));
  EXPECT_EQ(r1.successes, r4.successes);
  EXPECT_LE(r1.ci.lo, 0.375);
  EXPECT_GE(r1.ci.hi, 0.375);
}

TEST(LittlewoodOfford, ExhaustiveCheckSmall) {
  const LOCheckReport r = lo_exhaustive_check(8);
  EXPECT_GT(r.vectors, 0u);
  EXPECT_EQ(r.violations, 0u);
}

TEST(Seeding, DeterministicAndDistinct) {
  EXPECT_EQ(trial_seed(1, 2), trial_seed(1, 2));
  EXPECT_NE(trial_seed(1, 2), trial_seed(1, 3));
  EXPECT_NE(trial_seed(1, 2), trial_seed(2, 2));
  auto a = trial_rng(5, 9);
  auto b = trial_rng(5, 9);
  EXPECT_EQ(a(), b());
}

TEST(Wilson, Properties) {
  const auto w = wilson_interval(50, 100);
  EXPECT_LT(w.lo, 0.5);
  EXPECT_GT(w.hi, 0.5);
  const auto all = wilson_interval(100, 100);
  EXPECT_LE(all.hi, 1.0);
  EXPECT_LT(all.lo, 1.0);
  const auto none = wilson_interval(0, 100);
  EXPECT_GE(none.lo, 0.0);
  EXPECT_GT(none.hi, 0.0);
  EXPECT_LT(wilson_interval(5000, 10000).hi - wilson_interval(5000, 10000).lo, w.hi - w.lo);
}

TEST(Independence, SingleVectorAlwaysIndependent) {
  ExperimentConfig c;
  c.n = 6;
  c.d = 2;
  c.m = 1;
  c.trials = 200;
  const MCReport r = mc_independence(c);
  EXPECT_EQ(r.successes, r.trials);
}

TEST(Independence, Preconditions) {
  ExperimentConfig c;
  c.n = 3;
  c.d = 1;
  c.m = 5;
  EXPECT_THROW(mc_independence(c), InvalidArgument);
  EXPECT_THROW(independence_probability_exhaustive(5, 1, 5), ResourceLimit);
}

TEST(Independence, ExhaustiveMatchesDeterminantOracle) {
  const auto cube = enumerate_cube(3);
  std::uint64_t good = 0;
  for (const auto& a : cube)
    for (const auto& b : cube)
      for (const auto& c : cube)
        for (const auto& e : cube)
          good += permutation_determinant({affine_row(a), affine_row(b), affine_row(c), affine_row(e)}) != 0;
  EXPECT_EQ(independence_probability_exhaustive(3, 1, 4, 2), BigRational(good, 4096));
}

TEST(Independence, ThreadIndependent) {
  ExperimentConfig c;
  c.n = 8;
  c.d = 2;
  c.m = 12;
  c.trials = 300;
  c.master_seed = 4242;
  c.threads = 1;
  const MCReport a = mc_independence(c);
  c.threads = 5;
  const MCReport b = mc_independence(c);
  EXPECT_EQ(a.successes, b.successes);
  EXPECT_EQ(a.ci.lo, b.ci.lo);
}

TEST(Independence, Gf2BooleanRank) {
  std::vector<CubePoint> pts{pt({1, 1}), pt({-1, 1}), pt({1, -1}), pt({-1, -1})};
  EXPECT_EQ(gf2_boolean_lift_rank(pts, 2), 4);
  EXPECT_EQ(gf2_boolean_lift_rank(pts, 1), 3);
  EXPECT_TRUE(lifted_independent(pts, 2));
  EXPECT_FALSE(lifted_independent(pts, 1));
}

TEST(Resilience, FaceTriple) {
  std::vector<CubePoint> pts{pt({1, 1, 1}), pt({1, 1, -1}), pt({1, -1, 1})};
  const ResilienceVerdict v = resilience_check(pts, 1);
  ASSERT_FALSE(v.good);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(*v.witness, pt({1, -1, -1}));
  ASSERT_EQ(v.coefficients.size(), 3);
  EXPECT_EQ(v.coefficients[0], -1);
  EXPECT_EQ(v.coefficients[1], 1);
  EXPECT_EQ(v.coefficients[2], 1);
  EXPECT_TRUE(verify_resilience_witness(pts, 1, v));

  ResilienceVerdict forged = v;
  forged.coefficients[0] = 1;
  EXPECT_FALSE(verify_resilience_witness(pts, 1, forged));
}

TEST(Resilience, GoodExamples) {
  std::vector<CubePoint> one{pt({1, -1, 1, 1})};
  EXPECT_TRUE(resilience_check(one, 2).good);
  std::vector<CubePoint> diag{pt({1, 1, 1}), pt({-1, -1, 1})};
  EXPECT_TRUE(resilience_check(diag, 1).good);
  std::vector<CubePoint> dup{pt({1, 1}), pt({1, 1})};
  EXPECT_THROW(resilience_check(dup, 1), InvalidArgument);
}

TEST(Resilience, BadVerdictsAlwaysVerify) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 3;
    std::vector<CubePoint> pts;
    std::set<std::uint64_t> used;
    while (pts.size() < 4) {
      const std::uint64_t b = rng() % (std::uint64_t{1} << n);
      if (used.insert(b).second) pts.emplace_back(n, b);
    }
    const auto v = resilience_check(pts, 1);
    if (!v.good) EXPECT_TRUE(verify_resilience_witness(pts, 1, v));
  }
}

TEST(GoodSubsets, ThreeCubeTriplesMatchPlaneOracle) {
  // A triple is bad exactly when a fourth cube point shares its affine plane.
  const auto cube = enumerate_cube(3);
  std::uint64_t good = 0, total = 0;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j)
      for (std::size_t k = j + 1; k < 8; ++k) {
        ++total;
        bool bad = false;
        for (std::size_t l = 0; l < 8; ++l) {
          if (l == i || l == j || l == k) continue;
          bad = bad || permutation_determinant({affine_row(cube[i]), affine_row(cube[j]),
                                                affine_row(cube[k]), affine_row(cube[l])}) == 0;
        }
        good += !bad;
      }
  const SubsetFractionReport r = good_subset_fraction(3, 1, 3);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.total, total);
  EXPECT_EQ(r.good, good);
  EXPECT_EQ(r.fraction, BigRational(good, total));
  ASSERT_TRUE(r.distinct_good_spans.has_value());
  EXPECT_EQ(*r.distinct_good_spans, r.good);
}

TEST(GoodSubsets, SingletonsAreGoodAndSamplingIsReproducible) {
  EXPECT_EQ(good_subset_fraction(4, 2, 1).fraction, 1);
  const auto a = good_subset_fraction(4, 1, 4, 500, 77, 1, SubsetMode::sampled);
  const auto b = good_subset_fraction(4, 1, 4, 500, 77, 3, SubsetMode::sampled);
  EXPECT_FALSE(a.exhaustive);
  EXPECT_EQ(a.good, b.good);
  EXPECT_EQ(a.total, 500u);
}

TEST(CanonicalSpan, OrderInvariant) {
  std::vector<CubePoint> a{pt({1, 1, 1}), pt({-1, 1, -1})};
  std::vector<CubePoint> b{pt({-1, 1, -1}), pt({1, 1, 1})};
  EXPECT_EQ(canonical_span(a, 2), canonical_span(b, 2));
}

TEST(IndependenceRegime, ParameterCheck) {
  const auto inside = independence_regime_check(100, 1, 50, 10);
  EXPECT_TRUE(inside.applies);
  EXPECT_EQ(inside.inner, 83);
  EXPECT_EQ(inside.m_bound, 84);
  EXPECT_FALSE(independence_regime_check(100, 1, 84, 10).applies);
  EXPECT_FALSE(independence_regime_check(10, 2, 1, 5).applies);
  for (int m = 1; m <= 5; ++m) EXPECT_FALSE(independence_regime_check(12, 1, m, 12).applies);
}

TEST(ResilienceRegime, TRange) {
  const TRange small = resilience_t_range(100, 1);
  EXPECT_TRUE(small.empty());
  EXPECT_FALSE(resilience_t_range(100000, 1).empty());
}
