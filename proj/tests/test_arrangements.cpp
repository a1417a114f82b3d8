#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "ptf/arrangements.hpp"
#include "ptf/linalg_exact.hpp"

using namespace ptf;

namespace {

Arrangement parse(const std::string& text) {
  std::istringstream in(text);
  return read_arrangement(in);
}

// Every sign vector tested on its own, with the offset homogenised by t > 0.
BigInt brute_force_regions(const Arrangement& a) {
  const Index m = a.dimension();
  const Index p = a.size();
  BigInt count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << p); ++s) {
    std::vector<SignConstraint> c;
    for (Index i = 0; i < p; ++i) {
      SignConstraint k;
      k.normal.resize(m + 1);
      k.normal.head(m) = a[i].normal;
      k.normal[m] = a[i].offset;
      k.sign = (s >> i) & 1U ? -1 : 1;
      c.push_back(k);
    }
    SignConstraint t;
    t.normal = RationalVector::Zero(m + 1);
    t.normal[m] = 1;
    c.push_back(t);
    if (strict_feasible(c).feasible) ++count;
  }
  return count;
}

Arrangement random_arrangement(std::mt19937_64& rng, Index m, Index p, bool central) {
  std::uniform_int_distribution<int> u(-50, 50);
  std::vector<Hyperplane> h(static_cast<std::size_t>(p));
  for (auto& hp : h) {
    hp.normal.resize(m);
    do {
      for (Index j = 0; j < m; ++j) hp.normal[j] = BigRational(u(rng), 1 + (rng() % 7));
    } while (hp.normal.isZero());
    hp.offset = central ? BigRational(0) : BigRational(u(rng), 1 + (rng() % 5));
  }
  return Arrangement(m, std::move(h));
}

const char* kThreeGeneralLines =
    "2 3 affine\n"
    "1 0 0\n"
    "0 1 0\n"
    "1 1 -1\n";

const char* kThreeConcurrentLines =
    "# three lines through the origin\n"
    "2 3 central\n"
    "1 0 0\n"
    "0 1 0\n"
    "1 1 0\n";

}  // namespace

TEST(Arrangement, ThreeGeneralLines) {
  const Arrangement a = parse(kThreeGeneralLines);
  EXPECT_FALSE(a.central());
  RegionOptions opts;
  opts.count_subspaces = true;
  const auto r = count_regions(a, opts);
  EXPECT_EQ(r.region_count, 7);
  EXPECT_EQ(*r.intersection_subspace_count, 7);
  EXPECT_EQ(r.upper_bound, 7);
}

TEST(Arrangement, ThreeConcurrentLines) {
  const Arrangement a = parse(kThreeConcurrentLines);
  EXPECT_TRUE(a.central());
  EXPECT_EQ(count_regions(a).region_count, 6);
  EXPECT_EQ(count_intersection_subspaces(a), 5);
  EXPECT_EQ(region_upper_bound(3, 2, true), 6);
}

TEST(Arrangement, SingleHyperplane) {
  for (Index m = 1; m <= 4; ++m) {
    Hyperplane h;
    h.normal = RationalVector::Zero(m);
    h.normal[m - 1] = 3;
    h.offset = 1;
    const Arrangement a(m, {h});
    EXPECT_EQ(count_regions(a).region_count, 2);
    EXPECT_EQ(count_intersection_subspaces(a), 2);
  }
}

TEST(Arrangement, ParallelAndRepeatedHyperplanes) {
  const Arrangement a = parse("1 3 affine\n1 0\n1 -1\n2 -2\n");
  EXPECT_EQ(count_regions(a).region_count, 3);
  // x = 0 and x = 1; the repeat collapses, and parallel lines never meet.
  EXPECT_EQ(count_intersection_subspaces(a), 3);
}

TEST(Arrangement, UpperBoundExamples) {
  EXPECT_EQ(region_upper_bound(3, 2, false), 7);
  EXPECT_EQ(region_upper_bound(3, 2, true), 6);
  EXPECT_EQ(region_upper_bound(1, 1, true), 2);
  EXPECT_THROW(region_upper_bound(1, 2, false), InvalidArgument);
}

TEST(Arrangement, ParserErrors) {
  EXPECT_THROW(parse(""), InvalidArgument);
  EXPECT_THROW(parse("2 1 sideways\n1 0 0\n"), InvalidArgument);
  EXPECT_THROW(parse("2 2 affine\n1 0 0\n"), InvalidArgument);
  EXPECT_THROW(parse("2 1 affine\n1 0\n"), DimensionMismatch);
  EXPECT_THROW(parse("2 1 affine\n0 0 1\n"), InvalidArgument);
}

TEST(Arrangement, WriteReadRoundTrip) {
  const Arrangement a = parse("2 2 affine\n1/2 -3 7\n0.25 1 0\n");
  std::ostringstream out;
  write_arrangement(out, a);
  const Arrangement b = parse(out.str());
  ASSERT_EQ(b.size(), 2);
  EXPECT_EQ(b[0].normal, a[0].normal);
  EXPECT_EQ(b[1].offset, a[1].offset);
  EXPECT_EQ(b[1].normal[0], BigRational(1, 4));
}

TEST(Arrangement, MatchesBruteForce) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Index m = 1 + static_cast<Index>(rng() % 3);
    const Index p = 1 + static_cast<Index>(rng() % 6);
    std::uniform_int_distribution<int> u(-1, 1);
    std::vector<Hyperplane> h(static_cast<std::size_t>(p));
    for (auto& hp : h) {
      hp.normal.resize(m);
      do {
        for (Index j = 0; j < m; ++j) hp.normal[j] = u(rng);
      } while (hp.normal.isZero());
      hp.offset = trial % 2 ? BigRational(u(rng)) : BigRational(0);
    }
    const Arrangement a(m, std::move(h));
    EXPECT_EQ(count_regions(a).region_count, brute_force_regions(a)) << "trial " << trial;
  }
}

TEST(Arrangement, GeneralPositionAttainsBound) {
  std::mt19937_64 rng(17);
  for (Index m = 1; m <= 4; ++m) {
    for (Index p = m; p <= 8; ++p) {
      for (bool central : {false, true}) {
        const Arrangement a = random_arrangement(rng, m, p, central);
        ASSERT_TRUE(normals_in_general_position(a));
        // Distinct flats for every subfamily of size <= m certify genericity of the offsets.
        const BigInt flats = count_intersection_subspaces(a);
        const BigInt expected = central ? region_upper_bound(p, m, true) : region_upper_bound(p, m, false);
        if (!central) ASSERT_EQ(flats, binomial_sum_clamped(BigInt(p), static_cast<unsigned>(m)));
        EXPECT_EQ(count_regions(a).region_count, expected) << "m=" << m << " p=" << p << " central=" << central;
      }
    }
  }
}

TEST(Arrangement, CentralCountsAreEven) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> u(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix<int> normals(3 + trial % 5, 3);
    for (Index i = 0; i < normals.rows(); ++i) {
      do {
        for (Index j = 0; j < 3; ++j) normals(i, j) = u(rng);
      } while (normals.row(i).isZero());
    }
    const BigInt r = count_regions(Arrangement::central(normals)).region_count;
    EXPECT_EQ(r % 2, 0);
  }
}

TEST(Arrangement, SandwichAndThreadIndependence) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> u(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const Index m = 2 + trial % 3;
    const Index p = m + static_cast<Index>(rng() % 5);
    std::vector<Hyperplane> h(static_cast<std::size_t>(p));
    for (auto& hp : h) {
      hp.normal.resize(m);
      do {
        for (Index j = 0; j < m; ++j) hp.normal[j] = u(rng);
      } while (hp.normal.isZero());
      hp.offset = u(rng);
    }
    const Arrangement a(m, std::move(h));
    RegionOptions one;
    one.count_subspaces = true;
    RegionOptions four = one;
    four.threads = 4;
    const auto r1 = count_regions(a, one);
    const auto r4 = count_regions(a, four);
    EXPECT_EQ(r1.region_count, r4.region_count);
    EXPECT_LE(*r1.intersection_subspace_count, r1.region_count);
    EXPECT_LE(r1.region_count, region_upper_bound(p, m, a.central()));
  }
}

TEST(Arrangement, Caps) {
  std::vector<Hyperplane> h(41);
  for (auto& hp : h) {
    hp.normal = RationalVector::Ones(2);
  }
  const Arrangement a(2, h);
  EXPECT_THROW(count_regions(a), ResourceLimit);
  EXPECT_THROW(count_intersection_subspaces(a), ResourceLimit);
}
