#include "ptf/random_tensors.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <set>
#include <thread>

#include "ptf/interval.hpp"
#include "ptf/linalg_exact.hpp"

namespace ptf {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index));
}

std::mt19937_64 trial_rng(std::uint64_t master, std::uint64_t index) {
  return std::mt19937_64(trial_seed(master, index));
}

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials) {
  if (trials == 0) return {0, 1};
  constexpr double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double denom = 1 + z * z / n;
  const double centre = (p + z * z / (2 * n)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Runs body(i) for i in [0, count) over `threads` workers and sums the results.
template <typename Body>
std::uint64_t parallel_count(std::uint64_t count, unsigned threads, Body body) {
  threads = std::max(1U, threads);
  std::vector<std::uint64_t> partial(threads, 0);
  std::atomic<std::uint64_t> cursor{0};
  constexpr std::uint64_t kChunk = 64;
  auto worker = [&](unsigned w) {
    for (std::uint64_t lo = cursor.fetch_add(kChunk); lo < count; lo = cursor.fetch_add(kChunk)) {
      const std::uint64_t hi = std::min(count, lo + kChunk);
      for (std::uint64_t i = lo; i < hi; ++i) partial[w] += body(i);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  return total;
}

void finish(MCReport& r) {
  r.estimate = r.trials ? static_cast<double>(r.successes) / static_cast<double>(r.trials) : 0;
  r.ci = wilson_interval(r.successes, r.trials);
}

std::uint64_t cube_mask(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

std::vector<CubePoint> sample_points(std::mt19937_64& rng, int n, int m, bool distinct) {
  std::vector<CubePoint> pts;
  pts.reserve(static_cast<std::size_t>(m));
  std::set<std::uint64_t> used;
  while (static_cast<int>(pts.size()) < m) {
    const std::uint64_t bits = rng() & cube_mask(n);
    if (distinct && !used.insert(bits).second) continue;
    pts.emplace_back(n, bits);
  }
  return pts;
}

// Integer form of (a, u) after clearing denominators jointly.
struct ScaledLO {
  std::vector<std::int64_t> a;
  std::int64_t u = 0;
  bool small = true;
  IntegerVector big;
};

ScaledLO scale_lo(std::span<const BigRational> a, const BigRational& u) {
  for (const auto& x : a)
    if (x == 0) throw InvalidArgument("Littlewood-Offord coefficients must be nonzero");
  RationalVector v(static_cast<Index>(a.size()) + 1);
  for (std::size_t i = 0; i < a.size(); ++i) v[static_cast<Index>(i)] = a[i];
  v[static_cast<Index>(a.size())] = u;
  ScaledLO s;
  s.big = integerize(v);
  BigInt total = 0;
  for (Index i = 0; i < s.big.size(); ++i) total += abs(s.big[i]);
  s.small = total < BigInt(std::int64_t{1} << 62);
  if (s.small) {
    for (std::size_t i = 0; i < a.size(); ++i) s.a.push_back(static_cast<std::int64_t>(s.big[static_cast<Index>(i)]));
    s.u = static_cast<std::int64_t>(s.big[static_cast<Index>(a.size())]);
  }
  return s;
}

// All 2^n signed sums, in Gray-code order.
std::vector<std::int64_t> all_sums(const std::vector<std::int64_t>& a) {
  const std::size_t n = a.size();
  std::vector<std::int64_t> out(std::size_t{1} << n);
  std::int64_t sum = 0;
  for (auto x : a) sum += x;
  std::vector<int> sgn(n, 1);
  out[0] = sum;
  for (std::uint64_t k = 1; k < out.size(); ++k) {
    const int i = std::countr_zero(k);
    sum -= 2 * sgn[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(i)];
    sgn[static_cast<std::size_t>(i)] = -sgn[static_cast<std::size_t>(i)];
    out[k] = sum;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Littlewood-Offord

BigRational littlewood_offord_P(int n) {
  if (n < 1) throw InvalidArgument("P(n) requires n >= 1");
  return BigRational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(n / 2)),
                     pow2(static_cast<unsigned long>(n)));
}

BigRational lo_exact_probability(std::span<const BigRational> a, const BigRational& u) {
  const int n = static_cast<int>(a.size());
  if (n < 1) throw InvalidArgument("need at least one coefficient");
  if (n > 24) throw ResourceLimit("exact Littlewood-Offord enumeration is limited to n <= 24");
  ScaledLO s = scale_lo(a, u);
  std::uint64_t hits = 0;
  if (s.small) {
    for (auto v : all_sums(s.a)) hits += v == s.u;
  } else {
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
      BigInt sum = 0;
      for (int i = 0; i < n; ++i) sum += (k >> i) & 1U ? BigInt(-s.big[i]) : s.big[i];
      hits += sum == s.big[n];
    }
  }
  return BigRational(BigInt(hits), pow2(static_cast<unsigned long>(n)));
}

MCReport lo_empirical(std::span<const BigRational> a, const BigRational& u, std::uint64_t trials,
                      std::uint64_t seed, bool exact, unsigned threads) {
  const auto start = Clock::now();
  const int n = static_cast<int>(a.size());
  if (n < 1) throw InvalidArgument("need at least one coefficient");
  if (trials < 1 && !exact) throw InvalidArgument("trials must be positive");
  if (exact && n > 20) throw ResourceLimit("exact enumeration is offered for n <= 20");
  ScaledLO s = scale_lo(a, u);
  MCReport r;
  r.kind = "lo";
  r.n = n;
  r.trials = trials;
  r.seed = seed;
  r.successes = parallel_count(trials, threads, [&](std::uint64_t t) -> std::uint64_t {
    auto rng = trial_rng(seed, t);
    std::uint64_t bits = 0;
    if (s.small) {
      std::int64_t sum = 0;
      for (int i = 0; i < n; ++i) {
        if (i % 64 == 0) bits = rng();
        sum += (bits >> (i % 64)) & 1U ? -s.a[static_cast<std::size_t>(i)] : s.a[static_cast<std::size_t>(i)];
      }
      return sum == s.u;
    }
    BigInt sum = 0;
    for (int i = 0; i < n; ++i) {
      if (i % 64 == 0) bits = rng();
      sum += (bits >> (i % 64)) & 1U ? BigInt(-s.big[i]) : s.big[i];
    }
    return sum == s.big[n];
  });
  finish(r);
  if (exact) r.exact = lo_exact_probability(a, u);
  r.notes.emplace_back("P(n)", to_string(littlewood_offord_P(n)));
  if (u != 0) r.notes.emplace_back("P(n+1)", to_string(littlewood_offord_P(n + 1)));
  r.elapsed_ms = ms_since(start);
  return r;
}

std::vector<std::vector<BigRational>> lo_test_coefficients(int max_n) {
  std::vector<std::vector<BigRational>> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::vector<BigRational>> fam(9, std::vector<BigRational>(static_cast<std::size_t>(n)));
    long f0 = 1, f1 = 1;
    for (int k = 0; k < n; ++k) {
      const auto i = static_cast<std::size_t>(k);
      fam[0][i] = 1;
      fam[1][i] = k + 1;
      fam[2][i] = BigRational(pow2(static_cast<unsigned long>(k)));
      fam[3][i] = k % 2 ? -1 : 1;
      fam[4][i] = (k % 3 + 1) * (k % 2 ? -1 : 1);
      fam[5][i] = 2 * k < n ? 1 : 2;
      fam[6][i] = BigRational(k + 1, k + 2);
      fam[7][i] = k + 1 == n ? n : 1;
      fam[8][i] = f0;
      const long next = f0 + f1;
      f0 = f1;
      f1 = next;
    }
    for (auto& v : fam) out.push_back(std::move(v));
  }
  // Every vector over {-2,-1,1,2} of length <= 4.
  const int values[] = {-2, -1, 1, 2};
  for (int n = 1; n <= std::min(4, max_n); ++n) {
    int total = 1;
    for (int i = 0; i < n; ++i) total *= 4;
    for (int code = 0; code < total; ++code) {
      std::vector<BigRational> v;
      for (int i = 0, c = code; i < n; ++i, c /= 4) v.emplace_back(values[c % 4]);
      out.push_back(std::move(v));
    }
  }
  return out;
}

LOCheckReport lo_exhaustive_check(int max_n) {
  LOCheckReport rep;
  for (const auto& a : lo_test_coefficients(max_n)) {
    const int n = static_cast<int>(a.size());
    ScaledLO s = scale_lo(a, BigRational(0));
    std::vector<std::int64_t> sums = all_sums(s.a);
    std::sort(sums.begin(), sums.end());
    // Pr <= P(n)  <=>  count <= binom(n, n/2); Pr <= P(n+1)  <=>  2 count <= binom(n+1, (n+1)/2).
    const BigInt cap = binomial(static_cast<unsigned>(n), static_cast<unsigned>(n / 2));
    const BigInt cap_nonzero = binomial(static_cast<unsigned>(n + 1), static_cast<unsigned>((n + 1) / 2));
    ++rep.vectors;
    for (std::size_t i = 0; i < sums.size();) {
      std::size_t j = i;
      while (j < sums.size() && sums[j] == sums[i]) ++j;
      const BigInt count(static_cast<std::uint64_t>(j - i));
      ++rep.targets;
      const bool ok = count <= cap && (sums[i] == 0 || 2 * count <= cap_nonzero);
      if (!ok) {
        ++rep.violations;
        std::string desc = "a=(";
        for (std::size_t k = 0; k < a.size(); ++k) desc += (k ? "," : "") + to_string(a[k]);
        rep.failures.push_back(desc + ") scaled sum " + std::to_string(sums[i]) + " count " + to_string(count));
      }
      i = j;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Independence

bool lifted_independent(std::span<const CubePoint> points, int d) {
  if (points.empty()) return true;
  const LiftMatrix l = lift_matrix(points, d);
  return rank(l) == static_cast<Index>(points.size());
}

Index gf2_boolean_lift_rank(std::span<const CubePoint> points, int d) {
  if (points.empty()) return 0;
  const int n = points.front().dimension();
  const auto idx = monomial_indices(n, d);
  const std::size_t words = (idx.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& x : points) {
    std::vector<std::uint64_t> row(words, 0);
    for (std::size_t j = 0; j < idx.size(); ++j)
      if ((x.bits() & idx[j].mask) == idx[j].mask) row[j / 64] |= std::uint64_t{1} << (j % 64);
    rows.push_back(std::move(row));
  }
  Index r = 0;
  for (std::size_t c = 0; c < idx.size() && r < static_cast<Index>(rows.size()); ++c) {
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    auto piv = std::find_if(rows.begin() + r, rows.end(), [&](const auto& row) { return row[c / 64] & bit; });
    if (piv == rows.end()) continue;
    std::iter_swap(rows.begin() + r, piv);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (static_cast<Index>(i) != r && (rows[i][c / 64] & bit))
        for (std::size_t w = 0; w < words; ++w) rows[i][w] ^= rows[static_cast<std::size_t>(r)][w];
    ++r;
  }
  return r;
}

MCReport mc_independence(const ExperimentConfig& c, RankField field) {
  const auto start = Clock::now();
  if (c.n < 1 || c.n > kMaxCubeDimension) throw InvalidArgument("n must lie in 1..62");
  if (c.d < 1 || c.d > c.n) throw InvalidArgument("d must satisfy 1 <= d <= n");
  if (c.m < 1) throw InvalidArgument("m must be positive");
  if (c.trials < 1) throw InvalidArgument("trials must be positive");
  if (c.m > lift_dimension(c.n, c.d))
    throw InvalidArgument("m exceeds binom(n, <= d): the lifted vectors are always dependent");
  MCReport r;
  r.kind = field == RankField::rational ? "independence" : "independence-gf2";
  r.n = c.n;
  r.d = c.d;
  r.m = c.m;
  r.trials = c.trials;
  r.seed = c.master_seed;
  r.successes = parallel_count(c.trials, c.threads, [&](std::uint64_t t) -> std::uint64_t {
    auto rng = trial_rng(c.master_seed, t);
    auto pts = sample_points(rng, c.n, c.m, false);
    if (field == RankField::rational) return lifted_independent(pts, c.d);
    return gf2_boolean_lift_rank(pts, c.d) == c.m;
  });
  finish(r);
  r.elapsed_ms = ms_since(start);
  return r;
}

BigRational independence_probability_exhaustive(int n, int d, int m, unsigned threads) {
  if (n < 1 || d < 1 || d > n || m < 1) throw InvalidArgument("need 1 <= d <= n and m >= 1");
  if (static_cast<long>(n) * m > 24) throw ResourceLimit("exhaustive sampling limited to (2^n)^m <= 2^24");
  const std::uint64_t total = std::uint64_t{1} << (n * m);
  const std::uint64_t mask = cube_mask(n);
  const std::uint64_t good = parallel_count(total, threads, [&](std::uint64_t s) -> std::uint64_t {
    std::vector<CubePoint> pts;
    for (int k = 0; k < m; ++k) pts.emplace_back(n, (s >> (n * k)) & mask);
    return lifted_independent(pts, d);
  });
  return BigRational(BigInt(good), BigInt(total));
}

// ---------------------------------------------------------------------------
// Resilience

namespace {

RationalMatrix lifted_rows(std::span<const CubePoint> points, int d) {
  return to_rational(lift_matrix(points, d));
}

struct SpanTester {
  RationalMatrix rref;
  std::vector<Index> pivots;

  explicit SpanTester(const RationalMatrix& rows) : rref(canonical_rref(rows)) {
    for (Index i = 0; i < rref.rows(); ++i)
      for (Index j = 0; j < rref.cols(); ++j)
        if (rref(i, j) != 0) {
          pivots.push_back(j);
          break;
        }
  }

  bool contains(const LiftedVector& v) const {
    RationalVector w = v.cast<BigRational>();
    for (Index i = 0; i < rref.rows(); ++i) {
      const BigRational f = w[pivots[static_cast<std::size_t>(i)]];
      if (f != 0) w -= f * rref.row(i).transpose();
    }
    for (Index j = 0; j < w.size(); ++j)
      if (w[j] != 0) return false;
    return true;
  }
};

void check_sample(std::span<const CubePoint> points, int d) {
  if (points.empty()) throw InvalidArgument("resilience needs at least one point");
  const int n = points.front().dimension();
  if (n > 16) throw ResourceLimit("resilience scans 2^n candidates and stops at n = 16");
  if (d < 1 || d > n) throw InvalidArgument("d must satisfy 1 <= d <= n");
  std::set<std::uint64_t> seen;
  for (const auto& x : points) {
    if (x.dimension() != n) throw DimensionMismatch("points of mixed dimension");
    if (!seen.insert(x.bits()).second) throw InvalidArgument("resilience points must be distinct");
  }
}

}  // namespace

ResilienceVerdict resilience_check(std::span<const CubePoint> points, int d) {
  check_sample(points, d);
  const int n = points.front().dimension();
  const RationalMatrix basis = lifted_rows(points, d);
  SpanTester span(basis);
  std::set<std::uint64_t> own;
  for (const auto& x : points) own.insert(x.bits());
  ResilienceVerdict v;
  // Lifts start with the coordinate 1, so -lift(x) is never a lift and only
  // the sample points themselves need excluding.
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    if (own.count(bits)) continue;
    CubePoint u(n, bits);
    const LiftedVector lu = lift(u, d);
    if (!span.contains(lu)) continue;
    auto coeffs = solve_in_span(basis, lu.cast<BigRational>());
    if (!coeffs) throw std::logic_error("span membership and solve disagree");
    v.good = false;
    v.witness = u;
    v.coefficients = std::move(*coeffs);
    return v;
  }
  return v;
}

bool verify_resilience_witness(std::span<const CubePoint> points, int d, const ResilienceVerdict& v) {
  if (v.good) return !v.witness;
  if (!v.witness || v.coefficients.size() != static_cast<Index>(points.size())) return false;
  for (const auto& x : points)
    if (x == *v.witness) return false;
  const LiftedVector target = lift(*v.witness, d);
  RationalVector acc = RationalVector::Constant(target.size(), BigRational(0));
  for (std::size_t k = 0; k < points.size(); ++k)
    acc += v.coefficients[static_cast<Index>(k)] * lift(points[k], d).cast<BigRational>();
  for (Index j = 0; j < target.size(); ++j)
    if (acc[j] != target[j]) return false;
  return true;
}

RationalMatrix canonical_span(std::span<const CubePoint> points, int d) {
  return canonical_rref(lifted_rows(points, d));
}

SubsetFractionReport good_subset_fraction(int n, int d, int m, std::uint64_t samples,
                                          std::uint64_t seed, unsigned threads, SubsetMode mode) {
  if (n < 1 || n > 16) throw InvalidArgument("good_subset_fraction needs 1 <= n <= 16");
  if (d < 1 || d > n) throw InvalidArgument("d must satisfy 1 <= d <= n");
  const std::uint64_t cube = std::uint64_t{1} << n;
  if (m < 1 || static_cast<std::uint64_t>(m) > cube) throw InvalidArgument("m must lie in 1..2^n");
  SubsetFractionReport r;
  r.n = n;
  r.d = d;
  r.m = m;
  r.seed = seed;
  const BigInt subsets = binomial(static_cast<unsigned>(cube), static_cast<unsigned>(m));
  threads = std::max(1U, threads);

  if (mode == SubsetMode::exhaustive && subsets > 1000000)
    throw ResourceLimit("exhaustive subset scan is limited to binom(2^n, m) <= 10^6");
  if (mode == SubsetMode::exhaustive || (mode == SubsetMode::automatic && subsets <= 1000000)) {
    r.exhaustive = true;
    r.total = static_cast<std::uint64_t>(subsets);
    std::vector<std::uint32_t> flat;
    flat.reserve(r.total * static_cast<std::uint64_t>(m));
    std::vector<std::uint32_t> comb(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) comb[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(i);
    while (true) {
      flat.insert(flat.end(), comb.begin(), comb.end());
      int i = m - 1;
      while (i >= 0 && comb[static_cast<std::size_t>(i)] == cube - static_cast<std::uint64_t>(m - i)) --i;
      if (i < 0) break;
      ++comb[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < m; ++j) comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
    std::vector<std::set<std::string>> spans(threads);
    std::atomic<std::uint64_t> cursor{0};
    std::vector<std::uint64_t> good(threads, 0);
    auto worker = [&](unsigned w) {
      for (std::uint64_t s = cursor++; s < r.total; s = cursor++) {
        std::vector<CubePoint> pts;
        for (int k = 0; k < m; ++k) pts.emplace_back(n, flat[s * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(k)]);
        if (!resilience_check(pts, d).good) continue;
        ++good[w];
        RationalMatrix c = canonical_span(pts, d);
        std::string key;
        for (Index i = 0; i < c.rows(); ++i)
          for (Index j = 0; j < c.cols(); ++j) key += to_string(c(i, j)) + ",";
        spans[w].insert(std::move(key));
      }
    };
    if (threads == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
      for (auto& t : pool) t.join();
    }
    std::set<std::string> all;
    for (auto& s : spans) all.insert(s.begin(), s.end());
    for (auto g : good) r.good += g;
    r.distinct_good_spans = all.size();
  } else {
    if (samples < 1) throw InvalidArgument("samples must be positive");
    r.exhaustive = false;
    r.total = samples;
    r.good = parallel_count(samples, threads, [&](std::uint64_t t) -> std::uint64_t {
      auto rng = trial_rng(seed, t);
      auto pts = sample_points(rng, n, m, true);
      std::sort(pts.begin(), pts.end());
      return resilience_check(pts, d).good;
    });
  }
  r.fraction = BigRational(BigInt(r.good), BigInt(r.total));
  return r;
}

MCReport mc_resilience(const ExperimentConfig& c) {
  const auto start = Clock::now();
  if (c.n < 1 || c.n > 16) throw InvalidArgument("resilience experiments need 1 <= n <= 16");
  if (c.d < 1 || c.d > c.n) throw InvalidArgument("d must satisfy 1 <= d <= n");
  if (c.m < 1 || static_cast<std::uint64_t>(c.m) > (std::uint64_t{1} << c.n))
    throw InvalidArgument("m must lie in 1..2^n");
  if (c.trials < 1) throw InvalidArgument("trials must be positive");
  MCReport r;
  r.kind = "resilience";
  r.n = c.n;
  r.d = c.d;
  r.m = c.m;
  r.trials = c.trials;
  r.seed = c.master_seed;
  r.successes = parallel_count(c.trials, c.threads, [&](std::uint64_t t) -> std::uint64_t {
    auto rng = trial_rng(c.master_seed, t);
    auto pts = sample_points(rng, c.n, c.m, true);
    std::sort(pts.begin(), pts.end());
    return resilience_check(pts, c.d).good;
  });
  finish(r);
  r.elapsed_ms = ms_since(start);
  return r;
}

// ---------------------------------------------------------------------------
// Regime annotations

IndependenceRegime independence_regime_check(int n, int d, const BigInt& m, const BigRational& t) {
  if (n < 1 || d < 1 || d > n) throw InvalidArgument("need 1 <= d <= n");
  IndependenceRegime c;
  const mpfr_prec_t prec = 128;
  const BigInt bs = binomial_sum_clamped(BigInt(n), static_cast<unsigned>(d));
  Interval inner = Interval::exact(BigRational(n), prec) - log2(Interval::exact(bs, prec)) -
                   Interval::exact(t, prec);
  mpz_t z;
  mpz_init(z);
  mpfr_get_z(z, inner.lo(), MPFR_RNDD);
  c.inner = BigInt(z);
  mpz_clear(z);
  if (c.inner < 0) {
    c.m_bound = 0;
    c.note = "regime empty: n - log2 binom(n,<=d) - t is negative";
    return c;
  }
  c.m_bound = binomial_sum_clamped(c.inner, static_cast<unsigned>(d));
  c.applies = m >= 1 && m < c.m_bound;
  if (c.applies)
    c.note = "theorem applies: predicted failure probability <= 2^-" + to_string(t);
  else if (c.m_bound <= 1)
    c.note = "theorem vacuous at this scale: no m >= 1 satisfies the hypothesis";
  else
    c.note = "outside regime: the hypothesis needs m < " + to_string(c.m_bound);
  return c;
}

TRange resilience_t_range(int n, int d) {
  if (n < 1 || d < 1) throw InvalidArgument("need n, d >= 1");
  return {d * std::pow(static_cast<double>(n), 0.02), 0.001 * n};
}

}  // namespace ptf
