#pragma once

// Randomised and exhaustive experiments on lifted random cube points: linear
// independence, resilience of the span, and Littlewood-Offord probabilities.
// Every random draw comes from a per-trial generator seeded by a counter
// scheme, so results do not depend on how trials are spread over threads.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ptf/cube_lift.hpp"
#include "ptf/numeric.hpp"

namespace ptf {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

std::uint64_t splitmix64(std::uint64_t x);
/// Seed of trial `index` under `master`.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);
std::mt19937_64 trial_rng(std::uint64_t master, std::uint64_t index);

struct WilsonInterval {
  double lo = 0;
  double hi = 1;
};
/// 95% Wilson score interval.
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials);

struct ExperimentConfig {
  int n = 0;
  int d = 1;
  int m = 1;
  std::uint64_t trials = 1000;
  std::uint64_t master_seed = kDefaultSeed;
  unsigned threads = 1;
};

struct MCReport {
  std::string kind;
  int n = 0;
  int d = 0;
  int m = 0;
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double estimate = 0;
  WilsonInterval ci;
  std::uint64_t seed = 0;
  double elapsed_ms = 0;
  std::optional<BigRational> exact;
  std::vector<std::pair<std::string, std::string>> notes;
};

// ---------------------------------------------------------------------------
// Littlewood-Offord

/// 2^-n binom(n, floor(n/2)).
BigRational littlewood_offord_P(int n);

/// Pr[sum a_k xi_k = u] for independent uniform signs, by enumerating all 2^n
/// sign patterns. n <= 24.
BigRational lo_exact_probability(std::span<const BigRational> a, const BigRational& u);

/// Monte Carlo estimate of the same probability; with `exact` (n <= 20) the
/// enumerated value is attached.
MCReport lo_empirical(std::span<const BigRational> a, const BigRational& u, std::uint64_t trials,
                      std::uint64_t seed, bool exact, unsigned threads = 1);

/// The fixed coefficient test set used by the exhaustive bound check.
std::vector<std::vector<BigRational>> lo_test_coefficients(int max_n);

struct LOCheckReport {
  std::size_t vectors = 0;
  std::size_t targets = 0;
  std::size_t violations = 0;
  std::vector<std::string> failures;
};
/// For every test vector and every attainable u: Pr <= P(n), and Pr <= P(n+1) when u != 0.
LOCheckReport lo_exhaustive_check(int max_n = 12);

// ---------------------------------------------------------------------------
// Independence

enum class RankField { rational, gf2_boolean };

/// Whether the lifts of the points are linearly independent over Q.
bool lifted_independent(std::span<const CubePoint> points, int d);
/// Rank of the {0,1} lifts (monomials as ANDs) over GF(2).
Index gf2_boolean_lift_rank(std::span<const CubePoint> points, int d);

MCReport mc_independence(const ExperimentConfig& config, RankField field = RankField::rational);

/// Exact probability over all (2^n)^m ordered samples. (2^n)^m <= 2^24.
BigRational independence_probability_exhaustive(int n, int d, int m, unsigned threads = 1);

// ---------------------------------------------------------------------------
// Resilience

struct ResilienceVerdict {
  bool good = true;
  std::optional<CubePoint> witness;
  RationalVector coefficients;  // sum_k a_k lift(x_k) = lift(witness)
};

/// Scans u in ascending bit order for a lifted cube point in the span of the
/// lifted sample, other than the sample points themselves. n <= 16, points distinct.
ResilienceVerdict resilience_check(std::span<const CubePoint> points, int d);

/// Exact substitution check of a bad verdict.
bool verify_resilience_witness(std::span<const CubePoint> points, int d, const ResilienceVerdict& v);

struct SubsetFractionReport {
  int n = 0;
  int d = 0;
  int m = 0;
  bool exhaustive = true;
  std::uint64_t good = 0;
  std::uint64_t total = 0;
  BigRational fraction;
  std::uint64_t seed = 0;
  /// Exhaustive runs only: number of distinct canonical spans among good subsets.
  std::optional<std::uint64_t> distinct_good_spans;
};

enum class SubsetMode { automatic, exhaustive, sampled };

/// Automatic mode is exhaustive when binom(2^n, m) <= 10^6 and otherwise uses
/// `samples` seeded draws of m distinct points.
SubsetFractionReport good_subset_fraction(int n, int d, int m, std::uint64_t samples = 10000,
                                          std::uint64_t seed = kDefaultSeed, unsigned threads = 1,
                                          SubsetMode mode = SubsetMode::automatic);

/// Reduced row-echelon form of the lifted points; equal spans give equal forms.
RationalMatrix canonical_span(std::span<const CubePoint> points, int d);

MCReport mc_resilience(const ExperimentConfig& config);

// ---------------------------------------------------------------------------
// Regime annotations for the asymptotic statements

struct IndependenceRegime {
  bool applies = false;
  /// floor(n - log2 binom(n, <= d) - t), rounded down conservatively; negative means empty.
  BigInt inner;
  BigInt m_bound;  // the hypothesis reads m < m_bound
  std::string note;
};
IndependenceRegime independence_regime_check(int n, int d, const BigInt& m, const BigRational& t);

struct TRange {
  double lo = 0;  // d n^0.02
  double hi = 0;  // 0.001 n
  bool empty() const { return lo > hi; }
};
TRange resilience_t_range(int n, int d);

}  // namespace ptf
