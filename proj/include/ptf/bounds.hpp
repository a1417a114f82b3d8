#pragma once

// Closed-form bounds on T(n,d) and the inequality scans behind them. Exact
// big-integer/rational comparison is used whenever both sides are rational;
// everything involving e or logarithms goes through certified intervals.

#include <optional>
#include <string>
#include <vector>

#include "ptf/interval.hpp"
#include "ptf/numeric.hpp"

namespace ptf {

/// Exact binom(n,0) + ... + binom(n,d). Requires 0 <= d <= n.
BigInt binom_sum(int n, int d);

/// One checked instance of a scanned inequality.
struct ScanEntry {
  int n = 0;
  int d = 0;
  int k = 0;           // auxiliary parameter (Lemma A2); 0 when unused
  std::string label;   // point of evaluation when not an (n,d) pair
  std::string lhs;     // decimal rendering of the smaller side
  std::string rhs;
  double margin = 0;   // rhs - lhs, approximate
  Verdict verdict = Verdict::undecided;
  bool exact = false;  // decided by exact arithmetic
  mpfr_prec_t precision = 0;
};

struct ScanReport {
  std::string case_id;
  std::string grid;
  std::size_t pairs_checked = 0;
  std::vector<ScanEntry> entries;
  std::vector<ScanEntry> failures;
  mpfr_prec_t precision = 0;  // largest precision any comparison needed
  /// Extra named results (crossing interval, minimum margin, ...).
  std::vector<std::pair<std::string, std::string>> notes;

  bool holds() const { return failures.empty(); }
  void add(ScanEntry e);
};

// Appendix binomial-sum lemmas.
ScanEntry check_lemma_A1(int n, int d, const PrecisionPolicy& policy = PrecisionPolicy::from_environment());
ScanEntry check_lemma_A2(int n, int d, int k);
ScanEntry check_lemma_A3(int n, int d);
ScanReport scan_lemma_A1(int n_max = 60);
ScanReport scan_lemma_A2(int n_max = 40);
ScanReport scan_lemma_A3(int n_max = 60);

/// The ratio threshold separating the "n <= alpha d" regime.
BigRational alpha_ratio();

/// log2(e x) - x as a certified interval.
Interval case1_gap(const BigRational& x, mpfr_prec_t prec);

struct Crossing {
  BigRational lo;  // gap certainly positive here
  BigRational hi;  // gap certainly negative here
};
/// Bisection for the root of log2(e x) = x above 1, down to the given width.
Crossing locate_case1_crossing(const BigRational& width = BigRational(1, 10000));

ScanReport scan_case1_crossing();
ScanReport scan_case3();
ScanReport scan_case4();
ScanReport scan_case5();

/// Dispatch by id: "1", "3", "4", "5", "A1", "A2", "A3".
ScanReport run_scan(const std::string& case_id);

struct BoundValue {
  std::string name;
  std::optional<BigRational> exact;  // present when the bound is rational
  std::string log2_lo;               // certified enclosure of log2(value) or of the value itself
  std::string log2_hi;
  bool is_log2 = true;               // whether lo/hi enclose log2 of the quantity
  bool certified = true;
};

struct BoundReport {
  int n = 0;
  int d = 0;
  std::optional<BigRational> C;
  std::vector<BoundValue> values;

  const BoundValue* find(const std::string& name) const;
};

/// Every closed-form bound for (n, d). Lower bounds that depend on the
/// unspecified constant C are reported only when C is given and are marked
/// uncertified; log there means the natural logarithm.
BoundReport main_theorem_bounds(int n, int d, std::optional<BigRational> C = std::nullopt);

}  // namespace ptf
