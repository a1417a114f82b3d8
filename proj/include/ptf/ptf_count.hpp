#pragma once

// T(n,d): the number of Boolean functions on {-1,1}^n of the form sgn(p(x))
// with deg p <= d. Counted as regions of the central arrangement of lifted
// cube points, and independently by testing every Boolean function.

#include <string>

#include "ptf/numeric.hpp"

namespace ptf {

struct PTFCountResult {
  int n = 0;
  int d = 0;
  BigInt count;
  std::string method;  // "region-enumeration" or "function-oracle"
  double elapsed_ms = 0;
  std::size_t feasibility_calls = 0;
};

/// (n <= 5, d = 1), (n <= 4, d <= 2), (n <= 3, d <= 3).
bool in_count_envelope(int n, int d);

PTFCountResult count_ptf(int n, int d, unsigned threads = 1);

/// Tests each of the 2^(2^n) Boolean functions for a separating polynomial. n <= 4.
PTFCountResult oracle_count_ptf(int n, int d, unsigned threads = 1);

struct UpperBoundCheck {
  BigInt sharp_upper;      // 2 binom(2^n - 1, <= m - 1)
  BigInt theorem_upper;    // n binom(n, <= d), a bound on log2 T
  BigInt saks_lower;       // binom(n, d + 1), a bound on log2 T
  BigInt sharp_slack;      // sharp_upper - count
  bool sharp_holds = false;
  bool sharp_equal = false;
  bool theorem_holds = false;
  bool saks_holds = false;

  bool holds() const { return sharp_holds && theorem_holds && saks_holds; }
};

/// Exact big-integer comparisons; log2 bounds are compared as powers of two.
UpperBoundCheck verify_upper_bounds(const PTFCountResult& result);

}  // namespace ptf
