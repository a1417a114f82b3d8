#include "ptf/bounds.hpp"

#include <sstream>

namespace ptf {

namespace {

constexpr mpfr_prec_t kRenderPrec = 128;

std::string approx(const BigRational& q) {
  return Interval::exact(q, kRenderPrec).lo_string(12);
}
std::string approx(const BigInt& z) { return approx(BigRational(z)); }
double approx_double(const BigRational& q) { return Interval::exact(q, kRenderPrec).mid_double(); }

BigInt ipow(const BigInt& base, unsigned e) {
  BigInt r;
  mpz_pow_ui(r.backend().data(), base.backend().data(), e);
  return r;
}

ScanEntry exact_entry(int n, int d, const BigRational& lhs, const BigRational& rhs) {
  ScanEntry e;
  e.n = n;
  e.d = d;
  e.lhs = approx(lhs);
  e.rhs = approx(rhs);
  e.margin = approx_double(rhs - lhs);
  e.exact = true;
  e.verdict = lhs <= rhs ? Verdict::holds : Verdict::violated;
  return e;
}

void merge_verdict(ScanEntry& into, Verdict v) {
  if (into.verdict == Verdict::violated || v == Verdict::violated)
    into.verdict = Verdict::violated;
  else if (into.verdict == Verdict::undecided || v == Verdict::undecided)
    into.verdict = Verdict::undecided;
}

BigRational dec(const char* s) { return parse_rational(s); }

}  // namespace

void ScanReport::add(ScanEntry e) {
  ++pairs_checked;
  precision = std::max(precision, e.precision);
  if (e.verdict != Verdict::holds) failures.push_back(e);
  entries.push_back(std::move(e));
}

BigInt binom_sum(int n, int d) {
  if (n < 0 || d < 0 || d > n) throw InvalidArgument("binom_sum requires 0 <= d <= n");
  return binomial_sum_clamped(BigInt(n), static_cast<unsigned>(d));
}

// ---------------------------------------------------------------------------
// Appendix lemmas

ScanEntry check_lemma_A1(int n, int d, const PrecisionPolicy& policy) {
  if (d < 1 || d > n) throw InvalidArgument("Lemma A1 requires 1 <= d <= n");
  const BigInt c = binomial(static_cast<unsigned>(n), static_cast<unsigned>(d));
  const BigInt s = binom_sum(n, d);
  // (n/d)^d <= binom(n,d)  <=>  n^d <= binom(n,d) d^d
  const bool left = ipow(BigInt(n), static_cast<unsigned>(d)) <= c * ipow(BigInt(d), static_cast<unsigned>(d));
  const bool middle = c <= s;
  const BigRational ratio(n, d);
  auto margin = [&](mpfr_prec_t prec) {
    return pow(Interval::e(prec) * Interval::exact(ratio, prec), static_cast<unsigned long>(d)) -
           Interval::exact(s, prec);
  };
  CertifiedSign right = certify_positive(margin, policy, true);

  ScanEntry e;
  e.n = n;
  e.d = d;
  e.lhs = approx(s);
  Interval upper = pow(Interval::e(kRenderPrec) * Interval::exact(ratio, kRenderPrec),
                       static_cast<unsigned long>(d));
  e.rhs = upper.lo_string(12);
  e.margin = right.margin_lo;
  e.precision = right.precision;
  e.verdict = (left && middle) ? Verdict::holds : Verdict::violated;
  merge_verdict(e, right.verdict);
  return e;
}

ScanEntry check_lemma_A2(int n, int d, int k) {
  if (d < 1 || 2 * d > n) throw InvalidArgument("Lemma A2 requires 1 <= d <= n/2");
  if (k < 1 || k > n - d + 1) throw InvalidArgument("Lemma A2 requires 1 <= k <= n-d+1");
  const BigInt full = binom_sum(n, d);
  const BigInt reduced = binomial_sum_clamped(BigInt(n - k), static_cast<unsigned>(d));
  BigRational factor(n - 2 * k, n);
  BigRational lower = 1;
  for (int i = 0; i < d; ++i) lower *= factor;
  lower *= BigRational(full);
  ScanEntry e = exact_entry(n, d, lower, BigRational(reduced));
  e.k = k;
  if (reduced > full) e.verdict = Verdict::violated;
  return e;
}

ScanEntry check_lemma_A3(int n, int d) {
  if (d < 1 || 2 * d > n) throw InvalidArgument("Lemma A3 requires 1 <= d <= n/2");
  const BigInt s = binom_sum(n, d);
  const BigRational bound =
      BigRational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(d))) *
      BigRational(n + 1 - d, n + 1 - 2 * d);
  return exact_entry(n, d, BigRational(s), bound);
}

ScanReport scan_lemma_A1(int n_max) {
  ScanReport r;
  r.case_id = "A1";
  r.grid = "1 <= d <= n <= " + std::to_string(n_max);
  const auto policy = PrecisionPolicy::from_environment();
  for (int n = 1; n <= n_max; ++n)
    for (int d = 1; d <= n; ++d) r.add(check_lemma_A1(n, d, policy));
  return r;
}

ScanReport scan_lemma_A2(int n_max) {
  ScanReport r;
  r.case_id = "A2";
  r.grid = "1 <= d <= n/2, n <= " + std::to_string(n_max) + ", 1 <= k <= n-d+1";
  std::size_t small_k_failures = 0;
  for (int n = 2; n <= n_max; ++n)
    for (int d = 1; 2 * d <= n; ++d)
      for (int k = 1; k <= n - d + 1; ++k) {
        ScanEntry e = check_lemma_A2(n, d, k);
        if (e.verdict != Verdict::holds && 2 * k <= n) ++small_k_failures;
        r.add(std::move(e));
      }
  r.notes.emplace_back("failures_with_k_le_n_over_2", std::to_string(small_k_failures));
  r.notes.emplace_back("failures_with_k_gt_n_over_2",
                       std::to_string(r.failures.size() - small_k_failures));
  return r;
}

ScanReport scan_lemma_A3(int n_max) {
  ScanReport r;
  r.case_id = "A3";
  r.grid = "1 <= d <= n/2, n <= " + std::to_string(n_max);
  for (int n = 2; n <= n_max; ++n)
    for (int d = 1; 2 * d <= n; ++d) r.add(check_lemma_A3(n, d));
  return r;
}

// ---------------------------------------------------------------------------
// Corollary upper bound, case by case

BigRational alpha_ratio() { return BigRational(30528, 10000); }

Interval case1_gap(const BigRational& x, mpfr_prec_t prec) {
  Interval xi = Interval::exact(x, prec);
  return log2(Interval::e(prec) * xi) - xi;
}

Crossing locate_case1_crossing(const BigRational& width) {
  const auto policy = PrecisionPolicy::from_environment();
  BigRational lo = 1;
  BigRational hi = 4;
  while (hi - lo > width) {
    const BigRational mid = (lo + hi) / 2;
    auto s = certify_positive([&](mpfr_prec_t p) { return case1_gap(mid, p); }, policy);
    if (s.verdict == Verdict::holds)
      lo = mid;
    else if (s.verdict == Verdict::violated)
      hi = mid;
    else
      throw std::runtime_error("crossing bisection undecided at maximum precision");
  }
  return {lo, hi};
}

namespace {

ScanEntry gap_entry(const std::string& label, const BigRational& x, bool expect_positive,
                    const PrecisionPolicy& policy) {
  auto s = certify_positive(
      [&](mpfr_prec_t p) { return expect_positive ? case1_gap(x, p) : -case1_gap(x, p); },
      policy, expect_positive);
  ScanEntry e;
  e.label = label;
  e.lhs = expect_positive ? "x" : "log2(e x)";
  e.rhs = expect_positive ? "log2(e x)" : "x";
  e.margin = s.margin_lo;
  e.precision = s.precision;
  e.verdict = s.verdict;
  return e;
}

// value(d) = a*d - 0.5*log2(d) - c evaluated at the rational d.
Interval linear_minus_log(const BigRational& a, const BigRational& c, const BigRational& d,
                          mpfr_prec_t prec) {
  Interval di = Interval::exact(d, prec);
  return Interval::exact(a, prec) * di - Interval::exact(BigRational(1, 2), prec) * log2(di) -
         Interval::exact(c, prec);
}

// Coefficient of d in the Case 2 inequality for a given ratio alpha.
Interval case2_slope(const BigRational& alpha, mpfr_prec_t prec) {
  Interval a = Interval::exact(alpha, prec);
  Interval one = Interval::exact(BigRational(1), prec);
  return log2(Interval::e(prec) * a) - one / (one - Interval::exact(BigRational(2), prec) / a);
}

void scan_linear_minus_log(ScanReport& r, const std::string& tag, const BigRational& slope,
                           const BigRational& constant, int first_hundredth, int last_hundredth,
                           const PrecisionPolicy& policy) {
  double min_margin = 0;
  std::string min_at;
  bool first = true;
  for (int j = first_hundredth; j <= last_hundredth; ++j) {
    const BigRational d(j, 100);
    auto s = certify_positive([&](mpfr_prec_t p) { return linear_minus_log(slope, constant, d, p); },
                              policy, true);
    ScanEntry e;
    e.label = tag + " d=" + approx(d);
    e.lhs = "0";
    e.rhs = tag;
    e.margin = s.margin_lo;
    e.precision = s.precision;
    e.verdict = s.verdict;
    if (first || e.margin < min_margin) {
      min_margin = e.margin;
      min_at = approx(d);
      first = false;
    }
    r.add(std::move(e));
  }
  std::ostringstream m;
  m.precision(6);
  m << min_margin;
  r.notes.emplace_back(tag + "_min_margin", m.str());
  r.notes.emplace_back(tag + "_min_margin_at_d", min_at);
}

// slope - 0.5 / (d0 ln 2) > 0 makes the function increasing on [d0, inf).
ScanEntry monotone_entry(const std::string& label, const BigRational& slope, const BigRational& d0,
                         const PrecisionPolicy& policy) {
  auto s = certify_positive(
      [&](mpfr_prec_t p) {
        return Interval::exact(slope, p) -
               Interval::exact(BigRational(1, 2), p) /
                   (Interval::exact(d0, p) * Interval::ln2(p));
      },
      policy);
  ScanEntry e;
  e.label = label;
  e.lhs = "0.5/(d ln 2)";
  e.rhs = approx(slope);
  e.margin = s.margin_lo;
  e.precision = s.precision;
  e.verdict = s.verdict;
  return e;
}

}  // namespace

ScanReport scan_case1_crossing() {
  const auto policy = PrecisionPolicy::from_environment();
  const BigRational alpha = alpha_ratio();
  ScanReport r;
  r.case_id = "1";
  r.grid = "log2(e x) >= x on [1, alpha]; integer pairs 8 <= n <= 258, n <= alpha d";

  // The gap is concave, so nonnegativity at both ends covers [1, alpha].
  r.add(gap_entry("x=1", BigRational(1), true, policy));
  r.add(gap_entry("x=alpha=3.0528", alpha, true, policy));
  r.add(gap_entry("x=3.06 (beyond crossing)", dec("3.06"), false, policy));

  Crossing c = locate_case1_crossing();
  ScanEntry loc;
  loc.label = "crossing localisation";
  loc.lhs = approx(c.lo);
  loc.rhs = approx(c.hi);
  loc.margin = approx_double(c.hi - alpha);
  loc.exact = true;
  // The root must not lie entirely below alpha; the certified gap at alpha pins it above.
  loc.verdict = (c.hi - c.lo <= BigRational(1, 10000) && alpha < c.hi) ? Verdict::holds
                                                                        : Verdict::violated;
  r.add(std::move(loc));
  r.notes.emplace_back("crossing_lo", approx(c.lo));
  r.notes.emplace_back("crossing_hi", approx(c.hi));
  r.notes.emplace_back("crossing_lo_exact", to_string(c.lo));
  r.notes.emplace_back("crossing_hi_exact", to_string(c.hi));
  {
    Interval g = case1_gap(alpha, 256);
    r.notes.emplace_back("gap_at_alpha_lo", g.lo_string(6));
    r.notes.emplace_back("gap_at_alpha_hi", g.hi_string(6));
  }

  // Direct check of n^{d+1}/d! > 2^n on the integer pairs of the case.
  for (int n = 8; n <= 258; ++n)
    for (int d = 1; d <= n; ++d) {
      if (BigRational(n) > alpha * d) continue;
      BigInt lhs = pow2(static_cast<unsigned long>(n)) * factorial(static_cast<unsigned>(d));
      BigInt rhs = ipow(BigInt(n), static_cast<unsigned>(d + 1));
      ScanEntry e;
      e.n = n;
      e.d = d;
      e.exact = true;
      e.lhs = "2^n";
      e.rhs = "n^(d+1)/d!";
      e.margin = approx_double(BigRational(rhs, factorial(static_cast<unsigned>(d))) -
                               BigRational(pow2(static_cast<unsigned long>(n))));
      e.verdict = lhs < rhs ? Verdict::holds : Verdict::violated;
      r.add(std::move(e));
    }
  return r;
}

ScanReport scan_case3() {
  const auto policy = PrecisionPolicy::from_environment();
  ScanReport r;
  r.case_id = "3";
  r.grid = "d in {1, 1.01, ..., 64}; Case 2 check on {36, 36.01, ..., 64}";
  const BigRational slope3 = dec("2.9598");
  const BigRational slope2 = dec("0.1528");
  const BigRational constant = dec("2.8854");

  // The stated constants are weaker than the exact ones.
  {
    auto s = certify_positive(
        [&](mpfr_prec_t p) {
          return case2_slope(BigRational(259, 35), p) - Interval::exact(slope3, p);
        },
        policy, true);
    ScanEntry e;
    e.label = "slope(alpha=259/35) >= 2.9598";
    e.margin = s.margin_lo;
    e.precision = s.precision;
    e.verdict = s.verdict;
    r.add(std::move(e));
  }
  {
    auto s = certify_positive(
        [&](mpfr_prec_t p) { return case2_slope(alpha_ratio(), p) - Interval::exact(slope2, p); },
        policy, true);
    ScanEntry e;
    e.label = "slope(alpha=3.0528) >= 0.1528";
    e.margin = s.margin_lo;
    e.precision = s.precision;
    e.verdict = s.verdict;
    r.add(std::move(e));
  }
  {
    auto s = certify_positive(
        [&](mpfr_prec_t p) {
          Interval two_log2e = Interval::exact(BigRational(2), p) *
                               log2(Interval::e(p));
          return Interval::exact(constant, p) - two_log2e;
        },
        policy, true);
    ScanEntry e;
    e.label = "2 log2(e) <= 2.8854";
    e.margin = s.margin_lo;
    e.precision = s.precision;
    e.verdict = s.verdict;
    r.add(std::move(e));
  }

  r.add(monotone_entry("case3 increasing for d >= 1", slope3, BigRational(1), policy));
  scan_linear_minus_log(r, "case3", slope3, constant, 100, 6400, policy);

  r.add(monotone_entry("case2 increasing for d >= 36", slope2, BigRational(36), policy));
  scan_linear_minus_log(r, "case2", slope2, constant, 3600, 6400, policy);
  return r;
}

ScanReport scan_case4() {
  const auto policy = PrecisionPolicy::from_environment();
  const BigRational alpha = alpha_ratio();
  ScanReport r;
  r.case_id = "4";
  r.grid = "8 <= n <= 258, 1 <= d <= 35, n > 3.0528 d";
  double min_rel = 0;
  bool first = true;
  std::string min_at;
  for (int n = 8; n <= 258; ++n) {
    const BigInt cube_minus_one = pow2(static_cast<unsigned long>(n)) - 1;
    for (int d = 1; d <= 35; ++d) {
      if (!(BigRational(n) > alpha * d)) continue;
      const BigInt m = binom_sum(n, d);
      const BigRational rhs(ipow(BigInt(n), static_cast<unsigned>(d + 1)),
                            factorial(static_cast<unsigned>(d)));
      auto t_of = [&](mpfr_prec_t p) {
        Interval mi = Interval::exact(m, p);
        return Interval::exact(BigRational(1), p) +
               mi * log2(Interval::e(p) * Interval::exact(cube_minus_one, p) / mi);
      };
      auto s = certify_positive([&](mpfr_prec_t p) { return Interval::exact(rhs, p) - t_of(p); },
                                policy, true);
      ScanEntry e;
      e.n = n;
      e.d = d;
      e.lhs = t_of(kRenderPrec).hi_string(12);
      e.rhs = approx(rhs);
      e.margin = s.margin_lo;
      e.precision = s.precision;
      e.verdict = s.verdict;
      const double rel = s.margin_lo / approx_double(rhs);
      if (first || rel < min_rel) {
        min_rel = rel;
        min_at = "n=" + std::to_string(n) + ",d=" + std::to_string(d);
        first = false;
      }
      r.add(std::move(e));
    }
  }
  std::ostringstream m;
  m.precision(6);
  m << min_rel;
  r.notes.emplace_back("min_relative_margin", m.str());
  r.notes.emplace_back("min_relative_margin_at", min_at);
  return r;
}

ScanReport scan_case5() {
  const auto policy = PrecisionPolicy::from_environment();
  ScanReport r;
  r.case_id = "5";
  r.grid = "2 <= n <= 7, 1 <= d <= n";
  for (int n = 2; n <= 7; ++n) {
    const BigInt cube_minus_one = pow2(static_cast<unsigned long>(n)) - 1;
    for (int d = 1; d <= n; ++d) {
      const BigInt m = binom_sum(n, d);
      const BigInt lhs = 2 * binomial_sum_clamped(cube_minus_one, static_cast<unsigned>(m));
      const BigRational q(ipow(BigInt(n), static_cast<unsigned>(d + 1)),
                          factorial(static_cast<unsigned>(d)));
      ScanEntry e;
      e.n = n;
      e.d = d;
      e.rhs = approx(q);
      if (denominator(q) == 1) {
        const BigInt power = pow2(static_cast<unsigned long>(numerator(q)));
        e.exact = true;
        e.verdict = lhs <= power ? Verdict::holds : Verdict::violated;
        Interval lg = log2(Interval::exact(lhs, kRenderPrec));
        e.lhs = lg.hi_string(12);
        e.margin = approx_double(q) - lg.hi_double();
      } else {
        auto s = certify_positive(
            [&](mpfr_prec_t p) { return Interval::exact(q, p) - log2(Interval::exact(lhs, p)); },
            policy, true);
        e.lhs = log2(Interval::exact(lhs, kRenderPrec)).hi_string(12);
        e.margin = s.margin_lo;
        e.precision = s.precision;
        e.verdict = s.verdict;
      }
      r.add(std::move(e));
    }
  }
  return r;
}

ScanReport run_scan(const std::string& case_id) {
  if (case_id == "1") return scan_case1_crossing();
  if (case_id == "3") return scan_case3();
  if (case_id == "4") return scan_case4();
  if (case_id == "5") return scan_case5();
  if (case_id == "A1") return scan_lemma_A1();
  if (case_id == "A2") return scan_lemma_A2();
  if (case_id == "A3") return scan_lemma_A3();
  throw InvalidArgument("unknown scan case: " + case_id);
}

// ---------------------------------------------------------------------------
// Closed-form bounds

const BoundValue* BoundReport::find(const std::string& name) const {
  for (const auto& v : values)
    if (v.name == name) return &v;
  return nullptr;
}

namespace {

constexpr unsigned long kMaxSharpTerms = 5000;

BoundValue log2_value(const std::string& name, const BigRational& value_log2, bool certified = true) {
  BoundValue v;
  v.name = name;
  v.exact = value_log2;
  Interval i = Interval::exact(value_log2, kRenderPrec);
  v.log2_lo = i.lo_string(15);
  v.log2_hi = i.hi_string(15);
  v.certified = certified;
  return v;
}

BoundValue interval_value(const std::string& name, const Interval& i, bool certified) {
  BoundValue v;
  v.name = name;
  v.log2_lo = i.lo_string(15);
  v.log2_hi = i.hi_string(15);
  v.certified = certified;
  return v;
}

}  // namespace

BoundReport main_theorem_bounds(int n, int d, std::optional<BigRational> C) {
  if (n <= 1 || d < 1 || d > n) throw InvalidArgument("bounds require n > 1 and 1 <= d <= n");
  if (C && *C <= 0) throw InvalidArgument("the constant C must be positive");
  BoundReport r;
  r.n = n;
  r.d = d;
  r.C = C;
  const BigInt m = binom_sum(n, d);
  const mpfr_prec_t prec = kRenderPrec;

  r.values.push_back(log2_value("theorem_upper", BigRational(BigInt(n) * m)));
  r.values.push_back(log2_value(
      "corollary_upper",
      BigRational(ipow(BigInt(n), static_cast<unsigned>(d + 1)), factorial(static_cast<unsigned>(d)))));
  r.values.push_back(log2_value("saks_lower", BigRational(binomial(static_cast<unsigned>(n),
                                                                   static_cast<unsigned>(d + 1)))));

  if (m - 1 <= kMaxSharpTerms) {
    const BigInt sharp =
        2 * binomial_sum_clamped(pow2(static_cast<unsigned long>(n)) - 1, static_cast<unsigned>(m - 1));
    BoundValue v = interval_value("sharp_upper", log2(Interval::exact(sharp, prec)), true);
    v.exact = BigRational(sharp);
    v.is_log2 = true;
    r.values.push_back(std::move(v));
  }

  if (C) {
    Interval factor = Interval::exact(BigRational(1), prec) -
                      Interval::exact(*C, prec) / log(Interval::exact(BigRational(n), prec));
    // (1 - C/log n)^d: odd powers keep the sign, so expand by multiplication.
    Interval p = Interval::exact(BigRational(1), prec);
    for (int i = 0; i < d; ++i) p = p * factor;
    r.values.push_back(interval_value("theorem_lower", p * Interval::exact(BigInt(n) * m, prec), false));
    r.values.push_back(interval_value(
        "corollary_lower",
        p * Interval::exact(BigRational(ipow(BigInt(n), static_cast<unsigned>(d + 1)),
                                        factorial(static_cast<unsigned>(d))),
                            prec),
        false));
  }

  if (d == 1) {
    Interval nn = Interval::exact(BigRational(n), prec);
    Interval sq = nn * nn;
    Interval zuev = (Interval::exact(BigRational(1), prec) -
                     Interval::exact(BigRational(10), prec) / log(nn)) * sq;
    r.values.push_back(interval_value("zuev_lower", zuev, false));
    r.values.push_back(interval_value("zuev_upper", sq, false));
    r.values.push_back(interval_value("kks_estimate", sq - nn * log2(nn), false));
  }
  return r;
}

}  // namespace ptf
