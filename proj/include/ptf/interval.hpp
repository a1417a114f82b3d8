#pragma once

// Closed intervals with MPFR endpoints and outward (directed) rounding. Every
// operation returns an interval that contains the exact result.

#include <functional>
#include <string>

#include <mpfr.h>

#include "ptf/numeric.hpp"

namespace ptf {

class Interval {
 public:
  explicit Interval(mpfr_prec_t prec);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval exact(const BigInt& x, mpfr_prec_t prec);
  static Interval exact(const BigRational& x, mpfr_prec_t prec);
  static Interval e(mpfr_prec_t prec);
  static Interval ln2(mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid_double() const;
  /// Decimal endpoints, rounded outward.
  std::string lo_string(int digits = 12) const;
  std::string hi_string(int digits = 12) const;

  bool positive() const { return mpfr_sgn(lo_) > 0; }
  bool negative() const { return mpfr_sgn(hi_) < 0; }
  bool nonnegative() const { return mpfr_sgn(lo_) >= 0; }
  bool contains(const BigRational& q) const;
  /// hi - lo, rounded up.
  double width() const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);

  friend Interval log(const Interval& x);
  friend Interval log2(const Interval& x);
  friend Interval exp(const Interval& x);
  /// x^k for x >= 0.
  friend Interval pow(const Interval& x, unsigned long k);

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

Interval operator+(const Interval& a, const BigRational& b);
Interval operator*(const BigRational& a, const Interval& b);

/// Outcome of comparing an interval-valued quantity against zero.
enum class Verdict { holds, violated, undecided };
const char* to_string(Verdict v);

struct CertifiedSign {
  Verdict verdict = Verdict::undecided;
  mpfr_prec_t precision = 0;
  double margin_lo = 0;
  double margin_hi = 0;
};

/// Precision limits for adaptive evaluation. The ceiling honours the
/// PTF_MAX_PRECISION_BITS environment variable (default 4096).
struct PrecisionPolicy {
  mpfr_prec_t start = 128;
  mpfr_prec_t max = 4096;
  static PrecisionPolicy from_environment();
};

/// Evaluates margin(prec) at doubling precision until it is certainly positive
/// (holds) or certainly negative (violated). With `allow_zero`, a nonnegative
/// lower endpoint also counts as holding.
CertifiedSign certify_positive(const std::function<Interval(mpfr_prec_t)>& margin,
                               const PrecisionPolicy& policy, bool allow_zero = false);

}  // namespace ptf
