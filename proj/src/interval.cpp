#include "ptf/interval.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace ptf {

Interval::Interval(mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) {
  mpfr_init2(lo_, other.precision());
  mpfr_init2(hi_, other.precision());
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other.precision()) {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, other.precision());
    mpfr_set_prec(hi_, other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::exact(const BigInt& x, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_z(r.lo_, x.backend().data(), MPFR_RNDD);
  mpfr_set_z(r.hi_, x.backend().data(), MPFR_RNDU);
  return r;
}

Interval Interval::exact(const BigRational& x, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_, x.backend().data(), MPFR_RNDD);
  mpfr_set_q(r.hi_, x.backend().data(), MPFR_RNDU);
  return r;
}

Interval Interval::e(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_t one;
  mpfr_init2(one, prec);
  mpfr_set_ui(one, 1, MPFR_RNDN);
  mpfr_exp(r.lo_, one, MPFR_RNDD);
  mpfr_exp(r.hi_, one, MPFR_RNDU);
  mpfr_clear(one);
  return r;
}

Interval Interval::ln2(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_log2(r.lo_, MPFR_RNDD);
  mpfr_const_log2(r.hi_, MPFR_RNDU);
  return r;
}

double Interval::mid_double() const { return 0.5 * (lo_double() + hi_double()); }

namespace {

std::string format(mpfr_srcptr x, mpfr_rnd_t rnd, int digits) {
  char* buf = nullptr;
  std::string fmt = "%." + std::to_string(digits) + "R" + (rnd == MPFR_RNDD ? "D" : "U") + "g";
  mpfr_asprintf(&buf, fmt.c_str(), x);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

mpfr_prec_t common(const Interval& a, const Interval& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

std::string Interval::lo_string(int digits) const { return format(lo_, MPFR_RNDD, digits); }
std::string Interval::hi_string(int digits) const { return format(hi_, MPFR_RNDU, digits); }

bool Interval::contains(const BigRational& q) const {
  return mpfr_cmp_q(lo_, q.backend().data()) <= 0 && mpfr_cmp_q(hi_, q.backend().data()) >= 0;
}

double Interval::width() const {
  mpfr_t w;
  mpfr_init2(w, precision());
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double r = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(common(a, b));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(common(a, b));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a) {
  Interval r(a.precision());
  mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  const mpfr_prec_t prec = common(a, b);
  Interval r(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  bool first = true;
  for (mpfr_srcptr x : {a.lo_, a.hi_})
    for (mpfr_srcptr y : {b.lo_, b.hi_}) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0)
    throw InvalidArgument("interval division by an interval containing zero");
  const mpfr_prec_t prec = common(a, b);
  Interval r(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  bool first = true;
  for (mpfr_srcptr x : {a.lo_, a.hi_})
    for (mpfr_srcptr y : {b.lo_, b.hi_}) {
      mpfr_div(t, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_div(t, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

Interval log(const Interval& x) {
  if (mpfr_sgn(x.lo_) <= 0) throw InvalidArgument("log of an interval reaching zero");
  Interval r(x.precision());
  mpfr_log(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval log2(const Interval& x) {
  if (mpfr_sgn(x.lo_) <= 0) throw InvalidArgument("log2 of an interval reaching zero");
  Interval r(x.precision());
  mpfr_log2(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_log2(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval exp(const Interval& x) {
  Interval r(x.precision());
  mpfr_exp(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval pow(const Interval& x, unsigned long k) {
  if (mpfr_sgn(x.lo_) < 0) throw InvalidArgument("pow expects a nonnegative interval");
  Interval r(x.precision());
  mpfr_pow_ui(r.lo_, x.lo_, k, MPFR_RNDD);
  mpfr_pow_ui(r.hi_, x.hi_, k, MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const BigRational& b) {
  return a + Interval::exact(b, a.precision());
}

Interval operator*(const BigRational& a, const Interval& b) {
  return Interval::exact(a, b.precision()) * b;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::violated:
      return "violated";
    case Verdict::undecided:
      return "undecided";
  }
  return "undecided";
}

PrecisionPolicy PrecisionPolicy::from_environment() {
  PrecisionPolicy p;
  if (const char* env = std::getenv("PTF_MAX_PRECISION_BITS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 64) p.max = static_cast<mpfr_prec_t>(v);
  }
  p.start = std::min(p.start, p.max);
  return p;
}

CertifiedSign certify_positive(const std::function<Interval(mpfr_prec_t)>& margin,
                               const PrecisionPolicy& policy, bool allow_zero) {
  CertifiedSign out;
  for (mpfr_prec_t prec = policy.start; prec <= policy.max; prec *= 2) {
    Interval m = margin(prec);
    out.precision = prec;
    out.margin_lo = m.lo_double();
    out.margin_hi = m.hi_double();
    if (m.positive() || (allow_zero && m.nonnegative())) {
      out.verdict = Verdict::holds;
      return out;
    }
    if (m.negative()) {
      out.verdict = Verdict::violated;
      return out;
    }
  }
  out.verdict = Verdict::undecided;
  return out;
}

}  // namespace ptf
