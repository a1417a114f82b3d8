#include "ptf/numeric.hpp"

#include <algorithm>
#include <cctype>

namespace ptf {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.backend().data(), n, k);
  return r;
}

BigInt binomial_sum_clamped(const BigInt& n, unsigned d) {
  if (n < 0) throw InvalidArgument("binomial sum needs n >= 0");
  // Pascal-row recurrence over k keeps this exact for huge n.
  BigInt term = 1;
  BigInt sum = 1;
  for (unsigned k = 1; k <= d; ++k) {
    if (n < k) break;
    term = term * (n - (k - 1)) / k;
    sum += term;
  }
  return sum;
}

BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.backend().data(), 2, e);
  return r;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.backend().data(), n);
  return r;
}

BigRational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw InvalidArgument("empty rational");
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(i), t.end(),
                       [](unsigned char c) { return std::isdigit(c); });
  };
  auto as_int = [&](std::string t) {
    if (!valid_int(t)) throw InvalidArgument("malformed rational: " + std::string(text));
    if (t[0] == '+') t.erase(0, 1);
    return BigInt(t);
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    BigInt den = as_int(s.substr(slash + 1));
    if (den == 0) throw InvalidArgument("zero denominator: " + std::string(text));
    return BigRational(as_int(s.substr(0, slash)), den);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    if (frac.empty()) frac = "0";
    if (!std::all_of(frac.begin(), frac.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw InvalidArgument("malformed rational: " + std::string(text));
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt w = as_int(whole);
    BigInt f(frac);
    BigInt num = (w < 0 || negative) ? w * scale - f : w * scale + f;
    return BigRational(num, scale);
  }
  return BigRational(as_int(s));
}

std::string to_string(const BigInt& x) { return x.str(); }
std::string to_string(const BigRational& x) { return x.str(); }

IntegerVector integerize(const RationalVector& v) {
  BigInt l = 1;
  for (Index i = 0; i < v.size(); ++i) l = boost::multiprecision::lcm(l, denominator(v[i]));
  IntegerVector out(v.size());
  for (Index i = 0; i < v.size(); ++i) out[i] = numerator(v[i]) * (l / denominator(v[i]));
  return out;
}

}  // namespace ptf
