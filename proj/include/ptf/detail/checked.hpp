#pragma once

// Scalar kernels for fraction-free elimination. The int64 specialisation works in
// 128-bit intermediates and throws Overflow once an entry leaves (-2^62, 2^62);
// callers then redo the computation over BigInt.

#include <cstdint>
#include <type_traits>

#include "ptf/numeric.hpp"

namespace ptf::detail {

struct Overflow {};

template <typename S>
struct FractionFree;

template <>
struct FractionFree<std::int64_t> {
  static constexpr __int128 kLimit = static_cast<__int128>(1) << 62;

  static std::int64_t checked(__int128 v) {
    if (v >= kLimit || v <= -kLimit) throw Overflow{};
    return static_cast<std::int64_t>(v);
  }
  // (p*a - b*c) / den, exact by construction.
  static std::int64_t update(std::int64_t p, std::int64_t a, std::int64_t b, std::int64_t c,
                             std::int64_t den) {
    __int128 v = static_cast<__int128>(p) * a - static_cast<__int128>(b) * c;
    return checked(v / den);
  }
  // Sign of a*b - c*d.
  static int cross_sign(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    __int128 v = static_cast<__int128>(a) * b - static_cast<__int128>(c) * d;
    return (v > 0) - (v < 0);
  }
  template <typename T>
  static std::int64_t from(const T& x) {
    if constexpr (std::is_integral_v<T>) {
      return checked(static_cast<__int128>(x));
    } else {
      if (x >= BigInt(static_cast<std::int64_t>(kLimit)) || x <= -BigInt(static_cast<std::int64_t>(kLimit)))
        throw Overflow{};
      return static_cast<std::int64_t>(x);
    }
  }
  static BigInt to_big(std::int64_t x) { return BigInt(x); }
};

template <>
struct FractionFree<BigInt> {
  static BigInt update(const BigInt& p, const BigInt& a, const BigInt& b, const BigInt& c,
                       const BigInt& den) {
    BigInt v = p * a - b * c;
    mpz_divexact(v.backend().data(), v.backend().data(), den.backend().data());
    return v;
  }
  static int cross_sign(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) {
    return (a * b - c * d).sign();
  }
  template <typename T>
  static BigInt from(const T& x) {
    return BigInt(x);
  }
  static BigInt to_big(const BigInt& x) { return x; }
};

}  // namespace ptf::detail
