#pragma once

// Exact scalar types shared by every module, plus the Eigen aliases built on them.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace ptf {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using BigRational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                                  boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<BigRational>;
using RationalVector = Vector<BigRational>;
using IntegerMatrix = Matrix<BigInt>;
using IntegerVector = Vector<BigInt>;

// Errors. The CLI maps these onto exit codes.
struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DimensionMismatch : InvalidArgument {
  using InvalidArgument::InvalidArgument;
};
struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline BigInt numerator(const BigRational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const BigRational& q) { return boost::multiprecision::denominator(q); }

inline int sign(const BigInt& x) { return x.sign(); }
inline int sign(const BigRational& x) { return x.sign(); }
inline int sign(std::int64_t x) { return (x > 0) - (x < 0); }

BigInt binomial(unsigned n, unsigned k);
// binom(n, <= d) = binom(n,0) + ... + binom(n,d); terms with i > n vanish.
BigInt binomial_sum_clamped(const BigInt& n, unsigned d);
BigInt pow2(unsigned long e);
BigInt factorial(unsigned n);

// "3", "-7/4", "0.25" are all accepted.
BigRational parse_rational(std::string_view text);
std::string to_string(const BigInt& x);
std::string to_string(const BigRational& x);

// Scale a rational vector by the positive lcm of its denominators.
IntegerVector integerize(const RationalVector& v);

}  // namespace ptf
