#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ptf/numeric.hpp"

namespace ptf {

inline constexpr int kMaxCubeDimension = 62;
inline constexpr int kMaxEnumerationDimension = 24;

/// A vertex of {-1,1}^n. Bit i set means coordinate i+1 equals -1.
class CubePoint {
 public:
  CubePoint(int n, std::uint64_t bits);
  static CubePoint from_signs(std::span<const int> signs);

  int dimension() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  /// Coordinate i (zero-based) as +1 or -1.
  int operator[](int i) const { return (bits_ >> i) & 1U ? -1 : 1; }
  std::vector<int> signs() const;

  friend bool operator==(const CubePoint&, const CubePoint&) = default;
  friend auto operator<=>(const CubePoint&, const CubePoint&) = default;

 private:
  int n_;
  std::uint64_t bits_;
};

std::ostream& operator<<(std::ostream& os, const CubePoint& x);

/// An index set I of size <= d, stored as a bit mask over {1..n}.
struct MonomialIndex {
  std::uint64_t mask = 0;

  int degree() const;
  /// Sorted one-based elements of I.
  std::vector<int> elements() const;
  /// "{}", "{1}", "{1,3}".
  std::string to_string() const;
  static MonomialIndex parse(std::string_view text);

  friend bool operator==(const MonomialIndex&, const MonomialIndex&) = default;
};

/// Graded-lex comparison: by |I|, then lexicographically by sorted elements.
bool monomial_less(const MonomialIndex& a, const MonomialIndex& b);

/// All index sets of size <= d in canonical order; the length is binom(n, <= d).
std::vector<MonomialIndex> monomial_indices(int n, int d);

/// Number of monomials of degree <= d, i.e. binom(n, <= d), as a machine integer.
Index lift_dimension(int n, int d);

using LiftedVector = Eigen::Matrix<int, Eigen::Dynamic, 1>;
using LiftMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// The d-th power x^{<=d}: one +-1 coordinate per monomial, in canonical order.
LiftedVector lift(const CubePoint& x, int d);

/// All 2^n points in ascending bit order.
std::vector<CubePoint> enumerate_cube(int n);

/// Row k is lift(points[k], d).
LiftMatrix lift_matrix(std::span<const CubePoint> points, int d);

/// CSV with a header of index sets and one row per point.
void write_lift_csv(std::ostream& os, const LiftMatrix& m, int n, int d);

}  // namespace ptf
