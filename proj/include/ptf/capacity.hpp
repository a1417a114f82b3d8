#pragma once

// Polynomial set capacity: the number of ways a finite point set can be split
// by sgn(p(x)) with deg p <= d, counted as regions of the arrangement of its
// lifted points.

#include <iosfwd>
#include <string>
#include <vector>

#include "ptf/interval.hpp"
#include "ptf/numeric.hpp"

namespace ptf {

inline constexpr std::size_t kMaxCapacityPoints = 20;
inline constexpr Index kMaxCapacityDimension = 12;

struct PointSet {
  Index n = 0;
  std::vector<RationalVector> points;

  /// Throws on an empty set, mixed dimensions or duplicate points.
  void validate() const;
  /// Every coordinate is +1 or -1.
  bool boolean() const;
};

/// One rational point per row, comma or whitespace separated; '#' starts a comment.
PointSet read_point_csv(std::istream& in);
PointSet read_point_csv_file(const std::string& path);

/// Exponent vectors of all monomials of degree <= d in n variables, graded and
/// then lexicographic in the sorted variable list (x1^2 < x1 x2 < x2^2).
std::vector<std::vector<int>> general_monomials(int n, int d);

/// All monomials of degree <= d in the entries of x, with repetition; length binom(n+d, d).
RationalVector general_lift(const RationalVector& x, int d);

struct CapacityReport {
  std::size_t points = 0;
  int d = 0;
  BigInt count;
  std::string capacity_lo;  // enclosure of log2(count)
  std::string capacity_hi;
  BigInt m;                 // binom(n+d, d)
  Index lifted_dimension = 0;
  bool boolean_reduced = false;

  BigInt affine_bound;      // 2 binom(|S|-1, <= m-1); the count form of 1 + log2 binom(...)
  std::string affine_bound_log2_lo;
  std::string affine_bound_log2_hi;
  std::string m_log2_size_lo;  // m log2 |S|
  std::string m_log2_size_hi;
  bool count_le_affine_bound = false;
  bool affine_bound_le_power = false;  // 2 binom(...) <= |S|^m when |S| >= 2
  bool lower_bound_holds = false;      // 2 |S| <= count when |S| >= 2
  Verdict m_vs_2en_over_d = Verdict::undecided;

  bool chain_holds() const { return count_le_affine_bound && affine_bound_le_power; }
};

/// Requires |S| <= 20 and an enumerated lift dimension <= 12. On point sets in
/// {-1,1}^n the square coordinates are constant and are dropped, leaving the
/// multilinear lift.
CapacityReport capacity_set(const PointSet& s, int d, unsigned threads = 1);

}  // namespace ptf
