#pragma once

// Exact linear algebra over the rationals: rank, span membership, canonical
// row-echelon forms and strict linear feasibility. No floating point anywhere.

#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include "ptf/detail/checked.hpp"
#include "ptf/numeric.hpp"

namespace ptf {

namespace detail {

// In-place fraction-free (Bareiss) forward elimination. Returns the rank and
// leaves the pivot columns in `pivots`.
template <typename S>
Index bareiss_echelon(Matrix<S>& a, std::vector<Index>* pivots = nullptr) {
  using Ops = FractionFree<S>;
  const Index rows = a.rows();
  const Index cols = a.cols();
  S prev(1);
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index piv = -1;
    for (Index i = r; i < rows; ++i)
      if (a(i, c) != S(0)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    const S p = a(r, c);
    for (Index i = r + 1; i < rows; ++i) {
      const S f = a(i, c);
      for (Index j = c + 1; j < cols; ++j) a(i, j) = Ops::update(p, a(i, j), f, a(r, j), prev);
      a(i, c) = S(0);
    }
    prev = p;
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

template <typename Derived>
constexpr bool is_machine_integer_v = std::is_integral_v<typename Derived::Scalar>;

IntegerMatrix integerize_rows(const RationalMatrix& m);

template <typename Derived>
IntegerMatrix to_integer_matrix(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if constexpr (std::is_same_v<Scalar, BigRational>) {
    return integerize_rows(m.eval());
  } else {
    IntegerMatrix out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j) out(i, j) = BigInt(m(i, j));
    return out;
  }
}

}  // namespace detail

/// Exact rank over Q. Integer input runs in checked 64-bit arithmetic and
/// falls back to GMP on overflow; rational input is scaled row-wise first.
template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if constexpr (detail::is_machine_integer_v<Derived>) {
    try {
      Matrix<std::int64_t> a = m.template cast<std::int64_t>();
      return detail::bareiss_echelon(a);
    } catch (const detail::Overflow&) {
    }
  }
  IntegerMatrix a = detail::to_integer_matrix(m);
  if constexpr (!detail::is_machine_integer_v<Derived>) {
    try {
      Matrix<std::int64_t> small(a.rows(), a.cols());
      for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
          small(i, j) = detail::FractionFree<std::int64_t>::from(a(i, j));
      return detail::bareiss_echelon(small);
    } catch (const detail::Overflow&) {
    }
  }
  return detail::bareiss_echelon(a);
}

/// Coefficients a with sum_k a_k * basis_rows.row(k) == target, or nullopt when
/// target is outside the row span. Free coefficients are set to zero.
std::optional<RationalVector> solve_in_span(const RationalMatrix& basis_rows,
                                            const RationalVector& target);

/// Nonzero rows of the reduced row-echelon form; equal row spaces give equal results.
RationalMatrix canonical_rref(const RationalMatrix& m);

template <typename Derived>
RationalMatrix to_rational(const Eigen::MatrixBase<Derived>& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = BigRational(m(i, j));
  return out;
}

// ---------------------------------------------------------------------------
// Strict feasibility

struct SignConstraint {
  RationalVector normal;
  int sign = +1;  // required sign of <a, normal>: +1 or -1
};

struct FeasibilityResult {
  bool feasible = false;
  /// Strictly satisfies every constraint when feasible.
  RationalVector witness;
  /// When infeasible: y >= 0, sum y = 1, sum_i y_i * sign_i * normal_i = 0.
  RationalVector certificate;
  /// Margin reached by the witness under the box |a_j| <= 1.
  BigRational margin;
  int pivots = 0;
};

/// Decide whether some a satisfies sign(<a, normal_i>) = sign_i for all i.
/// `dimension` is only consulted when the constraint list is empty.
FeasibilityResult strict_feasible(std::span<const SignConstraint> constraints,
                                  Index dimension = 0);

/// Same problem with the signs already folded in: every row g needs g . a > 0.
FeasibilityResult strict_feasible_rows(const Matrix<std::int64_t>& rows);
FeasibilityResult strict_feasible_rows(const IntegerMatrix& rows);

/// Checks a witness or certificate by exact substitution.
bool verify_feasibility(const FeasibilityResult& result,
                        std::span<const SignConstraint> constraints);
bool verify_feasibility_rows(const FeasibilityResult& result, const IntegerMatrix& rows);

}  // namespace ptf
