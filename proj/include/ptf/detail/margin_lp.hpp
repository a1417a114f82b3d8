#pragma once

// Exact margin LP behind strict feasibility:
//
//   maximise  eps   subject to   g_i . a - eps >= 0   (one row per constraint)
//                                -1 <= a_j <= 1,  eps >= 0,  a free.
//
// Dense dictionary with integer entries over a common positive denominator
// (Edmonds / lrs style integer pivoting). The origin is feasible, so there is
// no phase 1: free variables are pivoted into the basis first and never leave,
// then Bland's lowest-index rule runs on the remaining standard-form problem.
// The solve stops as soon as the basic solution has eps > 0.

#include <stdexcept>
#include <vector>

#include "ptf/detail/checked.hpp"

namespace ptf::detail {

template <typename S>
class MarginLP {
 public:
  using Ops = FractionFree<S>;

  // rows: p x m; every row g must end up with g . a > 0.
  template <typename Derived>
  explicit MarginLP(const Eigen::MatrixBase<Derived>& rows)
      : p_(rows.rows()), m_(rows.cols()), rows_(p_ + 2 * m_), cols_(m_ + 1),
        t_(rows_ + 1, cols_ + 1), basis_(static_cast<std::size_t>(rows_ + 1)),
        nonbasis_(static_cast<std::size_t>(cols_)) {
    t_.setConstant(S(0));
    for (Index i = 0; i < p_; ++i) {
      for (Index j = 0; j < m_; ++j) t_(i + 1, j) = -Ops::from(rows(i, j));
      t_(i + 1, m_) = S(1);
    }
    for (Index j = 0; j < m_; ++j) {
      t_(p_ + 1 + j, j) = S(1);
      t_(p_ + 1 + j, cols_) = S(1);
      t_(p_ + m_ + 1 + j, j) = S(-1);
      t_(p_ + m_ + 1 + j, cols_) = S(1);
    }
    t_(0, m_) = S(-1);
    for (Index j = 0; j < cols_; ++j) nonbasis_[static_cast<std::size_t>(j)] = j;
    for (Index i = 1; i <= rows_; ++i) basis_[static_cast<std::size_t>(i)] = m_ + i;
  }

  void solve() {
    // Free variables enter first; each has a blocking row thanks to the box rows.
    for (Index var = 0; var < m_; ++var) {
      Index s = column_of(var);
      Index r = ratio_test(s, +1);
      if (r < 0) r = ratio_test(s, -1);
      if (r < 0) throw std::logic_error("margin LP: free variable without blocking row");
      pivot(r, s);
    }
    while (t_(0, cols_) <= S(0)) {
      Index s = -1;
      Index best_var = -1;
      for (Index j = 0; j < cols_; ++j) {
        Index var = nonbasis_[static_cast<std::size_t>(j)];
        if (t_(0, j) < S(0) && (s < 0 || var < best_var)) {
          s = j;
          best_var = var;
        }
      }
      if (s < 0) break;  // optimal with eps = 0
      Index r = ratio_test(s, +1);
      if (r < 0) throw std::logic_error("margin LP reported unbounded");
      pivot(r, s);
    }
  }

  bool feasible() const { return t_(0, cols_) > S(0); }
  const S& denominator() const { return den_; }
  // Margin numerator over denominator().
  const S& margin() const { return t_(0, cols_); }

  // Witness numerators over denominator(); all free variables are basic after solve().
  std::vector<S> witness() const {
    std::vector<S> a(static_cast<std::size_t>(m_), S(0));
    for (Index i = 1; i <= rows_; ++i) {
      Index var = basis_[static_cast<std::size_t>(i)];
      if (var < m_) a[static_cast<std::size_t>(var)] = t_(i, cols_);
    }
    return a;
  }

  // Dual multipliers of the constraint rows (numerators over denominator()).
  std::vector<S> duals() const {
    std::vector<S> y(static_cast<std::size_t>(p_), S(0));
    for (Index j = 0; j < cols_; ++j) {
      Index var = nonbasis_[static_cast<std::size_t>(j)];
      if (var > m_ && var <= m_ + p_) y[static_cast<std::size_t>(var - m_ - 1)] = t_(0, j);
    }
    return y;
  }

  int pivots() const { return pivots_; }

 private:
  bool is_free(Index var) const { return var < m_; }

  Index column_of(Index var) const {
    for (Index j = 0; j < cols_; ++j)
      if (nonbasis_[static_cast<std::size_t>(j)] == var) return j;
    throw std::logic_error("margin LP: variable is not nonbasic");
  }

  // Row leaving when column s moves in direction dir; -1 if unblocked.
  Index ratio_test(Index s, int dir) const {
    Index best = -1;
    for (Index i = 1; i <= rows_; ++i) {
      if (is_free(basis_[static_cast<std::size_t>(i)])) continue;
      const S& a = t_(i, s);
      if (dir > 0 ? !(a > S(0)) : !(a < S(0))) continue;
      if (best < 0) {
        best = i;
        continue;
      }
      // rhs_i / |a_i| versus rhs_best / |a_best|
      S ai = dir > 0 ? a : S(-a);
      S ab = dir > 0 ? t_(best, s) : S(-t_(best, s));
      int c = Ops::cross_sign(t_(i, cols_), ab, t_(best, cols_), ai);
      if (c < 0 || (c == 0 && basis_[static_cast<std::size_t>(i)] <
                                  basis_[static_cast<std::size_t>(best)]))
        best = i;
    }
    return best;
  }

  void pivot(Index r, Index s) {
    const S p = t_(r, s);
    const S old = den_;
    for (Index i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      const S f = t_(i, s);
      if (f == S(0)) {
        // (p*x - 0)/old
        for (Index j = 0; j <= cols_; ++j)
          if (j != s) t_(i, j) = Ops::update(p, t_(i, j), S(0), S(0), old);
      } else {
        for (Index j = 0; j <= cols_; ++j)
          if (j != s) t_(i, j) = Ops::update(p, t_(i, j), f, t_(r, j), old);
      }
      t_(i, s) = -f;
    }
    t_(r, s) = old;
    den_ = p;
    std::swap(basis_[static_cast<std::size_t>(r)], nonbasis_[static_cast<std::size_t>(s)]);
    if (den_ < S(0)) {
      t_ = -t_;
      den_ = -den_;
    }
    ++pivots_;
  }

  Index p_, m_, rows_, cols_;
  Matrix<S> t_;
  S den_ = S(1);
  std::vector<Index> basis_;
  std::vector<Index> nonbasis_;
  int pivots_ = 0;
};

}  // namespace ptf::detail
