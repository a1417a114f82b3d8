#include "ptf/linalg_exact.hpp"

#include <stdexcept>

#include "ptf/detail/margin_lp.hpp"

namespace ptf {

namespace detail {

IntegerMatrix integerize_rows(const RationalMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) out.row(i) = integerize(m.row(i).transpose()).transpose();
  return out;
}

namespace {

BigInt row_scale(const RationalVector& v) {
  BigInt l = 1;
  for (Index i = 0; i < v.size(); ++i) l = boost::multiprecision::lcm(l, denominator(v[i]));
  return l;
}

template <typename S>
FeasibilityResult run_margin_lp(const Matrix<S>& rows) {
  MarginLP<S> lp(rows);
  lp.solve();
  FeasibilityResult res;
  res.pivots = lp.pivots();
  const BigInt den = FractionFree<S>::to_big(lp.denominator());
  res.feasible = lp.feasible();
  res.margin = BigRational(FractionFree<S>::to_big(lp.margin()), den);
  auto w = lp.witness();
  res.witness.resize(rows.cols());
  for (Index j = 0; j < rows.cols(); ++j)
    res.witness[j] = BigRational(FractionFree<S>::to_big(w[static_cast<std::size_t>(j)]), den);
  if (!res.feasible) {
    auto y = lp.duals();
    BigInt total = 0;
    for (const auto& v : y) total += FractionFree<S>::to_big(v);
    res.certificate.resize(rows.rows());
    for (Index i = 0; i < rows.rows(); ++i)
      res.certificate[i] = BigRational(FractionFree<S>::to_big(y[static_cast<std::size_t>(i)]), total);
  }
  return res;
}

FeasibilityResult empty_problem(Index dimension) {
  FeasibilityResult res;
  res.feasible = true;
  res.witness = RationalVector::Constant(dimension, BigRational(0));
  res.margin = 1;
  return res;
}

}  // namespace
}  // namespace detail

std::optional<RationalVector> solve_in_span(const RationalMatrix& basis_rows,
                                            const RationalVector& target) {
  const Index r = basis_rows.rows();
  const Index c = basis_rows.cols();
  if (target.size() != c) throw DimensionMismatch("solve_in_span: target length differs from row length");
  if (r == 0) {
    for (Index j = 0; j < c; ++j)
      if (target[j] != 0) return std::nullopt;
    return RationalVector(0);
  }
  // One equation per coordinate: sum_k a_k B(k, j) = t_j.
  RationalMatrix aug(c, r + 1);
  aug.leftCols(r) = basis_rows.transpose();
  aug.col(r) = target;
  IntegerMatrix e = detail::integerize_rows(aug);
  std::vector<Index> pivots;
  const Index k = detail::bareiss_echelon(e, &pivots);
  if (!pivots.empty() && pivots.back() == r) return std::nullopt;

  RationalVector a = RationalVector::Constant(r, BigRational(0));
  for (Index i = k - 1; i >= 0; --i) {
    const Index pc = pivots[static_cast<std::size_t>(i)];
    BigRational acc(e(i, r));
    for (Index j = pc + 1; j < r; ++j)
      if (e(i, j) != 0) acc -= BigRational(e(i, j)) * a[j];
    a[pc] = acc / BigRational(e(i, pc));
  }
  return a;
}

RationalMatrix canonical_rref(const RationalMatrix& m) {
  RationalMatrix a = m;
  const Index rows = a.rows();
  const Index cols = a.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index piv = -1;
    for (Index i = r; i < rows; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    const BigRational p = a(r, c);
    for (Index j = c; j < cols; ++j) a(r, j) /= p;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const BigRational f = a(i, c);
      for (Index j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return a.topRows(r);
}

FeasibilityResult strict_feasible_rows(const Matrix<std::int64_t>& rows) {
  if (rows.rows() == 0) return detail::empty_problem(rows.cols());
  try {
    return detail::run_margin_lp(rows);
  } catch (const detail::Overflow&) {
    IntegerMatrix big = rows.cast<BigInt>();
    return detail::run_margin_lp(big);
  }
}

FeasibilityResult strict_feasible_rows(const IntegerMatrix& rows) {
  if (rows.rows() == 0) return detail::empty_problem(rows.cols());
  try {
    Matrix<std::int64_t> small(rows.rows(), rows.cols());
    for (Index i = 0; i < rows.rows(); ++i)
      for (Index j = 0; j < rows.cols(); ++j)
        small(i, j) = detail::FractionFree<std::int64_t>::from(rows(i, j));
    return detail::run_margin_lp(small);
  } catch (const detail::Overflow&) {
    return detail::run_margin_lp(rows);
  }
}

FeasibilityResult strict_feasible(std::span<const SignConstraint> constraints, Index dimension) {
  if (constraints.empty()) return detail::empty_problem(dimension);
  const Index m = constraints.front().normal.size();
  IntegerMatrix rows(static_cast<Index>(constraints.size()), m);
  std::vector<BigInt> scales;
  scales.reserve(constraints.size());
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const auto& con = constraints[i];
    if (con.normal.size() != m) throw DimensionMismatch("constraints of mixed dimension");
    if (con.sign != 1 && con.sign != -1) throw InvalidArgument("required sign must be +1 or -1");
    bool zero = true;
    for (Index j = 0; j < m; ++j) zero = zero && con.normal[j] == 0;
    if (zero) throw InvalidArgument("strict_feasible: zero normal vector");
    scales.push_back(detail::row_scale(con.normal));
    IntegerVector g = integerize(con.normal);
    rows.row(static_cast<Index>(i)) = (con.sign > 0 ? g : IntegerVector(-g)).transpose();
  }
  FeasibilityResult res = strict_feasible_rows(rows);
  if (!res.feasible) {
    // Certificate was computed for the scaled rows; map it back to the given normals.
    BigRational total = 0;
    for (Index i = 0; i < res.certificate.size(); ++i) {
      res.certificate[i] *= BigRational(scales[static_cast<std::size_t>(i)]);
      total += res.certificate[i];
    }
    for (Index i = 0; i < res.certificate.size(); ++i) res.certificate[i] /= total;
  }
  return res;
}

namespace {

template <typename RowFn>
bool verify_impl(const FeasibilityResult& result, Index count, Index dim, RowFn row_value) {
  if (result.feasible) {
    if (result.witness.size() != dim) return false;
    for (Index i = 0; i < count; ++i) {
      BigRational s = 0;
      for (Index j = 0; j < dim; ++j) s += row_value(i, j) * result.witness[j];
      if (s <= 0) return false;
    }
    return true;
  }
  if (result.certificate.size() != count) return false;
  BigRational total = 0;
  for (Index i = 0; i < count; ++i) {
    if (result.certificate[i] < 0) return false;
    total += result.certificate[i];
  }
  if (total <= 0) return false;
  for (Index j = 0; j < dim; ++j) {
    BigRational s = 0;
    for (Index i = 0; i < count; ++i) s += result.certificate[i] * row_value(i, j);
    if (s != 0) return false;
  }
  return true;
}

}  // namespace

bool verify_feasibility(const FeasibilityResult& result,
                        std::span<const SignConstraint> constraints) {
  const Index count = static_cast<Index>(constraints.size());
  const Index dim = count ? constraints.front().normal.size() : result.witness.size();
  return verify_impl(result, count, dim, [&](Index i, Index j) {
    const auto& c = constraints[static_cast<std::size_t>(i)];
    return c.sign > 0 ? c.normal[j] : BigRational(-c.normal[j]);
  });
}

bool verify_feasibility_rows(const FeasibilityResult& result, const IntegerMatrix& rows) {
  return verify_impl(result, rows.rows(), rows.cols(),
                     [&](Index i, Index j) { return BigRational(rows(i, j)); });
}

}  // namespace ptf
