#include "ptf/capacity.hpp"

#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "ptf/arrangements.hpp"
#include "ptf/cube_lift.hpp"

namespace ptf {

void PointSet::validate() const {
  if (points.empty()) throw InvalidArgument("point set is empty");
  if (n < 1) throw InvalidArgument("point dimension must be positive");
  std::set<std::vector<BigRational>> seen;
  for (const auto& p : points) {
    if (p.size() != n) throw DimensionMismatch("points of mixed dimension");
    std::vector<BigRational> key(p.data(), p.data() + p.size());
    if (!seen.insert(std::move(key)).second) throw InvalidArgument("point set contains a duplicate point");
  }
}

bool PointSet::boolean() const {
  for (const auto& p : points)
    for (Index j = 0; j < p.size(); ++j)
      if (p[j] != 1 && p[j] != -1) return false;
  return true;
}

PointSet read_point_csv(std::istream& in) {
  PointSet s;
  std::string line;
  while (std::getline(in, line)) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    for (char& c : line)
      if (c == ',' || c == ';' || c == '\t' || c == '\r') c = ' ';
    std::istringstream row(line);
    std::vector<BigRational> v;
    std::string tok;
    while (row >> tok) v.push_back(parse_rational(tok));
    if (v.empty()) continue;
    if (s.points.empty()) s.n = static_cast<Index>(v.size());
    RationalVector p(static_cast<Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) p[static_cast<Index>(i)] = v[i];
    s.points.push_back(std::move(p));
  }
  s.validate();
  return s;
}

PointSet read_point_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open point file: " + path);
  return read_point_csv(in);
}

std::vector<std::vector<int>> general_monomials(int n, int d) {
  if (n < 1 || d < 0) throw InvalidArgument("general_monomials needs n >= 1 and d >= 0");
  std::vector<std::vector<int>> out;
  for (int k = 0; k <= d; ++k) {
    // Non-decreasing variable lists of length k, in lexicographic order.
    std::vector<int> vars(static_cast<std::size_t>(k), 0);
    while (true) {
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      for (int v : vars) ++e[static_cast<std::size_t>(v)];
      out.push_back(std::move(e));
      int i = k - 1;
      while (i >= 0 && vars[static_cast<std::size_t>(i)] == n - 1) --i;
      if (i < 0) break;
      const int next = vars[static_cast<std::size_t>(i)] + 1;
      for (int j = i; j < k; ++j) vars[static_cast<std::size_t>(j)] = next;
    }
  }
  return out;
}

RationalVector general_lift(const RationalVector& x, int d) {
  if (d < 1) throw InvalidArgument("degree must be at least 1");
  const auto mons = general_monomials(static_cast<int>(x.size()), d);
  RationalVector out(static_cast<Index>(mons.size()));
  for (std::size_t k = 0; k < mons.size(); ++k) {
    BigRational v = 1;
    for (Index j = 0; j < x.size(); ++j)
      for (int e = 0; e < mons[k][static_cast<std::size_t>(j)]; ++e) v *= x[j];
    out[static_cast<Index>(k)] = v;
  }
  return out;
}

CapacityReport capacity_set(const PointSet& s, int d, unsigned threads) {
  s.validate();
  if (d < 1) throw InvalidArgument("degree must be at least 1");
  if (s.points.size() > kMaxCapacityPoints) throw ResourceLimit("capacity enumeration is limited to 20 points");
  CapacityReport r;
  r.points = s.points.size();
  r.d = d;
  const int n = static_cast<int>(s.n);
  r.m = binomial(static_cast<unsigned>(n + d), static_cast<unsigned>(d));
  r.boolean_reduced = s.boolean() && n <= kMaxCubeDimension;

  RationalMatrix lifted;
  if (r.boolean_reduced) {
    const int deg = std::min(d, n);
    std::vector<CubePoint> cube;
    for (const auto& p : s.points) {
      std::uint64_t bits = 0;
      for (Index j = 0; j < p.size(); ++j)
        if (p[j] == -1) bits |= std::uint64_t{1} << j;
      cube.emplace_back(n, bits);
    }
    const LiftMatrix l = lift_matrix(cube, deg);
    lifted = l.cast<BigRational>();
  } else {
    if (r.m > BigInt(kMaxCapacityDimension))
      throw ResourceLimit("capacity enumeration needs binom(n+d, d) <= 12");
    lifted.resize(static_cast<Index>(s.points.size()), static_cast<Index>(r.m));
    for (std::size_t i = 0; i < s.points.size(); ++i)
      lifted.row(static_cast<Index>(i)) = general_lift(s.points[i], d).transpose();
  }
  r.lifted_dimension = lifted.cols();
  if (r.lifted_dimension > kMaxCapacityDimension)
    throw ResourceLimit("capacity enumeration needs a lift dimension <= 12");

  RegionOptions opts;
  opts.threads = threads;
  r.count = count_regions(Arrangement::central(lifted), opts).region_count;

  const mpfr_prec_t prec = 128;
  Interval cap = log2(Interval::exact(r.count, prec));
  r.capacity_lo = cap.lo_string(15);
  r.capacity_hi = cap.hi_string(15);

  const BigInt size(static_cast<std::uint64_t>(s.points.size()));
  const BigInt half = binomial_sum_clamped(size - 1, static_cast<unsigned>(r.m - 1));
  r.affine_bound = 2 * half;
  Interval ab = log2(Interval::exact(r.affine_bound, prec));
  r.affine_bound_log2_lo = ab.lo_string(15);
  r.affine_bound_log2_hi = ab.hi_string(15);
  Interval mls = Interval::exact(r.m, prec) * log2(Interval::exact(size, prec));
  r.m_log2_size_lo = mls.lo_string(15);
  r.m_log2_size_hi = mls.hi_string(15);

  BigInt power;
  mpz_pow_ui(power.backend().data(), size.backend().data(), static_cast<unsigned long>(r.m));
  r.count_le_affine_bound = r.count <= r.affine_bound;
  r.affine_bound_le_power = s.points.size() < 2 || r.affine_bound <= power;
  r.lower_bound_holds = s.points.size() < 2 || 2 * size <= r.count;

  const BigRational ratio(BigInt(2 * n), BigInt(d));
  r.m_vs_2en_over_d = certify_positive(
                          [&](mpfr_prec_t p) {
                            return pow(Interval::e(p) * Interval::exact(ratio, p), static_cast<unsigned long>(d)) -
                                   Interval::exact(r.m, p);
                          },
                          PrecisionPolicy::from_environment(), true)
                          .verdict;
  return r;
}

}  // namespace ptf
