#include "ptf/cube_lift.hpp"

#include <bit>
#include <ostream>

namespace ptf {

CubePoint::CubePoint(int n, std::uint64_t bits) : n_(n), bits_(bits) {
  if (n < 1 || n > kMaxCubeDimension)
    throw InvalidArgument("cube dimension must lie in [1, 62]");
  if (bits >> n != 0) throw InvalidArgument("cube point has bits beyond its dimension");
}

CubePoint CubePoint::from_signs(std::span<const int> signs) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] == -1)
      bits |= std::uint64_t{1} << i;
    else if (signs[i] != 1)
      throw InvalidArgument("cube coordinates must be +1 or -1");
  }
  return CubePoint(static_cast<int>(signs.size()), bits);
}

std::vector<int> CubePoint::signs() const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = (*this)[i];
  return out;
}

std::ostream& operator<<(std::ostream& os, const CubePoint& x) {
  os << '(';
  for (int i = 0; i < x.dimension(); ++i) os << (i ? "," : "") << x[i];
  return os << ')';
}

int MonomialIndex::degree() const { return std::popcount(mask); }

std::vector<int> MonomialIndex::elements() const {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i)
    if ((mask >> i) & 1U) out.push_back(i + 1);
  return out;
}

std::string MonomialIndex::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) s += ',';
    s += std::to_string(e);
    first = false;
  }
  return s + '}';
}

MonomialIndex MonomialIndex::parse(std::string_view text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw InvalidArgument("malformed index set: " + std::string(text));
  MonomialIndex idx;
  std::string_view body = text.substr(1, text.size() - 2);
  int prev = 0;
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string item(body.substr(0, comma));
    int e = std::stoi(item);
    if (e <= prev || e > 64) throw InvalidArgument("index set must be sorted and in [1, 64]");
    idx.mask |= std::uint64_t{1} << (e - 1);
    prev = e;
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
  }
  return idx;
}

bool monomial_less(const MonomialIndex& a, const MonomialIndex& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.elements() < b.elements();
}

std::vector<MonomialIndex> monomial_indices(int n, int d) {
  if (n < 1 || n > kMaxCubeDimension) throw InvalidArgument("dimension out of range");
  if (d < 0 || d > n) throw InvalidArgument("invalid degree");
  std::vector<MonomialIndex> out;
  std::vector<int> comb;
  for (int k = 0; k <= d; ++k) {
    // Lexicographic k-combinations of {0..n-1}.
    comb.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;
    while (true) {
      MonomialIndex idx;
      for (int c : comb) idx.mask |= std::uint64_t{1} << c;
      out.push_back(idx);
      int i = k - 1;
      while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++comb[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

Index lift_dimension(int n, int d) {
  return static_cast<Index>(binomial_sum_clamped(BigInt(n), static_cast<unsigned>(d)));
}

namespace {

void check_degree(int n, int d) {
  if (d < 1 || d > n) throw InvalidArgument("invalid degree: need 1 <= d <= n");
}

}  // namespace

LiftedVector lift(const CubePoint& x, int d) {
  check_degree(x.dimension(), d);
  auto idx = monomial_indices(x.dimension(), d);
  LiftedVector v(static_cast<Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k)
    v[static_cast<Index>(k)] = std::popcount(x.bits() & idx[k].mask) & 1 ? -1 : 1;
  return v;
}

std::vector<CubePoint> enumerate_cube(int n) {
  if (n < 1 || n > kMaxEnumerationDimension)
    throw ResourceLimit("full cube enumeration is limited to 1 <= n <= 24");
  std::vector<CubePoint> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) out.emplace_back(n, b);
  return out;
}

LiftMatrix lift_matrix(std::span<const CubePoint> points, int d) {
  if (points.empty()) throw InvalidArgument("lift_matrix needs at least one point");
  const int n = points.front().dimension();
  check_degree(n, d);
  auto idx = monomial_indices(n, d);
  LiftMatrix m(static_cast<Index>(points.size()), static_cast<Index>(idx.size()));
  for (std::size_t r = 0; r < points.size(); ++r) {
    if (points[r].dimension() != n) throw DimensionMismatch("points of mixed dimension");
    for (std::size_t c = 0; c < idx.size(); ++c)
      m(static_cast<Index>(r), static_cast<Index>(c)) =
          std::popcount(points[r].bits() & idx[c].mask) & 1 ? -1 : 1;
  }
  return m;
}

void write_lift_csv(std::ostream& os, const LiftMatrix& m, int n, int d) {
  auto idx = monomial_indices(n, d);
  if (static_cast<Index>(idx.size()) != m.cols()) throw DimensionMismatch("header/column mismatch");
  for (std::size_t c = 0; c < idx.size(); ++c) os << (c ? "," : "") << '"' << idx[c].to_string() << '"';
  os << '\n';
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << '\n';
  }
}

}  // namespace ptf
