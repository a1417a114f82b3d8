#include "ptf/arrangements.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "ptf/linalg_exact.hpp"

namespace ptf {

Arrangement::Arrangement(Index dimension, std::vector<Hyperplane> hyperplanes)
    : m_(dimension), h_(std::move(hyperplanes)), central_(true) {
  if (m_ < 1) throw InvalidArgument("arrangement dimension must be positive");
  if (h_.empty()) throw InvalidArgument("arrangement needs at least one hyperplane");
  for (const auto& h : h_) {
    if (h.normal.size() != m_) throw DimensionMismatch("hyperplane normal has the wrong dimension");
    bool zero = true;
    for (Index j = 0; j < m_; ++j) zero = zero && h.normal[j] == 0;
    if (zero) throw InvalidArgument("hyperplane normal is zero");
    central_ = central_ && h.offset == 0;
  }
}

Arrangement read_arrangement(std::istream& in) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      auto pos = line.find('#');
      if (pos != std::string::npos) line.erase(pos);
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw InvalidArgument("arrangement file is empty");
  std::istringstream head(line);
  long m = 0, p = 0;
  std::string kind;
  if (!(head >> m >> p >> kind) || (kind != "central" && kind != "affine"))
    throw InvalidArgument("arrangement header must read \"m p central|affine\"");
  if (m < 1 || p < 1) throw InvalidArgument("arrangement header needs m >= 1 and p >= 1");
  std::vector<Hyperplane> h;
  for (long i = 0; i < p; ++i) {
    if (!next_line()) throw InvalidArgument("arrangement file has fewer hyperplanes than declared");
    std::istringstream row(line);
    std::vector<BigRational> v;
    std::string tok;
    while (row >> tok) v.push_back(parse_rational(tok));
    if (static_cast<long>(v.size()) != m + 1)
      throw DimensionMismatch("hyperplane line " + std::to_string(i + 1) + " needs m+1 entries");
    Hyperplane hp;
    hp.normal.resize(m);
    for (long j = 0; j < m; ++j) hp.normal[j] = v[static_cast<std::size_t>(j)];
    hp.offset = v.back();
    h.push_back(std::move(hp));
  }
  Arrangement a(m, std::move(h));
  if (kind == "central" && !a.central())
    throw InvalidArgument("arrangement declared central has a nonzero offset");
  return a;
}

Arrangement read_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open arrangement file: " + path);
  return read_arrangement(in);
}

void write_arrangement(std::ostream& out, const Arrangement& a) {
  out << a.dimension() << ' ' << a.size() << ' ' << (a.central() ? "central" : "affine") << '\n';
  for (const auto& h : a.hyperplanes()) {
    for (Index j = 0; j < h.normal.size(); ++j) out << to_string(h.normal[j]) << ' ';
    out << to_string(h.offset) << '\n';
  }
}

BigInt region_upper_bound(Index p, Index m, bool central) {
  if (m < 1 || p < m) throw InvalidArgument("region bound requires p >= m >= 1");
  if (central)
    return 2 * binomial_sum_clamped(BigInt(p - 1), static_cast<unsigned>(m - 1));
  return binomial_sum_clamped(BigInt(p), static_cast<unsigned>(m));
}

namespace {

// Depth-first search over sign vectors of a homogenised arrangement: every
// hyperplane becomes a row g with sign(g . a) to be fixed, and affine
// arrangements carry the extra row t > 0.
template <typename S>
class RegionSearch {
 public:
  RegionSearch(Matrix<S> g, bool central) : g_(std::move(g)), central_(central) {}

  std::uint64_t run(unsigned threads, std::atomic<std::size_t>& calls) {
    calls_ = &calls;
    Node root;
    root.witness = IntegerVector::Zero(g_.cols());
    if (central_) {
      root.signs.push_back(1);
      for (Index j = 0; j < g_.cols(); ++j) root.witness[j] = BigInt(g_(0, j));
    } else {
      root.witness[g_.cols() - 1] = 1;
    }

    std::vector<Node> frontier{root};
    const std::size_t target = threads > 1 ? 16 * static_cast<std::size_t>(threads) : 1;
    std::uint64_t finished = 0;
    while (frontier.size() < target) {
      std::vector<Node> next;
      bool grew = false;
      for (auto& node : frontier) {
        if (static_cast<Index>(node.signs.size()) == g_.rows()) {
          ++finished;
          continue;
        }
        grew = true;
        expand(node, [&](Node child) { next.push_back(std::move(child)); });
      }
      frontier = std::move(next);
      if (!grew || frontier.empty()) break;
    }

    std::atomic<std::size_t> cursor{0};
    std::vector<std::uint64_t> partial(std::max(1U, threads), 0);
    auto worker = [&](unsigned w) {
      for (std::size_t i = cursor++; i < frontier.size(); i = cursor++) partial[w] += explore(frontier[i]);
    };
    if (threads <= 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
      for (auto& t : pool) t.join();
    }
    std::uint64_t total = finished;
    for (auto v : partial) total += v;
    return central_ ? 2 * total : total;
  }

 private:
  struct Node {
    std::vector<signed char> signs;
    IntegerVector witness;
  };

  int side(Index row, const IntegerVector& w) const {
    BigInt s = 0;
    for (Index j = 0; j < g_.cols(); ++j)
      if (g_(row, j) != S(0)) s += BigInt(g_(row, j)) * w[j];
    return s.sign();
  }

  std::optional<IntegerVector> feasible_child(const Node& node, int s) const {
    const Index k = static_cast<Index>(node.signs.size());
    const Index extra = central_ ? 0 : 1;
    Matrix<S> rows(k + 1 + extra, g_.cols());
    for (Index i = 0; i < k; ++i)
      rows.row(i) = node.signs[static_cast<std::size_t>(i)] > 0 ? g_.row(i) : Eigen::Matrix<S, 1, Eigen::Dynamic>(-g_.row(i));
    rows.row(k) = s > 0 ? g_.row(k) : Eigen::Matrix<S, 1, Eigen::Dynamic>(-g_.row(k));
    if (extra) {
      rows.row(k + 1).setConstant(S(0));
      rows(k + 1, g_.cols() - 1) = S(1);
    }
    ++*calls_;
    FeasibilityResult r = strict_feasible_rows(rows);
    if (!r.feasible) return std::nullopt;
    return integerize(r.witness);
  }

  template <typename Emit>
  void expand(const Node& node, Emit&& emit) const {
    const Index k = static_cast<Index>(node.signs.size());
    const int v = side(k, node.witness);
    for (int s : {1, -1}) {
      Node child;
      if (v == s) {
        child.witness = node.witness;
      } else {
        auto w = feasible_child(node, s);
        if (!w) continue;
        child.witness = std::move(*w);
      }
      child.signs = node.signs;
      child.signs.push_back(static_cast<signed char>(s));
      emit(std::move(child));
    }
  }

  std::uint64_t explore(Node& node) const {
    if (static_cast<Index>(node.signs.size()) == g_.rows()) return 1;
    std::uint64_t total = 0;
    expand(node, [&](Node child) { total += explore(child); });
    return total;
  }

  Matrix<S> g_;
  bool central_;
  std::atomic<std::size_t>* calls_ = nullptr;
};

IntegerMatrix homogenised_rows(const Arrangement& a) {
  const Index dim = a.dimension() + (a.central() ? 0 : 1);
  IntegerMatrix g(a.size(), dim);
  for (Index i = 0; i < a.size(); ++i) {
    RationalVector v(dim);
    v.head(a.dimension()) = a[i].normal;
    if (!a.central()) v[dim - 1] = a[i].offset;
    g.row(i) = integerize(v).transpose();
  }
  return g;
}

}  // namespace

RegionCountReport count_regions(const Arrangement& a, const RegionOptions& options) {
  if (options.enforce_caps && (a.size() > kMaxRegionHyperplanes || a.dimension() > kMaxRegionDimension))
    throw ResourceLimit("region enumeration is limited to p <= 40 hyperplanes in dimension m <= 12");
  RegionCountReport report;
  const IntegerMatrix g = homogenised_rows(a);
  std::atomic<std::size_t> calls{0};
  const unsigned threads = std::max(1U, options.threads);
  std::uint64_t count = 0;
  try {
    Matrix<std::int64_t> small(g.rows(), g.cols());
    for (Index i = 0; i < g.rows(); ++i)
      for (Index j = 0; j < g.cols(); ++j) small(i, j) = detail::FractionFree<std::int64_t>::from(g(i, j));
    count = RegionSearch<std::int64_t>(std::move(small), a.central()).run(threads, calls);
  } catch (const detail::Overflow&) {
    calls = 0;
    count = RegionSearch<BigInt>(g, a.central()).run(threads, calls);
  }
  report.region_count = BigInt(count);
  report.feasibility_calls = calls;
  const Index p = a.size();
  const Index m = a.dimension();
  report.upper_bound = a.central()
                           ? 2 * binomial_sum_clamped(BigInt(p - 1), static_cast<unsigned>(m - 1))
                           : binomial_sum_clamped(BigInt(p), static_cast<unsigned>(m));
  if (options.count_subspaces) report.intersection_subspace_count = count_intersection_subspaces(a);
  return report;
}

namespace {

std::string key_of(const RationalMatrix& r) {
  std::string k;
  for (Index i = 0; i < r.rows(); ++i) {
    for (Index j = 0; j < r.cols(); ++j) {
      k += to_string(r(i, j));
      k += ',';
    }
    k += ';';
  }
  return k;
}

// In reduced echelon form an inconsistent system has a row (0, ..., 0, 1).
bool inconsistent(const RationalMatrix& r) {
  const Index last = r.cols() - 1;
  for (Index i = 0; i < r.rows(); ++i) {
    bool zero = true;
    for (Index j = 0; j < last; ++j) zero = zero && r(i, j) == 0;
    if (zero && r(i, last) != 0) return true;
  }
  return false;
}

}  // namespace

BigInt count_intersection_subspaces(const Arrangement& a) {
  if (a.size() > kMaxSubspaceHyperplanes)
    throw ResourceLimit("intersection subspace counting is limited to p <= 25 hyperplanes");
  const Index m = a.dimension();
  RationalMatrix rows(a.size(), m + 1);
  for (Index i = 0; i < a.size(); ++i) {
    rows.row(i).head(m) = a[i].normal.transpose();
    rows(i, m) = a[i].offset;
  }
  std::set<std::string> seen{key_of(RationalMatrix(0, m + 1))};
  std::vector<RationalMatrix> queue{RationalMatrix(0, m + 1)};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const RationalMatrix flat = queue[q];
    for (Index i = 0; i < a.size(); ++i) {
      RationalMatrix stacked(flat.rows() + 1, m + 1);
      stacked.topRows(flat.rows()) = flat;
      stacked.row(flat.rows()) = rows.row(i);
      RationalMatrix r = canonical_rref(stacked);
      if (r.rows() == flat.rows() || inconsistent(r)) continue;
      if (seen.insert(key_of(r)).second) queue.push_back(std::move(r));
    }
  }
  return BigInt(queue.size());
}

bool normals_in_general_position(const Arrangement& a) {
  const Index p = a.size();
  const Index k = std::min(p, a.dimension());
  if (binomial(static_cast<unsigned>(p), static_cast<unsigned>(k)) > 1000000)
    throw ResourceLimit("general-position test limited to 10^6 subsets");
  std::vector<bool> pick(static_cast<std::size_t>(p), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    RationalMatrix sub(k, a.dimension());
    Index r = 0;
    for (Index i = 0; i < p; ++i)
      if (pick[static_cast<std::size_t>(i)]) sub.row(r++) = a[i].normal.transpose();
    if (rank(sub) != k) return false;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return true;
}

}  // namespace ptf
