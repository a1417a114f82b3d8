#pragma once

// Hyperplane arrangements: exact region counting by sign-vector search,
// intersection subspaces, and the classical region-count bounds.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ptf/numeric.hpp"

namespace ptf {

inline constexpr Index kMaxRegionHyperplanes = 40;
inline constexpr Index kMaxRegionDimension = 12;
inline constexpr Index kMaxSubspaceHyperplanes = 25;

/// The hyperplane {a : <normal, a> + offset = 0}.
struct Hyperplane {
  RationalVector normal;
  BigRational offset = 0;
};

class Arrangement {
 public:
  Arrangement(Index dimension, std::vector<Hyperplane> hyperplanes);
  /// Central arrangement with one hyperplane per row of `normals`.
  template <typename Derived>
  static Arrangement central(const Eigen::MatrixBase<Derived>& normals);

  Index dimension() const { return m_; }
  Index size() const { return static_cast<Index>(h_.size()); }
  bool central() const { return central_; }
  const std::vector<Hyperplane>& hyperplanes() const { return h_; }
  const Hyperplane& operator[](Index i) const { return h_[static_cast<std::size_t>(i)]; }

 private:
  Index m_;
  std::vector<Hyperplane> h_;
  bool central_;
};

template <typename Derived>
Arrangement Arrangement::central(const Eigen::MatrixBase<Derived>& normals) {
  std::vector<Hyperplane> h(static_cast<std::size_t>(normals.rows()));
  for (Index i = 0; i < normals.rows(); ++i) {
    auto& v = h[static_cast<std::size_t>(i)].normal;
    v.resize(normals.cols());
    for (Index j = 0; j < normals.cols(); ++j) v[j] = BigRational(normals(i, j));
  }
  return Arrangement(normals.cols(), std::move(h));
}

/// Text format: "m p central|affine", then p lines of m normal entries and an offset.
Arrangement read_arrangement(std::istream& in);
Arrangement read_arrangement_file(const std::string& path);
void write_arrangement(std::ostream& out, const Arrangement& a);

struct RegionOptions {
  unsigned threads = 1;
  bool count_subspaces = false;
  bool enforce_caps = true;
};

struct RegionCountReport {
  BigInt region_count;
  std::string method = "sign-vector-enumeration";
  std::optional<BigInt> intersection_subspace_count;
  BigInt upper_bound;            // binom(p, <= m), or the central bound
  std::size_t feasibility_calls = 0;
};

/// Number of open regions: realizable strict sign vectors, found by depth-first
/// extension in input order with pruning of infeasible prefixes.
RegionCountReport count_regions(const Arrangement& a, const RegionOptions& options = {});

/// Distinct nonempty intersections of subfamilies, the whole space included.
BigInt count_intersection_subspaces(const Arrangement& a);

/// binom(p, <= m) in general, 2 binom(p-1, <= m-1) for central arrangements.
BigInt region_upper_bound(Index p, Index m, bool central);

/// Every k <= m of the normals are linearly independent.
bool normals_in_general_position(const Arrangement& a);

}  // namespace ptf
