#include "ptf/ptf_count.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "ptf/arrangements.hpp"
#include "ptf/cube_lift.hpp"
#include "ptf/linalg_exact.hpp"

namespace ptf {

bool in_count_envelope(int n, int d) {
  if (n < 1 || d < 1 || d > n) return false;
  return (n <= 5 && d == 1) || (n <= 4 && d <= 2) || n <= 3;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

PTFCountResult count_ptf(int n, int d, unsigned threads) {
  if (n < 1 || d < 1 || d > n) throw InvalidArgument("count_ptf requires 1 <= d <= n");
  if (!in_count_envelope(n, d))
    throw ResourceLimit("count_ptf supports (n <= 5, d = 1), (n <= 4, d <= 2), (n <= 3, d <= 3)");
  const auto start = Clock::now();
  const auto cube = enumerate_cube(n);
  const LiftMatrix lifted = lift_matrix(cube, d);
  RegionOptions opts;
  opts.threads = threads;
  RegionCountReport regions = count_regions(Arrangement::central(lifted), opts);
  PTFCountResult r;
  r.n = n;
  r.d = d;
  r.count = regions.region_count;
  r.method = "region-enumeration";
  r.feasibility_calls = regions.feasibility_calls;
  r.elapsed_ms = ms_since(start);
  return r;
}

PTFCountResult oracle_count_ptf(int n, int d, unsigned threads) {
  if (n < 1 || d < 1 || d > n) throw InvalidArgument("oracle_count_ptf requires 1 <= d <= n");
  if (n > 4) throw ResourceLimit("the function oracle enumerates 2^(2^n) functions and stops at n = 4");
  const auto start = Clock::now();
  const auto cube = enumerate_cube(n);
  const LiftMatrix lifted = lift_matrix(cube, d);
  const Matrix<std::int64_t> base = lifted.cast<std::int64_t>();
  const std::uint64_t points = cube.size();
  const std::uint64_t functions = std::uint64_t{1} << points;

  threads = std::max(1U, threads);
  std::vector<std::uint64_t> partial(threads, 0);
  std::atomic<std::uint64_t> cursor{0};
  constexpr std::uint64_t kChunk = 256;
  auto worker = [&](unsigned w) {
    Matrix<std::int64_t> rows = base;
    for (std::uint64_t lo = cursor.fetch_add(kChunk); lo < functions; lo = cursor.fetch_add(kChunk)) {
      const std::uint64_t hi = std::min(functions, lo + kChunk);
      for (std::uint64_t f = lo; f < hi; ++f) {
        // Bit k of f set means f(x_k) = -1.
        for (std::uint64_t k = 0; k < points; ++k)
          rows.row(static_cast<Index>(k)) = (f >> k) & 1U ? Eigen::Matrix<std::int64_t, 1, Eigen::Dynamic>(-base.row(static_cast<Index>(k)))
                                                          : base.row(static_cast<Index>(k));
        if (strict_feasible_rows(rows).feasible) ++partial[w];
      }
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }
  PTFCountResult r;
  r.n = n;
  r.d = d;
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  r.count = BigInt(total);
  r.method = "function-oracle";
  r.feasibility_calls = functions;
  r.elapsed_ms = ms_since(start);
  return r;
}

UpperBoundCheck verify_upper_bounds(const PTFCountResult& result) {
  const int n = result.n;
  const int d = result.d;
  if (n < 1 || d < 1 || d > n) throw InvalidArgument("verify_upper_bounds requires 1 <= d <= n");
  UpperBoundCheck c;
  const BigInt m = binomial_sum_clamped(BigInt(n), static_cast<unsigned>(d));
  c.sharp_upper = 2 * binomial_sum_clamped(pow2(static_cast<unsigned long>(n)) - 1,
                                           static_cast<unsigned>(m - 1));
  c.theorem_upper = BigInt(n) * m;
  c.saks_lower = d + 1 <= n ? binomial(static_cast<unsigned>(n), static_cast<unsigned>(d + 1)) : BigInt(0);
  c.sharp_slack = c.sharp_upper - result.count;
  c.sharp_holds = result.count <= c.sharp_upper;
  c.sharp_equal = result.count == c.sharp_upper;
  c.theorem_holds = result.count <= pow2(static_cast<unsigned long>(c.theorem_upper));
  c.saks_holds = pow2(static_cast<unsigned long>(c.saks_lower)) <= result.count;
  return c;
}

}  // namespace ptf
