#include "kofn/cli/timing.hpp"

#include <algorithm>
#include <cmath>

#include "kofn/oracle.hpp"
#include "kofn/pgf.hpp"
#include "kofn/random.hpp"
#include "kofn/subset.hpp"

namespace kofn::cli {

namespace {

volatile double g_sink = 0.0;

}  // namespace

double median_ns(const std::function<double()>& fn, std::size_t reps,
                 std::chrono::nanoseconds min_batch) {
  using clock = std::chrono::steady_clock;
  reps = std::max<std::size_t>(reps, 1);

  g_sink = g_sink + fn();  // warm-up
  std::size_t batch = 1;
  while (true) {
    const auto t0 = clock::now();
    for (std::size_t i = 0; i < batch; ++i) g_sink = g_sink + fn();
    if (clock::now() - t0 >= min_batch || batch >= (std::size_t{1} << 30)) break;
    batch *= 2;
  }

  std::vector<double> per_call;
  per_call.reserve(reps);
  for (std::size_t r = 0; r < reps; ++r) {
    const auto t0 = clock::now();
    for (std::size_t i = 0; i < batch; ++i) g_sink = g_sink + fn();
    const auto elapsed =
        std::chrono::duration<double, std::nano>(clock::now() - t0).count();
    per_call.push_back(elapsed / static_cast<double>(batch));
  }
  std::sort(per_call.begin(), per_call.end());
  const std::size_t mid = per_call.size() / 2;
  return per_call.size() % 2 == 1 ? per_call[mid]
                                  : 0.5 * (per_call[mid - 1] + per_call[mid]);
}

std::vector<std::size_t> bench_grid(std::size_t nmax) {
  std::vector<std::size_t> grid;
  for (std::size_t n = 2; n <= nmax; n *= 2) grid.push_back(n);
  for (std::size_t guard : {kBruteForceLimit, kSubsetUnivariateLimit}) {
    if (guard <= nmax) grid.push_back(guard);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

std::vector<BenchPoint> run_bench(std::size_t nmax, std::size_t reps,
                                  std::uint64_t seed) {
  std::vector<BenchPoint> out;
  const auto grid = bench_grid(nmax);
  if (grid.empty()) return out;
  Xoshiro256 rng(seed);
  const ComponentChain full = random_chain(grid.back(), rng);

  for (std::size_t n : grid) {
    const auto first = full.matrices().subspan(0, n);
    const ComponentChain chain(
        std::vector<TransitionMatrix>(first.begin(), first.end()));
    const std::size_t k = (n + 1) / 2;

    out.push_back({"pgf-uni", n, median_ns([&] {
                     return pgf_univariate(chain, Level::Working)[k];
                   }, reps)});
    out.push_back({"pgf", n, median_ns([&] {
                     return pgf_bivariate(chain).at(k, k / 2);
                   }, reps)});
    if (n <= kSubsetUnivariateLimit) {
      out.push_back({"subset", n, median_ns([&] {
                       return subset_tail_increasing(chain, Level::Working, k);
                     }, reps)});
    }
    if (n <= kBruteForceLimit) {
      out.push_back({"brute", n, median_ns([&] {
                       return brute_force_joint(chain)(k, k / 2);
                     }, reps)});
    }
  }
  return out;
}

double log_log_slope(const std::vector<std::size_t>& n,
                     const std::vector<double>& time_ns) {
  const std::size_t m = std::min(n.size(), time_ns.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double x = std::log(static_cast<double>(n[i]));
    const double y = std::log(time_ns[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double count = static_cast<double>(m);
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

}  // namespace kofn::cli
