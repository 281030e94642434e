#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace kofn::cli {

/// Median wall time of one call to `fn`, in nanoseconds. Calls are batched
/// so each timed batch lasts at least `min_batch`; `reps` batches are taken
/// (0 is treated as 1).
double median_ns(const std::function<double()>& fn, std::size_t reps,
                 std::chrono::nanoseconds min_batch = std::chrono::microseconds(500));

struct BenchPoint {
  std::string method;
  std::size_t n;
  double median_ns;
};

/// Powers of two up to nmax, plus the subset and brute-force guard sizes
/// (12 and 20) when they fit. Sorted, unique.
std::vector<std::size_t> bench_grid(std::size_t nmax);

/// Times pgf-uni and pgf at every grid size, and subset/brute where their
/// size guards allow, on one random chain drawn with `seed`.
std::vector<BenchPoint> run_bench(std::size_t nmax, std::size_t reps,
                                  std::uint64_t seed);

/// Least-squares slope of log(time) against log(n).
double log_log_slope(const std::vector<std::size_t>& n,
                     const std::vector<double>& time_ns);

}  // namespace kofn::cli
