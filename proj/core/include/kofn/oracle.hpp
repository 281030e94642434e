#pragma once

/// @file oracle.hpp
/// Ground truth that uses no generating-function algebra: exhaustive
/// enumeration of component trajectories and a seeded Monte Carlo sampler.

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "kofn/model.hpp"

namespace kofn {

inline constexpr std::size_t kBruteForceLimit = 12;

/// table(x, y) = Pr{N_{n,1} = x, N_{n,2} = y}, (n+1) x (n+1).
class JointPmf {
 public:
  explicit JointPmf(std::size_t n) : dim_(n + 1), table_(dim_ * dim_, 0.0) {}

  std::size_t dim() const noexcept { return dim_; }
  double operator()(std::size_t x, std::size_t y) const noexcept {
    return table_[x * dim_ + y];
  }
  double& operator()(std::size_t x, std::size_t y) noexcept {
    return table_[x * dim_ + y];
  }

  double sum() const noexcept;
  StateDistribution distribution(const SystemSpec& spec) const;

 private:
  std::size_t dim_;
  std::vector<double> table_;
};

/// Enumerates all 3^n trajectories depth-first with a running product;
/// zero-probability branches are cut. Throws TooLarge above
/// kBruteForceLimit.
JointPmf brute_force_joint(const ComponentChain& chain);

/// State of the system for given counts of components in state >= 1 and
/// in state 2.
ComponentState classify(const SystemSpec& spec, std::size_t working,
                        std::size_t perfect) noexcept;

struct McEstimate {
  std::array<double, 3> proportion{};  ///< r0_hat, r1_hat, r2_hat
  std::array<double, 3> std_err{};     ///< sqrt(p(1-p)/samples) per state
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  double r0_hat() const noexcept { return proportion[0]; }
  double r1_hat() const noexcept { return proportion[1]; }
  double r2_hat() const noexcept { return proportion[2]; }

  friend bool operator==(const McEstimate&, const McEstimate&) = default;
};

/// Samples `samples` trajectories from a single Xoshiro256 stream seeded
/// with `seed`. Equal inputs give bit-identical results. Throws
/// ZeroSamples.
McEstimate monte_carlo(const ComponentChain& chain, const SystemSpec& spec,
                       std::uint64_t samples, std::uint64_t seed);

}  // namespace kofn
