#pragma once

/// @file random.hpp
/// Portable pseudo-random generator with a fully specified stream, so that
/// Monte Carlo runs reproduce bit-for-bit across platforms and ports.
///
/// Seeding: the four 64-bit state words are successive outputs of
/// SplitMix64 started at `seed`:
///   z  = (x += 0x9e3779b97f4a7c15)
///   z  = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
///   z  = (z ^ (z >> 27)) * 0x94d049bb133111eb
///   out = z ^ (z >> 31)
/// Generation: xoshiro256** (Blackman and Vigna, 2018).
/// Uniform doubles: (next() >> 11) * 2^-53, in [0, 1).
/// Independent streams for shard i use seed' = splitmix64 output number i
/// of a SplitMix64 started at `seed` (see `Xoshiro256::stream`).

#include <cstddef>
#include <cstdint>
#include <limits>

#include "kofn/model.hpp"

namespace kofn {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
  std::uint64_t next() noexcept;

 private:
  std::uint64_t state_;
};

class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256(std::uint64_t seed) noexcept;

  /// Generator for shard `shard` of a run seeded with `seed`.
  static Xoshiro256 stream(std::uint64_t seed, std::uint64_t shard) noexcept;

  std::uint64_t next() noexcept;
  std::uint64_t operator()() noexcept { return next(); }
  double uniform() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

 private:
  std::uint64_t s_[4];
};

/// Random row-stochastic matrix. Each row normalizes three uniforms; with
/// probability `zero_rate` per entry an entry is forced to zero (at least
/// one entry per row stays positive).
TransitionMatrix random_transition_matrix(Xoshiro256& rng,
                                          double zero_rate = 0.1);

/// Chain of n independent random matrices.
ComponentChain random_chain(std::size_t n, Xoshiro256& rng,
                            ComponentState start = ComponentState::Failed,
                            double zero_rate = 0.1);

}  // namespace kofn
