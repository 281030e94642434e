#include "kofn/random.hpp"

#include <vector>

namespace kofn {

namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

std::uint64_t SplitMix64::next() noexcept {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Xoshiro256::Xoshiro256(std::uint64_t seed) noexcept {
  SplitMix64 sm(seed);
  for (auto& word : s_) word = sm.next();
}

Xoshiro256 Xoshiro256::stream(std::uint64_t seed,
                              std::uint64_t shard) noexcept {
  SplitMix64 sm(seed);
  std::uint64_t derived = sm.next();
  for (std::uint64_t i = 0; i < shard; ++i) derived = sm.next();
  return Xoshiro256(derived);
}

std::uint64_t Xoshiro256::next() noexcept {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

TransitionMatrix random_transition_matrix(Xoshiro256& rng, double zero_rate) {
  Matrix3 rows{};
  for (auto& row : rows) {
    double sum = 0.0;
    for (double& p : row) {
      p = rng.uniform() < zero_rate ? 0.0 : rng.uniform();
      sum += p;
    }
    if (sum == 0.0) {
      row[rng.next() % 3] = 1.0;
      continue;
    }
    for (double& p : row) p /= sum;
  }
  return TransitionMatrix::from_rows(rows);
}

ComponentChain random_chain(std::size_t n, Xoshiro256& rng,
                            ComponentState start, double zero_rate) {
  std::vector<TransitionMatrix> matrices;
  matrices.reserve(n);
  for (std::size_t u = 0; u < n; ++u) {
    matrices.push_back(random_transition_matrix(rng, zero_rate));
  }
  return ComponentChain(std::move(matrices), start);
}

}  // namespace kofn
