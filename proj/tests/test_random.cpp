#include <gtest/gtest.h>

#include "kofn/random.hpp"

namespace kofn {
namespace {

// Reference outputs from an independent Python implementation of
// SplitMix64 seeding + xoshiro256**.
TEST(Xoshiro256, ReferenceStream) {
  Xoshiro256 zero(0);
  EXPECT_EQ(zero.next(), 0x99ec5f36cb75f2b4ULL);
  EXPECT_EQ(zero.next(), 0xbf6e1f784956452aULL);
  EXPECT_EQ(zero.next(), 0x1a5f849d4933e6e0ULL);
  EXPECT_EQ(zero.next(), 0x6aa594f1262d2d2cULL);
  Xoshiro256 other(20240607);
  EXPECT_EQ(other.next(), 0x63d0dd2b6dd41cc6ULL);
  EXPECT_EQ(other.next(), 0xc9df3a3311d1e5f0ULL);
}

TEST(Xoshiro256, UniformRange) {
  Xoshiro256 rng(99);
  double lo = 1.0;
  double hi = 0.0;
  double sum = 0.0;
  for (int i = 0; i < 100'000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    sum += u;
  }
  EXPECT_LT(lo, 1e-3);
  EXPECT_GT(hi, 1 - 1e-3);
  EXPECT_NEAR(sum / 100'000, 0.5, 0.01);
}

TEST(Xoshiro256, Streams) {
  auto a = Xoshiro256::stream(5, 0);
  auto b = Xoshiro256::stream(5, 0);
  auto c = Xoshiro256::stream(5, 1);
  EXPECT_EQ(a.next(), b.next());
  EXPECT_NE(a.next(), c.next());
}

TEST(RandomChain, ProducesValidChains) {
  Xoshiro256 rng(4);
  for (int i = 0; i < 200; ++i) {
    const auto chain = random_chain(6, rng, ComponentState::Partial, 0.3);
    EXPECT_EQ(chain.size(), 6u);
    EXPECT_EQ(chain.start_state(), ComponentState::Partial);
    for (const auto& m : chain.matrices()) {
      EXPECT_NO_THROW(TransitionMatrix::from_rows(m.rows()));
    }
  }
}

}  // namespace
}  // namespace kofn
