// Scaling of each backend in the number of components n. Each benchmark
// reports a fitted complexity: pgf-uni should fit N^2, pgf N^3, and the
// enumeration backends exponential growth (reported as the fitted curve
// closest to their measurements).

#include <benchmark/benchmark.h>

#include "kofn/oracle.hpp"
#include "kofn/pgf.hpp"
#include "kofn/random.hpp"
#include "kofn/subset.hpp"

namespace {

using namespace kofn;

ComponentChain chain_of(benchmark::State& state) {
  Xoshiro256 rng(20240607);
  return random_chain(static_cast<std::size_t>(state.range(0)), rng,
                      ComponentState::Perfect);
}

void BM_PgfUnivariate(benchmark::State& state) {
  const auto chain = chain_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pgf_univariate(chain, Level::Working));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PgfUnivariate)->RangeMultiplier(2)->Range(16, 1024)->Complexity(benchmark::oNSquared);

void BM_PgfBivariate(benchmark::State& state) {
  const auto chain = chain_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pgf_bivariate(chain));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PgfBivariate)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNCubed);

void BM_SubsetTail(benchmark::State& state) {
  const auto chain = chain_of(state);
  const auto k = static_cast<std::size_t>(state.range(0) / 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(subset_tail_increasing(chain, Level::Working, k));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SubsetTail)->DenseRange(8, 16, 2)->Complexity();

void BM_BruteForce(benchmark::State& state) {
  const auto chain = chain_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_joint(chain));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BruteForce)->DenseRange(4, 10, 2)->Complexity();

}  // namespace

BENCHMARK_MAIN();
