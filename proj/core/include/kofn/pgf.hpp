#pragma once

/// @file pgf.hpp
/// Exact state distributions from probability generating functions.
///
/// Each component u contributes a 3x3 matrix H_u whose (from, to) entry is
/// the transition probability times a monomial marker recording whether
/// state `to` is counted. The generating function of the counts is the row
/// vector selecting the chain's start state, times H_1 ... H_n, times the
/// all-ones column.
///
/// The product is folded left to right over a 1x3 row of polynomials, so
/// only three accumulators are live. Every marker is a single monomial
/// (1, t, t1 or t1*t2), so each step is a scaled index shift rather than a
/// convolution: O(n^2) multiply-adds for the univariate path and O(n^3) for
/// the bivariate one.

#include <cstddef>
#include <cstdint>

#include "kofn/model.hpp"
#include "kofn/polynomial.hpp"

namespace kofn {

/// Counting level: N_{n,1} counts components in state >= 1, N_{n,2}
/// components in state 2.
enum class Level : std::uint8_t { Working = 1, Perfect = 2 };

/// Marker exponent for a component entering `state`: 1 iff level <= state.
constexpr std::size_t marker(Level level, std::size_t state) noexcept {
  return static_cast<std::size_t>(level) <= state ? 1 : 0;
}

/// Per-component matrix for counting at one level. Entries have degree <= 1.
PolyMatrix3<UnivariatePoly> build_h_univariate(const TransitionMatrix& matrix,
                                               Level level);

/// Per-component matrix for the joint count: column 0 unmarked, column 1
/// marked by t1, column 2 by t1*t2. Entries live on a 2x2 grid.
PolyMatrix3<BivariatePoly> build_h_bivariate(const TransitionMatrix& matrix);

/// Work counter for the product recurrences.
struct ProductStats {
  std::uint64_t multiply_adds = 0;
};

/// Probability generating function of N_{n,level}; length n + 1.
/// Performs exactly 9 * n(n+1)/2 multiply-adds.
UnivariatePoly pgf_univariate(const ComponentChain& chain, Level level,
                              ProductStats* stats = nullptr);

/// Joint generating function of (N_{n,1}, N_{n,2}); dim n + 1. Coefficients
/// with y > x are never written. Performs exactly 9 * n(n+1)(n+2)/6
/// multiply-adds.
BivariatePoly pgf_bivariate(const ComponentChain& chain,
                            ProductStats* stats = nullptr);

/// Sum of coefficients x >= k, ascending. Requires k <= length; throws
/// ThresholdOutOfRange otherwise.
double tail_probability(const UnivariatePoly& poly, std::size_t k);

/// Increasing or constant systems (k1 <= k2): R1 and R2 from the two
/// univariate generating functions. Throws WrongStructure if k1 > k2 and
/// SizeMismatch if spec.n() differs from the chain length.
StateDistribution increasing_distribution(const ComponentChain& chain,
                                          const SystemSpec& spec);

/// Any legal system, from the joint generating function:
/// r2 = Pr{N2 >= k2}, r1 = Pr{N1 >= k1, N2 < k2}.
StateDistribution general_distribution(const ComponentChain& chain,
                                       const SystemSpec& spec);

/// Coefficient extraction used by general_distribution.
StateDistribution distribution_from_joint(const BivariatePoly& joint,
                                          const SystemSpec& spec);

}  // namespace kofn
