#pragma once

/// @file subset.hpp
/// Reference computations that expand the generating-function product over
/// subsets of components. Cost is exponential in n; use only for
/// cross-checking the pgf engine.
///
/// Writing H_u(t) = H_u(0) + (H_u(1) - H_u(0)) t, the probability that at
/// least k components are counted is the sum, over subsets S with |S| >= k,
/// of the product that takes the difference matrix for u in S and H_u(0)
/// otherwise. The joint case splits H_u(t1, t2) into three pieces and sums
/// over subset pairs (S1, S2); pieces with u in S2 but not in S1 vanish, so
/// only pairs with S2 contained in S1 contribute.

#include <cstddef>
#include <vector>

#include "kofn/model.hpp"
#include "kofn/pgf.hpp"

namespace kofn {

inline constexpr std::size_t kSubsetUnivariateLimit = 20;
inline constexpr std::size_t kSubsetBivariateLimit = 12;

/// Resolves (component, subset membership) to the numeric factor matrix of
/// one subset term.
class SubsetMatrixSelector {
 public:
  enum class Mode { Univariate, Bivariate };

  static SubsetMatrixSelector univariate(const ComponentChain& chain,
                                         Level level);
  static SubsetMatrixSelector bivariate(const ComponentChain& chain);

  Mode mode() const noexcept { return mode_; }

  /// Univariate mode: `in_second` must be false.
  /// Univariate:  u not in S -> H(0);   u in S -> H(1) - H(0).
  /// Bivariate:   (out, out) -> H(0,0); (in, out) -> H(1,0) - H(0,0);
  ///              (out, in) -> 0;       (in, in) -> H(1,1) - H(1,0).
  const Matrix3& select(std::size_t position, bool in_first,
                        bool in_second = false) const noexcept;

 private:
  SubsetMatrixSelector() = default;

  Mode mode_ = Mode::Univariate;
  // Per component: [0] base, [1] first-set piece, [2] both-sets piece.
  std::vector<std::array<Matrix3, 3>> pieces_;
};

/// Pr{N_{n,level} >= k} as the subset sum over |S| >= k in ascending mask
/// order. Requires n <= kSubsetUnivariateLimit (TooLarge) and 1 <= k <= n
/// (ThresholdOutOfRange).
double subset_tail_increasing(const ComponentChain& chain, Level level,
                              std::size_t k);

enum class PairEnumeration {
  /// Only pairs with S2 a subset of S1 (the others are exactly zero).
  NestedOnly,
  /// All 4^n pairs, multiplying out the zero factors. Test use only.
  All,
};

/// Exact-state probability r^target of the system as a sum over subset
/// pairs: state 2 uses all S1 and |S2| >= k2; state 1 uses |S1| >= k1 and
/// |S2| < k2. Valid for any legal spec. Requires n <= kSubsetBivariateLimit.
double subset_state_decreasing(
    const ComponentChain& chain, const SystemSpec& spec, Level target,
    PairEnumeration enumeration = PairEnumeration::NestedOnly);

/// Full distribution by subset expansion: the univariate sums when k1 <= k2,
/// the pair sums otherwise.
StateDistribution subset_distribution(const ComponentChain& chain,
                                      const SystemSpec& spec);

}  // namespace kofn
