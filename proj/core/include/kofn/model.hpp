#pragma once

/// @file model.hpp
/// Domain types shared by every computation backend: component states,
/// per-component transition matrices, Markov-dependent component chains,
/// k-out-of-n:G system thresholds, and system state distributions.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace kofn {

/// State of a single component (and of the system).
enum class ComponentState : std::uint8_t {
  Failed = 0,   ///< complete failure
  Partial = 1,  ///< partially working
  Perfect = 2,  ///< perfect functioning
};

inline constexpr std::size_t kStateCount = 3;

constexpr std::size_t index(ComponentState s) noexcept {
  return static_cast<std::size_t>(s);
}

/// Plain 3x3 numeric matrix, row-major.
using Matrix3 = std::array<std::array<double, 3>, 3>;

/// Row sums must match 1 within this bound.
inline constexpr double kRowSumTolerance = 1e-9;

/// Conditional state probabilities of one component given its predecessor:
/// entry (from, to) is Pr{X_u = to | X_{u-1} = from}.
/// Values are stored exactly as supplied; they are never renormalized.
class TransitionMatrix {
 public:
  /// Validates `rows` as a row-stochastic matrix.
  /// Throws Error with NegativeEntry, EntryAboveOne, NonFiniteEntry or
  /// RowSumViolation; the message names the offending row.
  static TransitionMatrix from_rows(const Matrix3& rows);

  static TransitionMatrix identity();

  double operator()(std::size_t from, std::size_t to) const noexcept {
    return rows_[from][to];
  }
  const std::array<double, 3>& row(std::size_t from) const noexcept {
    return rows_[from];
  }
  const Matrix3& rows() const noexcept { return rows_; }

  friend bool operator==(const TransitionMatrix&,
                         const TransitionMatrix&) = default;

 private:
  explicit TransitionMatrix(const Matrix3& rows) : rows_(rows) {}
  Matrix3 rows_;
};

/// Free-function spelling of TransitionMatrix::from_rows.
TransitionMatrix validate_matrix(const Matrix3& rows);

/// Ordered sequence of n transition matrices, component u = 1..n stored at
/// position u-1.
///
/// The chain is anchored on a virtual predecessor X_0 whose state is fixed
/// (`start_state`). Component 1 is therefore distributed as row
/// `start_state` of the first matrix. The default anchor is Failed.
class ComponentChain {
 public:
  explicit ComponentChain(std::vector<TransitionMatrix> matrices,
                          ComponentState start = ComponentState::Failed);

  std::size_t size() const noexcept { return matrices_.size(); }

  /// Zero-based: `at(0)` is component 1.
  const TransitionMatrix& at(std::size_t position) const {
    return matrices_.at(position);
  }
  std::span<const TransitionMatrix> matrices() const noexcept {
    return matrices_;
  }
  ComponentState start_state() const noexcept { return start_; }

  /// Marginal distribution of component 1.
  const std::array<double, 3>& first_marginal() const noexcept {
    return matrices_.front().row(index(start_));
  }

  friend bool operator==(const ComponentChain&,
                         const ComponentChain&) = default;

 private:
  std::vector<TransitionMatrix> matrices_;
  ComponentState start_;
};

/// n copies of one matrix. Throws ZeroLength if n == 0.
ComponentChain homogeneous_chain(const TransitionMatrix& matrix, std::size_t n,
                                 ComponentState start = ComponentState::Failed);

/// Piecewise-constant block of components [from, to], 1-based inclusive.
struct Segment {
  std::size_t from;
  std::size_t to;
  TransitionMatrix matrix;
};

/// Builds a chain from segments that tile 1..n exactly once. Segments may be
/// listed in any order. Throws IndexOutOfRange, OverlappingSegments,
/// GapInCoverage or ZeroLength.
ComponentChain segmented_chain(std::span<const Segment> segments,
                               std::size_t n,
                               ComponentState start = ComponentState::Failed);

enum class StructureKind { Increasing, Constant, Decreasing };

/// Three-state k-out-of-n:G thresholds. The system is in state 2 iff at least
/// k2 components are in state 2, and in state >= 1 iff at least k1
/// components are in state >= 1 or it is in state 2.
class SystemSpec {
 public:
  /// Requires 1 <= k1 <= n and 1 <= k2 <= n; throws InvalidThreshold.
  SystemSpec(std::size_t n, std::size_t k1, std::size_t k2);

  std::size_t n() const noexcept { return n_; }
  std::size_t k1() const noexcept { return k1_; }
  std::size_t k2() const noexcept { return k2_; }

  StructureKind kind() const noexcept {
    if (k1_ < k2_) return StructureKind::Increasing;
    if (k1_ == k2_) return StructureKind::Constant;
    return StructureKind::Decreasing;
  }
  /// True for increasing and constant systems (k1 <= k2).
  bool is_increasing() const noexcept { return k1_ <= k2_; }

  friend bool operator==(const SystemSpec&, const SystemSpec&) = default;

 private:
  std::size_t n_;
  std::size_t k1_;
  std::size_t k2_;
};

const char* to_string(StructureKind kind) noexcept;

/// Negative values above -kClampTolerance are treated as cancellation noise.
inline constexpr double kClampTolerance = 1e-12;

/// Exact-state probabilities r0, r1, r2 and cumulative R1 = Pr{state >= 1},
/// R2 = Pr{state 2}.
struct StateDistribution {
  double r0 = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  double R1 = 0.0;
  double R2 = 0.0;

  /// From cumulative tails: r2 = R2, r1 = R1 - R2, r0 = 1 - R1.
  static StateDistribution from_cumulative(double at_least_one,
                                           double perfect);
  /// From exact-state masses of states 1 and 2: r0 = 1 - r1 - r2.
  static StateDistribution from_exact(double partial, double perfect);

  /// Checks the sum-to-one, cumulative and range invariants.
  bool consistent(double sum_tolerance = 1e-9) const noexcept;

  std::array<double, 5> values() const noexcept { return {r0, r1, r2, R1, R2}; }

  friend bool operator==(const StateDistribution&,
                         const StateDistribution&) = default;
};

/// Largest absolute difference over all five fields.
double max_abs_difference(const StateDistribution& a,
                          const StateDistribution& b) noexcept;

}  // namespace kofn
