#include "kofn/subset.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <sstream>

#include "kofn/error.hpp"

namespace kofn {

namespace {

constexpr Matrix3 kZero{};

Matrix3 subtract(const Matrix3& a, const Matrix3& b) {
  Matrix3 out{};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) out[r][c] = a[r][c] - b[r][c];
  }
  return out;
}

void require_at_most(const ComponentChain& chain, std::size_t limit) {
  if (chain.size() > limit) {
    std::ostringstream msg;
    msg << "subset expansion supports n <= " << limit << " (got n = "
        << chain.size() << ")";
    throw Error(ErrorCode::TooLarge, msg.str());
  }
}

// Start-state row vector times the product of the selected factors, times
// the all-ones column.
template <typename Factor>
double bracketed_product(ComponentState start, std::size_t n, Factor factor) {
  std::array<double, 3> row{};
  row[index(start)] = 1.0;
  for (std::size_t u = 0; u < n; ++u) {
    const Matrix3& g = factor(u);
    std::array<double, 3> next{};
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = 0; b < 3; ++b) next[b] += row[a] * g[a][b];
    }
    row = next;
  }
  return row[0] + row[1] + row[2];
}

bool member(std::uint32_t mask, std::size_t u) noexcept {
  return ((mask >> u) & 1U) != 0;
}

}  // namespace

SubsetMatrixSelector SubsetMatrixSelector::univariate(
    const ComponentChain& chain, Level level) {
  SubsetMatrixSelector sel;
  sel.mode_ = Mode::Univariate;
  sel.pieces_.reserve(chain.size());
  for (const TransitionMatrix& m : chain.matrices()) {
    const auto h = build_h_univariate(m, level);
    const Matrix3 at0 = h.evaluate(0.0);
    const Matrix3 at1 = h.evaluate(1.0);
    sel.pieces_.push_back({at0, subtract(at1, at0), kZero});
  }
  return sel;
}

SubsetMatrixSelector SubsetMatrixSelector::bivariate(
    const ComponentChain& chain) {
  SubsetMatrixSelector sel;
  sel.mode_ = Mode::Bivariate;
  sel.pieces_.reserve(chain.size());
  for (const TransitionMatrix& m : chain.matrices()) {
    const auto h = build_h_bivariate(m);
    const Matrix3 at00 = h.evaluate(0.0, 0.0);
    const Matrix3 at10 = h.evaluate(1.0, 0.0);
    const Matrix3 at11 = h.evaluate(1.0, 1.0);
    sel.pieces_.push_back({at00, subtract(at10, at00), subtract(at11, at10)});
  }
  return sel;
}

const Matrix3& SubsetMatrixSelector::select(std::size_t position, bool in_first,
                                            bool in_second) const noexcept {
  const auto& p = pieces_[position];
  if (mode_ == Mode::Univariate) return in_first ? p[1] : p[0];
  if (in_second) return in_first ? p[2] : kZero;
  return in_first ? p[1] : p[0];
}

double subset_tail_increasing(const ComponentChain& chain, Level level,
                              std::size_t k) {
  require_at_most(chain, kSubsetUnivariateLimit);
  const std::size_t n = chain.size();
  if (k < 1 || k > n) {
    std::ostringstream msg;
    msg << "threshold " << k << " outside 1.." << n;
    throw Error(ErrorCode::ThresholdOutOfRange, msg.str());
  }
  const auto sel = SubsetMatrixSelector::univariate(chain, level);
  const std::uint32_t end = std::uint32_t{1} << n;
  double total = 0.0;
  for (std::uint32_t mask = 0; mask < end; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) < k) continue;
    total += bracketed_product(chain.start_state(), n, [&](std::size_t u) -> const Matrix3& {
      return sel.select(u, member(mask, u));
    });
  }
  return total;
}

double subset_state_decreasing(const ComponentChain& chain,
                               const SystemSpec& spec, Level target,
                               PairEnumeration enumeration) {
  require_at_most(chain, kSubsetBivariateLimit);
  const std::size_t n = chain.size();
  if (spec.n() != n) {
    throw Error(ErrorCode::SizeMismatch, "spec n does not match the chain");
  }
  const auto sel = SubsetMatrixSelector::bivariate(chain);

  auto wanted = [&](std::uint32_t s1, std::uint32_t s2) {
    const auto size1 = static_cast<std::size_t>(std::popcount(s1));
    const auto size2 = static_cast<std::size_t>(std::popcount(s2));
    if (target == Level::Perfect) return size2 >= spec.k2();
    return size1 >= spec.k1() && size2 < spec.k2();
  };
  auto term = [&](std::uint32_t s1, std::uint32_t s2) {
    return bracketed_product(chain.start_state(), n, [&](std::size_t u) -> const Matrix3& {
      return sel.select(u, member(s1, u), member(s2, u));
    });
  };

  const std::uint32_t end = std::uint32_t{1} << n;
  double total = 0.0;
  for (std::uint32_t s1 = 0; s1 < end; ++s1) {
    if (enumeration == PairEnumeration::All) {
      for (std::uint32_t s2 = 0; s2 < end; ++s2) {
        if (wanted(s1, s2)) total += term(s1, s2);
      }
      continue;
    }
    // Submasks of s1 in ascending order.
    std::uint32_t s2 = 0;
    while (true) {
      if (wanted(s1, s2)) total += term(s1, s2);
      if (s2 == s1) break;
      s2 = (s2 - s1) & s1;
    }
  }
  return total;
}

StateDistribution subset_distribution(const ComponentChain& chain,
                                      const SystemSpec& spec) {
  if (spec.n() != chain.size()) {
    throw Error(ErrorCode::SizeMismatch, "spec n does not match the chain");
  }
  if (spec.is_increasing()) {
    return StateDistribution::from_cumulative(
        subset_tail_increasing(chain, Level::Working, spec.k1()),
        subset_tail_increasing(chain, Level::Perfect, spec.k2()));
  }
  return StateDistribution::from_exact(
      subset_state_decreasing(chain, spec, Level::Working),
      subset_state_decreasing(chain, spec, Level::Perfect));
}

}  // namespace kofn
