#include "kofn/pgf.hpp"

#include <array>
#include <sstream>
#include <utility>
#include <vector>

#include "kofn/error.hpp"

namespace kofn {

namespace {

void require_matching_size(const ComponentChain& chain, const SystemSpec& spec) {
  if (chain.size() != spec.n()) {
    std::ostringstream msg;
    msg << "system has n = " << spec.n() << " but the chain has "
        << chain.size() << " components";
    throw Error(ErrorCode::SizeMismatch, msg.str());
  }
}

// (dx, dy) index shift of the bivariate marker for entering `state`.
constexpr std::array<std::pair<std::size_t, std::size_t>, 3> kJointShift{
    {{0, 0}, {1, 0}, {1, 1}}};

}  // namespace

PolyMatrix3<UnivariatePoly> build_h_univariate(const TransitionMatrix& matrix,
                                               Level level) {
  PolyMatrix3<UnivariatePoly> h(std::size_t{2});
  for (std::size_t from = 0; from < kStateCount; ++from) {
    for (std::size_t to = 0; to < kStateCount; ++to) {
      h(from, to)[marker(level, to)] = matrix(from, to);
    }
  }
  return h;
}

PolyMatrix3<BivariatePoly> build_h_bivariate(const TransitionMatrix& matrix) {
  PolyMatrix3<BivariatePoly> h(std::size_t{2});
  for (std::size_t from = 0; from < kStateCount; ++from) {
    for (std::size_t to = 0; to < kStateCount; ++to) {
      const auto [dx, dy] = kJointShift[to];
      h(from, to).at(dx, dy) = matrix(from, to);
    }
  }
  return h;
}

UnivariatePoly pgf_univariate(const ComponentChain& chain, Level level,
                              ProductStats* stats) {
  const std::size_t n = chain.size();
  using Row = std::array<std::vector<double>, kStateCount>;
  Row current;
  Row next;
  for (std::size_t s = 0; s < kStateCount; ++s) {
    current[s].assign(n + 1, 0.0);
    next[s].assign(n + 1, 0.0);
  }
  current[index(chain.start_state())][0] = 1.0;

  std::uint64_t work = 0;
  for (std::size_t c = 0; c < n; ++c) {
    const TransitionMatrix& m = chain.at(c);
    const std::size_t active = c + 1;  // degrees 0..c may be nonzero
    for (auto& acc : next) std::fill_n(acc.begin(), active + 1, 0.0);
    for (std::size_t from = 0; from < kStateCount; ++from) {
      const double* src = current[from].data();
      for (std::size_t to = 0; to < kStateCount; ++to) {
        const double p = m(from, to);
        double* dst = next[to].data() + marker(level, to);
        for (std::size_t x = 0; x < active; ++x) dst[x] += p * src[x];
      }
    }
    work += 9 * active;
    std::swap(current, next);
  }

  UnivariatePoly out(n + 1);
  for (std::size_t x = 0; x <= n; ++x) {
    out[x] = current[0][x] + current[1][x] + current[2][x];
  }
  if (stats != nullptr) stats->multiply_adds += work;
  return out;
}

BivariatePoly pgf_bivariate(const ComponentChain& chain, ProductStats* stats) {
  const std::size_t n = chain.size();
  const std::size_t dim = n + 1;
  using Row = std::array<std::vector<double>, kStateCount>;
  Row current;
  Row next;
  for (std::size_t s = 0; s < kStateCount; ++s) {
    current[s].assign(dim * dim, 0.0);
    next[s].assign(dim * dim, 0.0);
  }
  current[index(chain.start_state())][0] = 1.0;

  std::uint64_t work = 0;
  for (std::size_t c = 0; c < n; ++c) {
    const TransitionMatrix& m = chain.at(c);
    // Live support before this step: 0 <= y <= x <= c.
    for (auto& acc : next) {
      for (std::size_t x = 0; x <= c + 1; ++x) {
        std::fill_n(acc.begin() + x * dim, x + 1, 0.0);
      }
    }
    for (std::size_t from = 0; from < kStateCount; ++from) {
      const double* src = current[from].data();
      for (std::size_t to = 0; to < kStateCount; ++to) {
        const double p = m(from, to);
        const auto [dx, dy] = kJointShift[to];
        double* dst = next[to].data() + dx * dim + dy;
        for (std::size_t x = 0; x <= c; ++x) {
          const double* s = src + x * dim;
          double* d = dst + x * dim;
          for (std::size_t y = 0; y <= x; ++y) d[y] += p * s[y];
        }
      }
    }
    work += 9 * (c + 1) * (c + 2) / 2;
    std::swap(current, next);
  }

  BivariatePoly out(dim);
  auto coeffs = out.coeffs();
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t y = 0; y <= x; ++y) {
      const std::size_t i = x * dim + y;
      coeffs[i] = current[0][i] + current[1][i] + current[2][i];
    }
  }
  if (stats != nullptr) stats->multiply_adds += work;
  return out;
}

double tail_probability(const UnivariatePoly& poly, std::size_t k) {
  if (k > poly.length()) {
    std::ostringstream msg;
    msg << "threshold " << k << " exceeds degree bound + 1 = " << poly.length();
    throw Error(ErrorCode::ThresholdOutOfRange, msg.str());
  }
  double acc = 0.0;
  for (std::size_t x = k; x < poly.length(); ++x) acc += poly[x];
  return acc;
}

StateDistribution increasing_distribution(const ComponentChain& chain,
                                          const SystemSpec& spec) {
  require_matching_size(chain, spec);
  if (!spec.is_increasing()) {
    std::ostringstream msg;
    msg << "the univariate method needs k1 <= k2 (got k1 = " << spec.k1()
        << ", k2 = " << spec.k2() << ")";
    throw Error(ErrorCode::WrongStructure, msg.str());
  }
  const double at_least_one =
      tail_probability(pgf_univariate(chain, Level::Working), spec.k1());
  const double perfect =
      tail_probability(pgf_univariate(chain, Level::Perfect), spec.k2());
  return StateDistribution::from_cumulative(at_least_one, perfect);
}

StateDistribution distribution_from_joint(const BivariatePoly& joint,
                                          const SystemSpec& spec) {
  if (joint.dim() != spec.n() + 1) {
    throw Error(ErrorCode::SizeMismatch,
                "joint generating function does not match n");
  }
  double partial = 0.0;
  double perfect = 0.0;
  for (std::size_t x = 0; x < joint.dim(); ++x) {
    for (std::size_t y = 0; y <= x; ++y) {
      const double c = joint.at(x, y);
      if (y >= spec.k2()) {
        perfect += c;
      } else if (x >= spec.k1()) {
        partial += c;
      }
    }
  }
  return StateDistribution::from_exact(partial, perfect);
}

StateDistribution general_distribution(const ComponentChain& chain,
                                       const SystemSpec& spec) {
  require_matching_size(chain, spec);
  return distribution_from_joint(pgf_bivariate(chain), spec);
}

}  // namespace kofn
