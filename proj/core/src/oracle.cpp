#include "kofn/oracle.hpp"

#include <cmath>
#include <sstream>

#include "kofn/error.hpp"
#include "kofn/random.hpp"

namespace kofn {

namespace {

class TrajectoryWalker {
 public:
  TrajectoryWalker(const ComponentChain& chain, JointPmf& table)
      : chain_(chain), table_(table) {}

  void walk(std::size_t depth, std::size_t prev, double prob,
            std::size_t working, std::size_t perfect) {
    if (depth == chain_.size()) {
      table_(working, perfect) += prob;
      return;
    }
    const TransitionMatrix& m = chain_.at(depth);
    for (std::size_t s = 0; s < kStateCount; ++s) {
      const double p = m(prev, s);
      if (p == 0.0) continue;
      walk(depth + 1, s, prob * p, working + (s >= 1 ? 1 : 0),
           perfect + (s == 2 ? 1 : 0));
    }
  }

 private:
  const ComponentChain& chain_;
  JointPmf& table_;
};

std::size_t draw_state(const std::array<double, 3>& row, double u) noexcept {
  if (u < row[0]) return 0;
  if (u < row[0] + row[1]) return 1;
  return 2;
}

}  // namespace

double JointPmf::sum() const noexcept {
  double acc = 0.0;
  for (double v : table_) acc += v;
  return acc;
}

StateDistribution JointPmf::distribution(const SystemSpec& spec) const {
  if (spec.n() + 1 != dim_) {
    throw Error(ErrorCode::SizeMismatch, "spec n does not match the table");
  }
  double partial = 0.0;
  double perfect = 0.0;
  for (std::size_t x = 0; x < dim_; ++x) {
    for (std::size_t y = 0; y < dim_; ++y) {
      switch (classify(spec, x, y)) {
        case ComponentState::Perfect: perfect += (*this)(x, y); break;
        case ComponentState::Partial: partial += (*this)(x, y); break;
        case ComponentState::Failed: break;
      }
    }
  }
  return StateDistribution::from_exact(partial, perfect);
}

JointPmf brute_force_joint(const ComponentChain& chain) {
  if (chain.size() > kBruteForceLimit) {
    std::ostringstream msg;
    msg << "brute-force enumeration supports n <= " << kBruteForceLimit
        << " (got n = " << chain.size() << ")";
    throw Error(ErrorCode::TooLarge, msg.str());
  }
  JointPmf table(chain.size());
  TrajectoryWalker(chain, table).walk(0, index(chain.start_state()), 1.0, 0, 0);
  return table;
}

ComponentState classify(const SystemSpec& spec, std::size_t working,
                        std::size_t perfect) noexcept {
  if (perfect >= spec.k2()) return ComponentState::Perfect;
  if (working >= spec.k1()) return ComponentState::Partial;
  return ComponentState::Failed;
}

McEstimate monte_carlo(const ComponentChain& chain, const SystemSpec& spec,
                       std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) {
    throw Error(ErrorCode::ZeroSamples, "samples must be at least 1");
  }
  if (spec.n() != chain.size()) {
    throw Error(ErrorCode::SizeMismatch, "spec n does not match the chain");
  }
  Xoshiro256 rng(seed);
  std::array<std::uint64_t, 3> hits{};
  const std::size_t start = index(chain.start_state());
  for (std::uint64_t i = 0; i < samples; ++i) {
    std::size_t prev = start;
    std::size_t working = 0;
    std::size_t perfect = 0;
    for (const TransitionMatrix& m : chain.matrices()) {
      prev = draw_state(m.row(prev), rng.uniform());
      working += prev >= 1 ? 1 : 0;
      perfect += prev == 2 ? 1 : 0;
    }
    ++hits[index(classify(spec, working, perfect))];
  }

  McEstimate est;
  est.samples = samples;
  est.seed = seed;
  const auto total = static_cast<double>(samples);
  for (std::size_t s = 0; s < 3; ++s) {
    est.proportion[s] = static_cast<double>(hits[s]) / total;
  }
  for (std::size_t s = 0; s < 3; ++s) {
    const double p = est.proportion[s];
    est.std_err[s] = std::sqrt(p * (1.0 - p) / total);
  }
  return est;
}

}  // namespace kofn
