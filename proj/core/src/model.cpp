#include "kofn/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kofn/error.hpp"

namespace kofn {

namespace {

double clamp_noise(double value) noexcept {
  return (value < 0.0 && value > -kClampTolerance) ? 0.0 : value;
}

}  // namespace

TransitionMatrix TransitionMatrix::from_rows(const Matrix3& rows) {
  for (std::size_t r = 0; r < kStateCount; ++r) {
    double sum = 0.0;
    for (std::size_t c = 0; c < kStateCount; ++c) {
      const double p = rows[r][c];
      if (!std::isfinite(p)) {
        std::ostringstream msg;
        msg << "row " << r << ", column " << c << ": entry is not finite";
        throw Error(ErrorCode::NonFiniteEntry, msg.str());
      }
      if (p < 0.0) {
        std::ostringstream msg;
        msg << "row " << r << ", column " << c << ": entry " << p
            << " is negative";
        throw Error(ErrorCode::NegativeEntry, msg.str());
      }
      if (p > 1.0) {
        std::ostringstream msg;
        msg << "row " << r << ", column " << c << ": entry " << p
            << " exceeds 1";
        throw Error(ErrorCode::EntryAboveOne, msg.str());
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > kRowSumTolerance) {
      std::ostringstream msg;
      msg.precision(12);
      msg << "row " << r << " sums to " << sum << " (expected 1 within "
          << kRowSumTolerance << ")";
      throw Error(ErrorCode::RowSumViolation, msg.str());
    }
  }
  return TransitionMatrix(rows);
}

TransitionMatrix TransitionMatrix::identity() {
  return TransitionMatrix(Matrix3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
}

TransitionMatrix validate_matrix(const Matrix3& rows) {
  return TransitionMatrix::from_rows(rows);
}

ComponentChain::ComponentChain(std::vector<TransitionMatrix> matrices,
                               ComponentState start)
    : matrices_(std::move(matrices)), start_(start) {
  if (matrices_.empty()) {
    throw Error(ErrorCode::ZeroLength, "a chain needs at least one component");
  }
  if (index(start_) >= kStateCount) {
    throw Error(ErrorCode::IndexOutOfRange, "start state must be 0, 1 or 2");
  }
}

ComponentChain homogeneous_chain(const TransitionMatrix& matrix, std::size_t n,
                                 ComponentState start) {
  if (n == 0) {
    throw Error(ErrorCode::ZeroLength, "a chain needs at least one component");
  }
  return ComponentChain(std::vector<TransitionMatrix>(n, matrix), start);
}

ComponentChain segmented_chain(std::span<const Segment> segments,
                               std::size_t n, ComponentState start) {
  if (n == 0) {
    throw Error(ErrorCode::ZeroLength, "a chain needs at least one component");
  }
  std::vector<const Segment*> order;
  order.reserve(segments.size());
  for (const Segment& s : segments) {
    if (s.from < 1 || s.to > n || s.from > s.to) {
      std::ostringstream msg;
      msg << "segment [" << s.from << ", " << s.to
          << "] is outside components 1.." << n;
      throw Error(ErrorCode::IndexOutOfRange, msg.str());
    }
    order.push_back(&s);
  }
  std::sort(order.begin(), order.end(),
            [](const Segment* a, const Segment* b) { return a->from < b->from; });

  std::vector<TransitionMatrix> matrices;
  matrices.reserve(n);
  std::size_t next = 1;  // first component not yet covered
  for (const Segment* s : order) {
    if (s->from < next) {
      std::ostringstream msg;
      msg << "segment [" << s->from << ", " << s->to
          << "] overlaps an earlier segment";
      throw Error(ErrorCode::OverlappingSegments, msg.str());
    }
    if (s->from > next) {
      std::ostringstream msg;
      msg << "components " << next << ".." << s->from - 1
          << " are not covered by any segment";
      throw Error(ErrorCode::GapInCoverage, msg.str());
    }
    matrices.insert(matrices.end(), s->to - s->from + 1, s->matrix);
    next = s->to + 1;
  }
  if (next != n + 1) {
    std::ostringstream msg;
    msg << "components " << next << ".." << n
        << " are not covered by any segment";
    throw Error(ErrorCode::GapInCoverage, msg.str());
  }
  return ComponentChain(std::move(matrices), start);
}

SystemSpec::SystemSpec(std::size_t n, std::size_t k1, std::size_t k2)
    : n_(n), k1_(k1), k2_(k2) {
  if (n == 0) {
    throw Error(ErrorCode::ZeroLength, "n must be at least 1");
  }
  auto check = [n](std::size_t k, const char* name) {
    if (k < 1 || k > n) {
      std::ostringstream msg;
      msg << name << " = " << k << " must satisfy 1 <= " << name
          << " <= n = " << n;
      throw Error(ErrorCode::InvalidThreshold, msg.str());
    }
  };
  check(k1, "k1");
  check(k2, "k2");
}

const char* to_string(StructureKind kind) noexcept {
  switch (kind) {
    case StructureKind::Increasing: return "increasing";
    case StructureKind::Constant: return "constant";
    case StructureKind::Decreasing: return "decreasing";
  }
  return "unknown";
}

StateDistribution StateDistribution::from_cumulative(double at_least_one,
                                                     double perfect) {
  StateDistribution d;
  d.R1 = clamp_noise(at_least_one);
  d.R2 = clamp_noise(perfect);
  d.r2 = d.R2;
  d.r1 = clamp_noise(d.R1 - d.R2);
  d.r0 = clamp_noise(1.0 - d.R1);
  return d;
}

StateDistribution StateDistribution::from_exact(double partial,
                                                double perfect) {
  StateDistribution d;
  d.r1 = clamp_noise(partial);
  d.r2 = clamp_noise(perfect);
  d.r0 = clamp_noise(1.0 - d.r1 - d.r2);
  d.R2 = d.r2;
  d.R1 = d.r1 + d.r2;
  return d;
}

bool StateDistribution::consistent(double sum_tolerance) const noexcept {
  if (std::abs(r0 + r1 + r2 - 1.0) > sum_tolerance) return false;
  if (R2 != r2) return false;
  if (std::abs(R1 - (r1 + r2)) > 1e-12) return false;
  for (double v : values()) {
    if (!(v >= -kClampTolerance && v <= 1.0 + kClampTolerance)) return false;
  }
  return true;
}

double max_abs_difference(const StateDistribution& a,
                          const StateDistribution& b) noexcept {
  const auto va = a.values();
  const auto vb = b.values();
  double worst = 0.0;
  for (std::size_t i = 0; i < va.size(); ++i) {
    worst = std::max(worst, std::abs(va[i] - vb[i]));
  }
  return worst;
}

}  // namespace kofn
