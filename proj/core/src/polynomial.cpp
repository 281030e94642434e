#include "kofn/polynomial.hpp"

namespace kofn {

double UnivariatePoly::evaluate(double t) const noexcept {
  double acc = 0.0;
  for (std::size_t x = coeffs_.size(); x-- > 0;) acc = acc * t + coeffs_[x];
  return acc;
}

double UnivariatePoly::sum() const noexcept {
  double acc = 0.0;
  for (double c : coeffs_) acc += c;
  return acc;
}

double BivariatePoly::evaluate(double t1, double t2) const noexcept {
  double outer = 0.0;
  for (std::size_t x = dim_; x-- > 0;) {
    double inner = 0.0;
    for (std::size_t y = dim_; y-- > 0;) inner = inner * t2 + at(x, y);
    outer = outer * t1 + inner;
  }
  return outer;
}

double BivariatePoly::sum() const noexcept {
  double acc = 0.0;
  for (double c : coeffs_) acc += c;
  return acc;
}

UnivariatePoly BivariatePoly::marginal_first() const {
  UnivariatePoly out(dim_);
  for (std::size_t x = 0; x < dim_; ++x) {
    for (std::size_t y = 0; y < dim_; ++y) out[x] += at(x, y);
  }
  return out;
}

UnivariatePoly BivariatePoly::marginal_second() const {
  UnivariatePoly out(dim_);
  for (std::size_t x = 0; x < dim_; ++x) {
    for (std::size_t y = 0; y < dim_; ++y) out[y] += at(x, y);
  }
  return out;
}

}  // namespace kofn
