#pragma once

/// @file polynomial.hpp
/// Dense coefficient stores for generating functions.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "kofn/model.hpp"

namespace kofn {

/// Dense polynomial in t; coefficient x multiplies t^x.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  /// Zero polynomial with `length` coefficients (degree bound length - 1).
  explicit UnivariatePoly(std::size_t length) : coeffs_(length, 0.0) {}
  explicit UnivariatePoly(std::vector<double> coeffs)
      : coeffs_(std::move(coeffs)) {}

  std::size_t length() const noexcept { return coeffs_.size(); }
  std::size_t degree_bound() const noexcept {
    return coeffs_.empty() ? 0 : coeffs_.size() - 1;
  }

  double operator[](std::size_t x) const noexcept { return coeffs_[x]; }
  double& operator[](std::size_t x) noexcept { return coeffs_[x]; }

  std::span<const double> coeffs() const noexcept { return coeffs_; }
  std::span<double> coeffs() noexcept { return coeffs_; }

  double evaluate(double t) const noexcept;
  /// Value at t = 1, summed in ascending index order.
  double sum() const noexcept;

  friend bool operator==(const UnivariatePoly&,
                         const UnivariatePoly&) = default;

 private:
  std::vector<double> coeffs_;
};

/// Dense polynomial in (t1, t2) over a square (dim x dim) coefficient grid;
/// at(x, y) multiplies t1^x t2^y. Stored row-major by x.
class BivariatePoly {
 public:
  BivariatePoly() = default;
  explicit BivariatePoly(std::size_t dim) : dim_(dim), coeffs_(dim * dim, 0.0) {}

  std::size_t dim() const noexcept { return dim_; }

  double at(std::size_t x, std::size_t y) const noexcept {
    return coeffs_[x * dim_ + y];
  }
  double& at(std::size_t x, std::size_t y) noexcept {
    return coeffs_[x * dim_ + y];
  }

  std::span<const double> coeffs() const noexcept { return coeffs_; }
  std::span<double> coeffs() noexcept { return coeffs_; }

  double evaluate(double t1, double t2) const noexcept;
  double sum() const noexcept;

  /// Sum over y: the polynomial Gamma(t, 1) in t1.
  UnivariatePoly marginal_first() const;
  /// Sum over x: the polynomial Gamma(1, t) in t2.
  UnivariatePoly marginal_second() const;

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> coeffs_;
};

/// 3x3 matrix of polynomials sharing one coefficient capacity.
template <typename Poly>
class PolyMatrix3 {
 public:
  template <typename... Args>
  explicit PolyMatrix3(const Args&... capacity) {
    entries_.fill(Poly(capacity...));
  }

  const Poly& operator()(std::size_t row, std::size_t col) const noexcept {
    return entries_[row * 3 + col];
  }
  Poly& operator()(std::size_t row, std::size_t col) noexcept {
    return entries_[row * 3 + col];
  }

  /// Numeric matrix obtained by substituting values for the variables.
  template <typename... Point>
  Matrix3 evaluate(Point... point) const {
    Matrix3 out{};
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) {
        out[r][c] = (*this)(r, c).evaluate(point...);
      }
    }
    return out;
  }

 private:
  std::array<Poly, 9> entries_;
};

}  // namespace kofn
