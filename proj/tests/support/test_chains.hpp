#pragma once

// Test-only chain generators. They use std::mt19937_64 so property tests do
// not depend on the library's own random module.

#include <random>
#include <vector>

#include "kofn/model.hpp"

namespace kofn::testing {

inline TransitionMatrix random_matrix(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Matrix3 rows{};
  for (auto& row : rows) {
    const double style = unit(gen);
    if (style < 0.05) {
      // Point mass.
      row = {0.0, 0.0, 0.0};
      row[std::uniform_int_distribution<int>(0, 2)(gen)] = 1.0;
      continue;
    }
    double sum = 0.0;
    for (double& p : row) {
      p = (style < 0.25 && unit(gen) < 0.3) ? 0.0 : unit(gen);
      sum += p;
    }
    if (sum == 0.0) {
      row = {1.0, 0.0, 0.0};
      continue;
    }
    for (double& p : row) p /= sum;
  }
  return TransitionMatrix::from_rows(rows);
}

inline ComponentState random_start(std::mt19937_64& gen) {
  return static_cast<ComponentState>(std::uniform_int_distribution<int>(0, 2)(gen));
}

inline ComponentChain random_chain(std::mt19937_64& gen, std::size_t n) {
  std::vector<TransitionMatrix> matrices;
  for (std::size_t u = 0; u < n; ++u) matrices.push_back(random_matrix(gen));
  return ComponentChain(std::move(matrices), random_start(gen));
}

inline std::size_t random_size(std::mt19937_64& gen, std::size_t lo,
                               std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(gen);
}

/// Every legal (k1, k2) for n components.
inline std::vector<SystemSpec> all_specs(std::size_t n) {
  std::vector<SystemSpec> out;
  for (std::size_t k1 = 1; k1 <= n; ++k1) {
    for (std::size_t k2 = 1; k2 <= n; ++k2) out.emplace_back(n, k1, k2);
  }
  return out;
}

}  // namespace kofn::testing
