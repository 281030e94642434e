#pragma once

// Built-in reference systems with their published state distributions:
// a three-component example evaluated as an increasing system (k1=2, k2=3)
// and as a decreasing one (k1=3, k2=2), and a 20-component segmented chain
// evaluated at 13 (n, k1, k2) settings for n in {10, 15, 20}.
//
// All published numbers were computed with the virtual predecessor of
// component 1 in state 2, so these chains start in ComponentState::Perfect.

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kofn/model.hpp"

namespace kofn::fixtures {

struct PublishedRow {
  std::size_t n;
  std::size_t k1;
  std::size_t k2;
  double r0;
  double r1;
  double r2;
  double R1;
  double R2;
};

struct JointTerm {
  std::size_t x;  ///< exponent of t1 (components in state >= 1)
  std::size_t y;  ///< exponent of t2 (components in state 2)
  double coeff;
};

/// Three-component chain used by both small examples.
ComponentChain example_chain();
SystemSpec example1_spec();
SystemSpec example2_spec();

/// Published coefficients of the univariate generating functions for
/// levels 1 and 2, t^0..t^3.
inline constexpr std::array<double, 4> kExample1Working{0.0050, 0.06300,
                                                        0.29975, 0.63225};
inline constexpr std::array<double, 4> kExample1Perfect{0.21750, 0.32450,
                                                        0.27650, 0.18150};

/// The ten published nonzero joint coefficients.
inline constexpr std::array<JointTerm, 10> kExample2Joint{{
    {0, 0, 0.0050},
    {3, 3, 0.18150},
    {3, 2, 0.19275},
    {3, 1, 0.17550},
    {3, 0, 0.0825},
    {2, 2, 0.08375},
    {2, 1, 0.12375},
    {2, 0, 0.09225},
    {1, 0, 0.03775},
    {1, 1, 0.02525},
}};

PublishedRow example1_published();
/// r2 and r0 are printed as 0.45795 and 0.28405, which disagree with the
/// published joint coefficients (0.45800 and 0.28400) by 5e-5. R1 and R2
/// are not printed; they are derived from the printed r1 and r2.
PublishedRow example2_published();

/// First n components of the 20-component segmented chain (n <= 20).
ComponentChain table1_chain(std::size_t n);
std::span<const PublishedRow> table1_published();

struct FixtureCase {
  ComponentChain chain;
  SystemSpec spec;
  PublishedRow published;
};

/// "example1", "example2" or "table1"; throws Error(UnknownFixture).
std::vector<FixtureCase> builtin(std::string_view name);

inline constexpr std::array<std::string_view, 3> kFixtureNames{
    "example1", "example2", "table1"};

}  // namespace kofn::fixtures
