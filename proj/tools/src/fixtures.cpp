#include "kofn/cli/fixtures.hpp"

#include <algorithm>
#include <string>

#include "kofn/error.hpp"

namespace kofn::fixtures {

namespace {

constexpr std::array<PublishedRow, 13> kTable1{{
    {10, 4, 3, 0.0002071763, 0.13342191280, 0.8663709109, 0.9997928237, 0.8663709109},
    {10, 5, 3, 0.0013698082, 0.13225928090, 0.8663709109, 0.9986301918, 0.8663709109},
    {10, 6, 4, 0.0084395255, 0.26531485150, 0.7262456230, 0.9915604745, 0.7262456230},
    {10, 6, 5, 0.0094690450, 0.44387722540, 0.5466537296, 0.9905309550, 0.5466537296},
    {15, 5, 4, 0.0000010609, 0.07440229886, 0.9255966402, 0.9999989391, 0.9255966402},
    {15, 7, 5, 0.0000831322, 0.15466683570, 0.8452500321, 0.9999168678, 0.8452500321},
    {15, 8, 6, 0.0005412759, 0.27127122260, 0.7281875015, 0.9994587241, 0.7281875015},
    {15, 8, 7, 0.0005575429, 0.41640144220, 0.5830410149, 0.9994424571, 0.5830410149},
    {20, 7, 6, 0.0000000783, 0.06870243220, 0.9312974895, 0.9999999217, 0.9312974895},
    {20, 9, 7, 0.0000046993, 0.13104703960, 0.8689482611, 0.9999953007, 0.8689482611},
    {20, 10, 9, 0.0000293583, 0.33736341170, 0.6626072300, 0.9999706417, 0.6626072300},
    {20, 12, 10, 0.0007354415, 0.46896212730, 0.5303024312, 0.9992645585, 0.5303024312},
    {20, 15, 10, 0.0309837102, 0.43871385880, 0.5303024312, 0.9690162900, 0.5303024312},
}};

}  // namespace

ComponentChain example_chain() {
  return ComponentChain(
      {
          TransitionMatrix::from_rows(
              {{{0.30, 0.40, 0.30}, {0.20, 0.50, 0.30}, {0.10, 0.30, 0.60}}}),
          TransitionMatrix::from_rows(
              {{{0.20, 0.45, 0.35}, {0.25, 0.50, 0.25}, {0.10, 0.35, 0.55}}}),
          TransitionMatrix::from_rows(
              {{{0.25, 0.50, 0.25}, {0.20, 0.55, 0.25}, {0.15, 0.30, 0.55}}}),
      },
      ComponentState::Perfect);
}

SystemSpec example1_spec() { return SystemSpec(3, 2, 3); }
SystemSpec example2_spec() { return SystemSpec(3, 3, 2); }

PublishedRow example1_published() {
  return {3, 2, 3, 0.06800, 0.75050, 0.18150, 0.93200, 0.18150};
}

PublishedRow example2_published() {
  return {3, 3, 2, 0.28405, 0.25800, 0.45795, 0.25800 + 0.45795, 0.45795};
}

ComponentChain table1_chain(std::size_t n) {
  const auto early = TransitionMatrix::from_rows(
      {{{0.25, 0.45, 0.30}, {0.15, 0.50, 0.35}, {0.10, 0.30, 0.60}}});
  const auto middle = TransitionMatrix::from_rows(
      {{{0.15, 0.55, 0.30}, {0.15, 0.50, 0.35}, {0.10, 0.30, 0.60}}});
  const auto late = TransitionMatrix::from_rows(
      {{{0.20, 0.55, 0.25}, {0.10, 0.45, 0.45}, {0.05, 0.30, 0.65}}});
  const std::array<Segment, 3> all{{{1, 5, early}, {6, 15, middle}, {16, 20, late}}};

  if (n < 1 || n > 20) {
    throw Error(ErrorCode::IndexOutOfRange,
                "the segmented reference chain has 1..20 components");
  }
  std::vector<Segment> used;
  for (const Segment& s : all) {
    if (s.from > n) break;
    used.push_back({s.from, std::min(s.to, n), s.matrix});
  }
  return segmented_chain(used, n, ComponentState::Perfect);
}

std::span<const PublishedRow> table1_published() { return kTable1; }

std::vector<FixtureCase> builtin(std::string_view name) {
  std::vector<FixtureCase> out;
  if (name == "example1") {
    out.push_back({example_chain(), example1_spec(), example1_published()});
  } else if (name == "example2") {
    out.push_back({example_chain(), example2_spec(), example2_published()});
  } else if (name == "table1") {
    for (const PublishedRow& row : kTable1) {
      out.push_back({table1_chain(row.n), SystemSpec(row.n, row.k1, row.k2), row});
    }
  } else {
    throw Error(ErrorCode::UnknownFixture,
                "unknown fixture '" + std::string(name) +
                    "' (expected example1, example2 or table1)");
  }
  return out;
}

}  // namespace kofn::fixtures
