#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "kofn/model.hpp"
#include "kofn/oracle.hpp"

namespace kofn::cli {

enum class Format { Table, Csv, Json };

std::optional<Format> parse_format(std::string_view name);

inline constexpr std::string_view kCsvHeader = "n,k1,k2,r0,r1,r2,R1,R2";

/// Fixed-point with 10 decimals; tiny negatives print as zero.
std::string fixed10(double value);

/// True when stdout is a terminal and NO_COLOR is unset or empty.
bool styling_enabled();

struct RenderOptions {
  std::string method = "pgf";
  bool styled = false;
  /// Monte Carlo standard errors, shown in table and json output.
  std::optional<McEstimate> estimate;
};

/// One system's distribution. CSV is a header line plus one row; every
/// format ends with a newline.
std::string render_distribution(const StateDistribution& dist,
                                const SystemSpec& spec, Format format,
                                const RenderOptions& options = {});

}  // namespace kofn::cli
