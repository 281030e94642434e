#include "kofn/cli/render.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <unistd.h>

namespace kofn::cli {

namespace {

constexpr const char* kBold = "\x1b[1m";
constexpr const char* kReset = "\x1b[0m";

std::string sci(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", value);
  return buf;
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "table") return Format::Table;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  return std::nullopt;
}

std::string fixed10(double value) {
  if (value < 0.0 && value > -5e-11) value = 0.0;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.10f", value);
  return buf;
}

bool styling_enabled() {
  const char* no_color = std::getenv("NO_COLOR");
  if (no_color != nullptr && no_color[0] != '\0') return false;
  return ::isatty(STDOUT_FILENO) != 0;
}

std::string render_distribution(const StateDistribution& dist,
                                const SystemSpec& spec, Format format,
                                const RenderOptions& options) {
  std::ostringstream out;
  const auto& est = options.estimate;
  switch (format) {
    case Format::Csv:
      out << kCsvHeader << '\n'
          << spec.n() << ',' << spec.k1() << ',' << spec.k2() << ','
          << fixed10(dist.r0) << ',' << fixed10(dist.r1) << ','
          << fixed10(dist.r2) << ',' << fixed10(dist.R1) << ','
          << fixed10(dist.R2) << '\n';
      break;
    case Format::Json:
      out << "{\"n\": " << spec.n() << ", \"k1\": " << spec.k1()
          << ", \"k2\": " << spec.k2() << ", \"kind\": \""
          << to_string(spec.kind()) << "\", \"method\": \"" << options.method
          << "\", \"r0\": " << fixed10(dist.r0)
          << ", \"r1\": " << fixed10(dist.r1)
          << ", \"r2\": " << fixed10(dist.r2)
          << ", \"R1\": " << fixed10(dist.R1)
          << ", \"R2\": " << fixed10(dist.R2);
      if (est) {
        out << ", \"samples\": " << est->samples << ", \"seed\": " << est->seed
            << ", \"std_err\": [" << fixed10(est->std_err[0]) << ", "
            << fixed10(est->std_err[1]) << ", " << fixed10(est->std_err[2])
            << "]";
      }
      out << "}\n";
      break;
    case Format::Table: {
      const char* bold = options.styled ? kBold : "";
      const char* reset = options.styled ? kReset : "";
      out << bold << "n = " << spec.n() << ", k1 = " << spec.k1()
          << ", k2 = " << spec.k2() << " (" << to_string(spec.kind())
          << "), method " << options.method << reset << '\n';
      if (est) {
        out << "samples " << est->samples << ", seed " << est->seed << '\n';
      }
      out << bold << "quantity  probability" << (est ? "   std.err" : "")
          << reset << '\n';
      const std::pair<const char*, double> rows[] = {
          {"r0", dist.r0}, {"r1", dist.r1}, {"r2", dist.r2},
          {"R1", dist.R1}, {"R2", dist.R2}};
      for (std::size_t i = 0; i < 5; ++i) {
        out << rows[i].first << "        " << fixed10(rows[i].second);
        if (est && i < 3) out << "  " << sci(est->std_err[i]);
        out << '\n';
      }
      break;
    }
  }
  return out.str();
}

}  // namespace kofn::cli
