#pragma once

// Subcommand implementations behind the `kofn` executable. Each returns the
// process exit code and writes only to the given streams.
//
// Exit codes:
//   0  success
//   1  verify: at least one backend pair disagreed
//   2  parse/usage error (malformed document, unknown option or fixture)
//   3  validation error (bad probabilities, thresholds, segment coverage)
//   4  method constraint (size guard exceeded, pgf-uni with k1 > k2)

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>

#include "kofn/cli/render.hpp"
#include "kofn/error.hpp"

namespace kofn::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitParse = 2,
  kExitValidation = 3,
  kExitMethod = 4,
};

int exit_code_for(ErrorCode code) noexcept;

enum class Method { Pgf, PgfUni, Subset, Brute, MonteCarlo };

std::optional<Method> parse_method(std::string_view name);
const char* to_string(Method method) noexcept;

inline constexpr std::uint64_t kDefaultSeed = 20240607;

struct ComputeOptions {
  std::filesystem::path file;
  Method method = Method::Pgf;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = kDefaultSeed;
  Format format = Format::Table;
  bool styled = false;
};

struct VerifyOptions {
  std::filesystem::path file;
  double tolerance = 1e-9;
  std::uint64_t samples = 200'000;
  std::uint64_t seed = kDefaultSeed;
};

struct TableOptions {
  std::string fixture;
  Format format = Format::Table;
  bool styled = false;
};

struct BenchOptions {
  std::size_t nmax = 512;
  std::size_t reps = 5;
  std::uint64_t seed = kDefaultSeed;
};

int cmd_compute(const ComputeOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_table(const TableOptions& opts, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace kofn::cli
