#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "kofn/cli/commands.hpp"

namespace {

using kofn::cli::Format;
using kofn::cli::Method;

const std::map<std::string, Format> kFormats{
    {"table", Format::Table}, {"csv", Format::Csv}, {"json", Format::Json}};

const std::map<std::string, Method> kMethods{{"pgf", Method::Pgf},
                                             {"pgf-uni", Method::PgfUni},
                                             {"subset", Method::Subset},
                                             {"brute", Method::Brute},
                                             {"mc", Method::MonteCarlo}};

// Maps a name from `table` to the enum's integer spelling, which CLI11
// then converts. Unknown names produce a one-line error listing the choices.
template <typename E>
CLI::Validator one_of(const std::map<std::string, E>& table) {
  return CLI::Validator(
      [&table](std::string& input) -> std::string {
        const auto it = table.find(CLI::detail::to_lower(input));
        if (it != table.end()) {
          input = std::to_string(static_cast<int>(it->second));
          return {};
        }
        std::string choices;
        for (const auto& [name, value] : table) {
          choices += (choices.empty() ? "" : ", ") + name;
        }
        return "unknown value '" + input + "' (expected one of: " + choices + ")";
      },
      "NAME");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"State distributions of three-state k-out-of-n:G systems with "
               "Markov-dependent components"};
  app.require_subcommand(1);

  kofn::cli::ComputeOptions compute;
  std::string compute_file;
  auto* c = app.add_subcommand("compute", "Compute r0, r1, r2, R1, R2 for a system document");
  c->add_option("file", compute_file, "JSON system document")->required();
  c->add_option("--method", compute.method, "pgf | pgf-uni | subset | brute | mc")
      ->transform(one_of(kMethods));
  c->add_option("--samples", compute.samples, "Monte Carlo sample count")
      ->check(CLI::PositiveNumber);
  c->add_option("--seed", compute.seed, "Monte Carlo seed");
  c->add_option("--format", compute.format, "table | csv | json")
      ->transform(one_of(kFormats));

  kofn::cli::VerifyOptions verify;
  std::string verify_file;
  auto* v = app.add_subcommand("verify", "Cross-check every applicable backend");
  v->add_option("file", verify_file, "JSON system document")->required();
  v->add_option("--tolerance", verify.tolerance, "Bound for exact backend pairs");
  v->add_option("--samples", verify.samples, "Monte Carlo sample count")
      ->check(CLI::PositiveNumber);
  v->add_option("--seed", verify.seed, "Monte Carlo seed");

  kofn::cli::TableOptions table;
  auto* t = app.add_subcommand("table", "Recompute a built-in reference system");
  t->add_option("fixture", table.fixture, "example1 | example2 | table1")->required();
  t->add_option("--format", table.format, "table | csv | json")
      ->transform(one_of(kFormats));

  kofn::cli::BenchOptions bench;
  auto* b = app.add_subcommand("bench", "Time the backends over a grid of n");
  b->add_option("--nmax", bench.nmax, "Largest n in the grid");
  b->add_option("--reps", bench.reps, "Timed batches per point (0 means 1)");
  b->add_option("--seed", bench.seed, "Seed of the random chain");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kofn::cli::kExitParse;
  }

  const bool styled = kofn::cli::styling_enabled();
  if (*c) {
    compute.file = compute_file;
    compute.styled = styled;
    return kofn::cli::cmd_compute(compute, std::cout, std::cerr);
  }
  if (*v) {
    verify.file = verify_file;
    return kofn::cli::cmd_verify(verify, std::cout, std::cerr);
  }
  if (*t) {
    table.styled = styled;
    return kofn::cli::cmd_table(table, std::cout, std::cerr);
  }
  return kofn::cli::cmd_bench(bench, std::cout, std::cerr);
}
