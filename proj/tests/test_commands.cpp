#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "kofn/cli/commands.hpp"

namespace kofn::cli {
namespace {

const std::filesystem::path kDataDir = KOFN_DATA_DIR;

struct CmdResult {
  int code;
  std::string out;
  std::string err;
};

CmdResult compute(const std::filesystem::path& file, Method method,
            Format format = Format::Csv, std::uint64_t samples = 20'000) {
  ComputeOptions opts;
  opts.file = file;
  opts.method = method;
  opts.format = format;
  opts.samples = samples;
  std::ostringstream out, err;
  const int code = cmd_compute(opts, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::path(::testing::TempDir()) / name;
  std::ofstream(path) << text;
  return path;
}

std::size_t count_lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

TEST(Compute, ExampleTable) {
  const CmdResult r = compute(kDataDir / "example1.json", Method::Pgf, Format::Table);
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("r1        0.7505000000"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("R2        0.1815000000"), std::string::npos) << r.out;
  EXPECT_TRUE(r.err.empty());
}

TEST(Compute, ExactBackendsAgreeOnOutput) {
  const CmdResult pgf = compute(kDataDir / "example1.json", Method::Pgf);
  for (Method m : {Method::PgfUni, Method::Subset, Method::Brute}) {
    const CmdResult other = compute(kDataDir / "example1.json", m);
    EXPECT_EQ(other.code, kExitOk) << other.err;
    EXPECT_EQ(other.out, pgf.out) << to_string(m);
  }
  const CmdResult dec_pgf = compute(kDataDir / "example2.json", Method::Pgf);
  const CmdResult dec_subset = compute(kDataDir / "example2.json", Method::Subset);
  const CmdResult dec_brute = compute(kDataDir / "example2.json", Method::Brute);
  EXPECT_EQ(dec_pgf.out, dec_subset.out);
  EXPECT_EQ(dec_pgf.out, dec_brute.out);
}

TEST(Compute, MonteCarloIsByteDeterministic) {
  const CmdResult a = compute(kDataDir / "table1_n20.json", Method::MonteCarlo, Format::Json);
  const CmdResult b = compute(kDataDir / "table1_n20.json", Method::MonteCarlo, Format::Json);
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"std_err\""), std::string::npos);
}

TEST(Compute, MethodConstraints) {
  const CmdResult uni = compute(kDataDir / "example2.json", Method::PgfUni);
  EXPECT_EQ(uni.code, kExitMethod);
  EXPECT_FALSE(uni.err.empty());
  EXPECT_EQ(compute(kDataDir / "table1_n20.json", Method::Brute).code, kExitMethod);
  const auto big = write_temp("dec13.json",
                              R"({"n": 13, "k1": 3, "k2": 2,
                                  "homogeneous": [[0.5,0.3,0.2],[0.2,0.5,0.3],[0.1,0.3,0.6]]})");
  EXPECT_EQ(compute(big, Method::Subset).code, kExitMethod);
  EXPECT_EQ(compute(big, Method::Pgf).code, kExitOk);
}

TEST(Compute, ValidationAndParseErrors) {
  const CmdResult bad = compute(kDataDir / "bad_row_sum.json", Method::Pgf);
  EXPECT_EQ(bad.code, kExitValidation);
  EXPECT_NE(bad.err.find("component 2: row 1 sums to 0.8"), std::string::npos) << bad.err;
  EXPECT_TRUE(bad.out.empty());
  EXPECT_EQ(compute(kDataDir / "missing.json", Method::Pgf).code, kExitParse);
  EXPECT_EQ(compute(write_temp("broken.json", "{\"n\": 3,"), Method::Pgf).code, kExitParse);
}

TEST(Compute, IdentityChainIsFailed) {
  const CmdResult r = compute(kDataDir / "identity.json", Method::Pgf);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find(",1.0000000000,0.0000000000,0.0000000000,"), std::string::npos)
      << r.out;
}

TEST(Verify, ExamplePasses) {
  VerifyOptions opts;
  opts.file = kDataDir / "example1.json";
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify(opts, out, err), kExitOk) << out.str();
  EXPECT_NE(out.str().find("verify: PASS (10 pairs)"), std::string::npos) << out.str();
}

TEST(Verify, LargeSystemUsesApplicableBackends) {
  VerifyOptions opts;
  opts.file = kDataDir / "table1_n20.json";
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify(opts, out, err), kExitOk) << out.str();
  EXPECT_NE(out.str().find("backends: pgf mc"), std::string::npos) << out.str();
  EXPECT_NE(out.str().find("verify: PASS (1 pairs)"), std::string::npos) << out.str();
}

TEST(Verify, BadDocument) {
  VerifyOptions opts;
  opts.file = kDataDir / "bad_row_sum.json";
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify(opts, out, err), kExitValidation);
}

TEST(Table, FixtureCsv) {
  TableOptions opts;
  opts.fixture = "table1";
  opts.format = Format::Csv;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_table(opts, out, err), kExitOk);
  EXPECT_EQ(count_lines(out.str()), 14u);
  EXPECT_EQ(out.str().rfind("n,k1,k2,r0,r1,r2,R1,R2,published_r0", 0), 0u);
}

TEST(Table, AllFixturesRender) {
  for (auto name : {"example1", "example2", "table1"}) {
    for (Format f : {Format::Table, Format::Csv, Format::Json}) {
      TableOptions opts;
      opts.fixture = name;
      opts.format = f;
      std::ostringstream out, err;
      EXPECT_EQ(cmd_table(opts, out, err), kExitOk) << name;
      EXPECT_FALSE(out.str().empty());
    }
  }
}

TEST(Table, UnknownFixture) {
  TableOptions opts;
  opts.fixture = "nope";
  std::ostringstream out, err;
  EXPECT_EQ(cmd_table(opts, out, err), kExitParse);
  EXPECT_FALSE(err.str().empty());
}

TEST(Bench, SmallGrid) {
  BenchOptions opts;
  opts.nmax = 4;
  opts.reps = 0;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_bench(opts, out, err), kExitOk);
  EXPECT_EQ(out.str().rfind("method,n,median_ns\n", 0), 0u);
  EXPECT_NE(out.str().find("pgf-uni,4,"), std::string::npos) << out.str();
  EXPECT_NE(out.str().find("brute,4,"), std::string::npos) << out.str();
}

TEST(Bench, RejectsTinyGrid) {
  BenchOptions opts;
  opts.nmax = 1;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_bench(opts, out, err), kExitParse);
}

TEST(Methods, NamesRoundTrip) {
  for (Method m : {Method::Pgf, Method::PgfUni, Method::Subset, Method::Brute,
                   Method::MonteCarlo}) {
    EXPECT_EQ(parse_method(to_string(m)), m);
  }
  EXPECT_FALSE(parse_method("exact").has_value());
}

}  // namespace
}  // namespace kofn::cli
