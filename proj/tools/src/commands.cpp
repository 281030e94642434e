#include "kofn/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <vector>

#include "kofn/cli/document.hpp"
#include "kofn/cli/fixtures.hpp"
#include "kofn/cli/timing.hpp"
#include "kofn/oracle.hpp"
#include "kofn/pgf.hpp"
#include "kofn/subset.hpp"

namespace kofn::cli {

namespace {

std::string sci(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", value);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

int report(const Error& e, std::ostream& err) {
  err << "kofn: error: " << e.what() << '\n';
  return exit_code_for(e.code());
}

struct BackendResult {
  Method method;
  StateDistribution dist;
  std::optional<McEstimate> estimate;
};

BackendResult run_method(Method method, const SpecDocument& doc,
                         std::uint64_t samples, std::uint64_t seed) {
  switch (method) {
    case Method::Pgf:
      return {method, general_distribution(doc.chain, doc.spec), std::nullopt};
    case Method::PgfUni:
      return {method, increasing_distribution(doc.chain, doc.spec), std::nullopt};
    case Method::Subset:
      return {method, subset_distribution(doc.chain, doc.spec), std::nullopt};
    case Method::Brute:
      return {method, brute_force_joint(doc.chain).distribution(doc.spec),
              std::nullopt};
    case Method::MonteCarlo: {
      const McEstimate est = monte_carlo(doc.chain, doc.spec, samples, seed);
      return {method, StateDistribution::from_exact(est.r1_hat(), est.r2_hat()),
              est};
    }
  }
  return {method, {}, std::nullopt};
}

bool applicable(Method method, const SpecDocument& doc) {
  const std::size_t n = doc.chain.size();
  switch (method) {
    case Method::Pgf:
    case Method::MonteCarlo:
      return true;
    case Method::PgfUni:
      return doc.spec.is_increasing();
    case Method::Subset:
      return doc.spec.is_increasing() ? n <= kSubsetUnivariateLimit
                                      : n <= kSubsetBivariateLimit;
    case Method::Brute:
      return n <= kBruteForceLimit;
  }
  return false;
}

}  // namespace

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedDocument:
    case ErrorCode::UnknownFixture:
      return kExitParse;
    case ErrorCode::TooLarge:
    case ErrorCode::WrongStructure:
      return kExitMethod;
    default:
      return kExitValidation;
  }
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "pgf") return Method::Pgf;
  if (name == "pgf-uni") return Method::PgfUni;
  if (name == "subset") return Method::Subset;
  if (name == "brute") return Method::Brute;
  if (name == "mc") return Method::MonteCarlo;
  return std::nullopt;
}

const char* to_string(Method method) noexcept {
  switch (method) {
    case Method::Pgf: return "pgf";
    case Method::PgfUni: return "pgf-uni";
    case Method::Subset: return "subset";
    case Method::Brute: return "brute";
    case Method::MonteCarlo: return "mc";
  }
  return "unknown";
}

int cmd_compute(const ComputeOptions& opts, std::ostream& out,
                std::ostream& err) {
  try {
    const SpecDocument doc = load_document(opts.file);
    const BackendResult result =
        run_method(opts.method, doc, opts.samples, opts.seed);
    RenderOptions render;
    render.method = to_string(opts.method);
    render.styled = opts.styled;
    render.estimate = result.estimate;
    out << render_distribution(result.dist, doc.spec, opts.format, render);
    return kExitOk;
  } catch (const Error& e) {
    return report(e, err);
  }
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out,
               std::ostream& err) {
  std::vector<BackendResult> results;
  SystemSpec spec(1, 1, 1);
  try {
    const SpecDocument doc = load_document(opts.file);
    spec = doc.spec;
    for (Method m : {Method::Pgf, Method::PgfUni, Method::Subset, Method::Brute,
                     Method::MonteCarlo}) {
      if (applicable(m, doc)) {
        results.push_back(run_method(m, doc, opts.samples, opts.seed));
      }
    }
  } catch (const Error& e) {
    return report(e, err);
  }

  out << "system: n = " << spec.n() << ", k1 = " << spec.k1()
      << ", k2 = " << spec.k2() << " (" << to_string(spec.kind()) << ")\n";
  out << "backends:";
  for (const auto& r : results) out << ' ' << to_string(r.method);
  out << "\nmc: " << opts.samples << " samples, seed " << opts.seed << "\n\n";

  // Max absolute difference over r0, r1, r2, R1, R2.
  out << "max |difference|\n" << pad("", 9);
  for (const auto& r : results) out << pad(to_string(r.method), 10);
  out << '\n';
  for (const auto& a : results) {
    out << pad(to_string(a.method), 9);
    for (const auto& b : results) {
      out << pad(sci(max_abs_difference(a.dist, b.dist)), 10);
    }
    out << '\n';
  }
  out << '\n';

  bool all_ok = true;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (std::size_t j = i + 1; j < results.size(); ++j) {
      const BackendResult& a = results[i];
      const BackendResult& b = results[j];
      const BackendResult* mc = a.estimate ? &a : (b.estimate ? &b : nullptr);
      const BackendResult* exact = mc == &a ? &b : &a;
      bool ok = true;
      std::string bound;
      const double diff = max_abs_difference(a.dist, b.dist);
      if (mc == nullptr) {
        ok = diff <= opts.tolerance;
        bound = sci(opts.tolerance);
      } else {
        // Each exact-state estimate within three standard errors.
        const std::array<double, 3> truth{exact->dist.r0, exact->dist.r1,
                                          exact->dist.r2};
        for (std::size_t s = 0; s < 3; ++s) {
          const double limit =
              std::max(3.0 * mc->estimate->std_err[s], opts.tolerance);
          ok = ok && std::abs(mc->estimate->proportion[s] - truth[s]) <= limit;
        }
        bound = "3 se";
      }
      ++pairs;
      all_ok = all_ok && ok;
      out << pad(std::string(to_string(a.method)) + " vs " + to_string(b.method), 20)
          << pad(sci(diff), 11) << pad(bound, 10) << (ok ? "ok" : "FAIL")
          << '\n';
    }
  }
  out << "\nverify: " << (all_ok ? "PASS" : "FAIL") << " (" << pairs
      << " pairs)\n";
  return all_ok ? kExitOk : kExitMismatch;
}

int cmd_table(const TableOptions& opts, std::ostream& out, std::ostream& err) {
  std::vector<fixtures::FixtureCase> cases;
  try {
    cases = fixtures::builtin(opts.fixture);
  } catch (const Error& e) {
    return report(e, err);
  }

  struct Row {
    const fixtures::FixtureCase* fixture;
    StateDistribution computed;
  };
  std::vector<Row> rows;
  for (const auto& c : cases) {
    rows.push_back({&c, general_distribution(c.chain, c.spec)});
  }
  auto published = [](const fixtures::PublishedRow& p) {
    return std::array<double, 5>{p.r0, p.r1, p.r2, p.R1, p.R2};
  };
  static constexpr std::array<const char*, 5> kNames{"r0", "r1", "r2", "R1", "R2"};

  switch (opts.format) {
    case Format::Csv:
      out << "n,k1,k2,r0,r1,r2,R1,R2,published_r0,published_r1,published_r2,"
             "published_R1,published_R2,max_abs_diff\n";
      for (const Row& r : rows) {
        const auto pub = published(r.fixture->published);
        const auto got = r.computed.values();
        double worst = 0.0;
        out << r.fixture->spec.n() << ',' << r.fixture->spec.k1() << ','
            << r.fixture->spec.k2();
        for (double v : got) out << ',' << fixed10(v);
        for (std::size_t i = 0; i < 5; ++i) {
          out << ',' << fixed10(pub[i]);
          worst = std::max(worst, std::abs(got[i] - pub[i]));
        }
        out << ',' << sci(worst) << '\n';
      }
      break;
    case Format::Json:
      out << "[\n";
      for (std::size_t k = 0; k < rows.size(); ++k) {
        const Row& r = rows[k];
        const auto pub = published(r.fixture->published);
        const auto got = r.computed.values();
        out << "  {\"n\": " << r.fixture->spec.n() << ", \"k1\": "
            << r.fixture->spec.k1() << ", \"k2\": " << r.fixture->spec.k2();
        for (std::size_t i = 0; i < 5; ++i) {
          out << ", \"" << kNames[i] << "\": {\"computed\": " << fixed10(got[i])
              << ", \"published\": " << fixed10(pub[i])
              << ", \"abs_diff\": " << sci(std::abs(got[i] - pub[i])) << "}";
        }
        out << '}' << (k + 1 < rows.size() ? "," : "") << '\n';
      }
      out << "]\n";
      break;
    case Format::Table: {
      const char* bold = opts.styled ? "\x1b[1m" : "";
      const char* reset = opts.styled ? "\x1b[0m" : "";
      out << bold << "fixture " << opts.fixture << reset << '\n';
      for (const Row& r : rows) {
        const auto pub = published(r.fixture->published);
        const auto got = r.computed.values();
        out << '\n' << bold << "n = " << r.fixture->spec.n()
            << ", k1 = " << r.fixture->spec.k1()
            << ", k2 = " << r.fixture->spec.k2() << reset << '\n';
        out << pad("", 11);
        for (const char* name : kNames) out << pad(name, 14);
        out << "\ncomputed   ";
        for (double v : got) out << pad(fixed10(v), 14);
        out << "\npublished  ";
        for (double v : pub) out << pad(fixed10(v), 14);
        out << "\n|diff|     ";
        for (std::size_t i = 0; i < 5; ++i) {
          out << pad(sci(std::abs(got[i] - pub[i])), 14);
        }
        out << '\n';
      }
      break;
    }
  }
  return kExitOk;
}

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.nmax < 2) {
    err << "kofn: error: --nmax must be at least 2\n";
    return kExitParse;
  }
  const auto points = run_bench(opts.nmax, opts.reps, opts.seed);
  out << "method,n,median_ns\n";
  for (const BenchPoint& p : points) {
    out << p.method << ',' << p.n << ',' << std::llround(p.median_ns) << '\n';
  }
  return kExitOk;
}

}  // namespace kofn::cli
