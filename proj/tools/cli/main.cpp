// oscgauss command-line front end.
//
// Exit codes: 0 success, 1 usage error, 2 the requested rule or polynomial
// does not exist, 3 numerical failure.

#include "oscgauss/analysis.hpp"
#include "oscgauss/checks.hpp"
#include "oscgauss/errors.hpp"
#include "oscgauss/integrand.hpp"
#include "oscgauss/roots.hpp"
#include "oscgauss/rules.hpp"
#include "oscgauss/serialize.hpp"

#include <CLI11.hpp>

#include <cfloat>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace og = oscgauss;

namespace {

enum Exit { kOk = 0, kUsage = 1, kNonExistent = 2, kNumerical = 3 };

struct Globals {
  long precision = og::kDefaultPrecisionBits;
  int jobs = 1;
  std::string out;
  std::string format;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Output goes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

// x.csv -> x.<tag>.csv
std::string sidecar_path(const std::string& out, const std::string& tag) {
  if (out.empty()) return {};
  const auto dot = out.rfind('.');
  const auto slash = out.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return out + "." + tag + ".csv";
  return out.substr(0, dot) + "." + tag + out.substr(dot);
}

og::Real parse_omega(const std::string& text) {
  try {
    return og::Real(std::string_view(text));
  } catch (const std::invalid_argument&) {
    throw UsageError("malformed frequency '" + text + "'");
  }
}

std::string format_or(const Globals& g, const std::string& fallback) { return g.format.empty() ? fallback : g.format; }

void write_json(const Globals& g, const std::string& json) {
  Sink sink(g.out);
  sink.stream() << json << '\n';
}

struct RuleArgs {
  std::string family = "gauss-osc";
  int points = 0;
  std::string omega = "0";
  bool filon = false;
};

int cmd_rule(const Globals& g, const RuleArgs& a) {
  if (format_or(g, "json") != "json") throw UsageError("rule writes JSON only");
  og::PrecisionScope scope(g.precision);
  const og::Real omega = parse_omega(a.omega);
  og::QuadratureRule rule;
  if (a.family == "gauss-osc") {
    og::ExistenceOptions eo;
    // 16 ulps of a double.
    eo.omega_resolution = 16.0 * DBL_EPSILON * std::fabs(omega.to_double());
    rule = og::gauss_oscillatory(a.points, omega, g.precision, eo);
  } else if (a.family == "gauss-legendre") {
    rule = og::gauss_legendre(a.points, g.precision);
  } else if (a.family == "gauss-laguerre") {
    rule = og::gauss_laguerre(a.points, g.precision);
  } else {
    if (a.points % 2 != 0) throw UsageError("superinterp needs an even number of points");
    rule = og::superinterpolation_rule(a.points / 2, omega, g.precision,
                                       a.filon ? og::SuperinterpolationWeights::Filon
                                               : og::SuperinterpolationWeights::SteepestDescent);
  }
  write_json(g, og::rule_json(rule));
  return kOk;
}

struct TraceArgs {
  int n = 0;
  double omega_min = 0.0;
  double omega_max = 0.0;
  int steps = 0;
  std::string cusps;
};

int cmd_trace(const Globals& g, const TraceArgs& a) {
  if (!(a.omega_min < a.omega_max)) throw UsageError("--omega-min must be below --omega-max");
  if (a.omega_min < 0.0 || a.omega_min > 0.1) throw UsageError("--omega-min must lie in [0, 0.1]");
  const std::string fmt = format_or(g, "csv");
  std::vector<og::Real> grid;
  {
    og::PrecisionScope scope(g.precision);
    grid = og::linear_grid(og::Real(a.omega_min), og::Real(a.omega_max), a.steps);
  }
  const og::Trajectory t = og::continue_roots(a.n, grid, g.precision);
  {
    Sink sink(g.out);
    if (fmt == "json") {
      sink.stream() << og::trajectory_json(t) << '\n';
    } else {
      og::write_trajectory_csv(sink.stream(), t);
    }
  }
  const std::string cusp_path = a.cusps.empty() ? sidecar_path(g.out, "cusps") : a.cusps;
  if (!cusp_path.empty()) {
    Sink sink(cusp_path);
    og::write_cusp_csv(sink.stream(), t);
  }
  return kOk;
}

struct SweepArgs {
  std::string family = "gauss-osc";
  int points = 0;
  std::string integrand = "sin";
  double omega_min = 0.0;
  double omega_max = 0.0;
  int per_decade = 20;
  double oracle_tol = 1e-30;
};

int cmd_sweep(const Globals& g, const SweepArgs& a) {
  if (!(a.omega_min > 0.0 && a.omega_min < a.omega_max)) throw UsageError("need 0 < --omega-min < --omega-max");
  const std::string fmt = format_or(g, "csv");
  const og::Integrand f = og::Integrand::parse(a.integrand);
  const og::RuleFamily family = og::parse_rule_family(a.family);
  const std::vector<double> grid = og::log_grid(a.omega_min, a.omega_max, a.per_decade);
  og::OrderOptions oo;
  oo.precision_bits = g.precision;
  oo.oracle_tol = a.oracle_tol;
  oo.jobs = g.jobs;
  const og::OrderFit fit = og::asymptotic_order(family, a.points, f, grid, oo);
  Sink sink(g.out);
  if (fmt == "json") {
    sink.stream() << og::sweep_json(fit) << '\n';
  } else {
    og::write_sweep_csv(sink.stream(), fit);
  }
  return kOk;
}

struct BreakdownArgs {
  int n = 2;
  double omega_min = 0.0;
  double omega_max = 0.0;
  double step = 0.01;
  double refine_tol = 1e-10;
  std::string samples;
};

int cmd_breakdown(const Globals& g, const BreakdownArgs& a) {
  const std::string fmt = format_or(g, "csv");
  og::BreakdownOptions bo;
  bo.precision_bits = g.precision;
  bo.refine_tol = a.refine_tol;
  bo.jobs = g.jobs;
  const og::BreakdownScan scan = og::breakdown_scan(a.n, a.omega_min, a.omega_max, a.step, bo);
  {
    Sink sink(g.out);
    if (fmt == "json") {
      sink.stream() << og::breakdown_json(scan, a.refine_tol) << '\n';
    } else {
      og::write_breakdown_csv(sink.stream(), scan.records, a.refine_tol);
    }
  }
  const std::string sample_path = a.samples.empty() ? sidecar_path(g.out, "samples") : a.samples;
  if (!sample_path.empty()) {
    Sink sink(sample_path);
    og::write_norm_samples_csv(sink.stream(), scan);
  }
  return kOk;
}

int cmd_check(const Globals& g, const std::string& suite) {
  og::CheckOptions co;
  co.precision_bits = g.precision;
  co.jobs = g.jobs;
  const auto results = og::run_checks(suite, co);
  bool all = true;
  Sink sink(g.out);
  std::ostream& os = sink.stream();
  if (format_or(g, "table") == "json") {
    os << "[";
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& r = results[i];
      os << (i ? ",\n " : "") << "{\"suite\":" << og::json_string(r.suite) << ",\"name\":" << og::json_string(r.name)
         << ",\"passed\":" << (r.passed ? "true" : "false") << ",\"detail\":" << og::json_string(r.detail) << "}";
      all = all && r.passed;
    }
    os << "]\n";
  } else {
    std::size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.name.size());
    int failed = 0;
    for (const auto& r : results) {
      os << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(14) << r.suite << std::setw(static_cast<int>(width) + 2)
         << r.name << r.detail << '\n';
      if (!r.passed) ++failed;
    }
    os << results.size() - static_cast<std::size_t>(failed) << " passed, " << failed << " failed\n";
    all = failed == 0;
  }
  return all ? kOk : kNumerical;
}

long default_precision() {
  const char* env = std::getenv("OSCGAUSS_PRECISION");
  if (env == nullptr || *env == '\0') return og::kDefaultPrecisionBits;
  char* end = nullptr;
  const long bits = std::strtol(env, &end, 10);
  if (*end != '\0' || bits < 64 || bits > 4096) {
    throw UsageError(std::string("OSCGAUSS_PRECISION must be an integer in [64, 4096], got '") + env + "'");
  }
  return bits;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian quadrature for the oscillatory weight exp(i omega x) on [-1, 1]", "oscgauss"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  try {
    g.precision = default_precision();
  } catch (const UsageError& e) {
    std::cerr << "oscgauss: " << e.what() << '\n';
    return kUsage;
  }
  app.add_option("--precision", g.precision, "Working precision in bits")->check(CLI::Range(64L, 4096L));
  app.add_option("--jobs", g.jobs, "Worker threads for grid evaluations")->check(CLI::Range(1, 1024));
  app.add_option("--out", g.out, "Output path (default: stdout)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  RuleArgs rule;
  auto* rule_cmd = app.add_subcommand("rule", "Nodes and weights of a quadrature rule");
  rule_cmd->add_option("--family", rule.family)
      ->check(CLI::IsMember({"gauss-osc", "gauss-legendre", "gauss-laguerre", "superinterp"}));
  rule_cmd->add_option("--points", rule.points, "Total number of nodes")->required()->check(CLI::Range(1, 4096));
  rule_cmd->add_option("--omega", rule.omega, "Frequency");
  rule_cmd->add_flag("--filon", rule.filon, "Superinterpolation weights from moments instead of steepest descent");

  TraceArgs trace;
  auto* trace_cmd = app.add_subcommand("trace", "Root trajectories of p_n along a frequency grid");
  trace_cmd->add_option("--n", trace.n)->required()->check(CLI::Range(1, 4096));
  trace_cmd->add_option("--omega-min", trace.omega_min)->required();
  trace_cmd->add_option("--omega-max", trace.omega_max)->required();
  trace_cmd->add_option("--steps", trace.steps, "Grid points")->required()->check(CLI::Range(2, 10000000));
  trace_cmd->add_option("--cusps", trace.cusps, "Cusp-candidate CSV (default: beside --out)");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Error of a rule family against the oracle over log-spaced frequencies");
  sweep_cmd->add_option("--family", sweep.family)->check(CLI::IsMember({"gauss-osc", "superinterp", "superinterp-filon"}));
  sweep_cmd->add_option("--points", sweep.points)->required()->check(CLI::Range(1, 4096));
  sweep_cmd->add_option("--integrand", sweep.integrand, "one, sin, cos, exp, monomial:K, runge:A");
  sweep_cmd->add_option("--omega-min", sweep.omega_min)->required();
  sweep_cmd->add_option("--omega-max", sweep.omega_max)->required();
  sweep_cmd->add_option("--per-decade", sweep.per_decade)->check(CLI::Range(1, 10000));
  sweep_cmd->add_option("--oracle-tol", sweep.oracle_tol)->check(CLI::PositiveNumber);

  BreakdownArgs bd;
  auto* bd_cmd = app.add_subcommand("breakdown", "Zeros of (p_n, p_n) on a frequency interval");
  bd_cmd->add_option("--n", bd.n)->check(CLI::Range(2, 4096));
  bd_cmd->add_option("--omega-min", bd.omega_min)->required();
  bd_cmd->add_option("--omega-max", bd.omega_max)->required();
  bd_cmd->add_option("--step", bd.step)->check(CLI::Range(1e-9, 0.05));
  bd_cmd->add_option("--refine-tol", bd.refine_tol)->check(CLI::PositiveNumber);
  bd_cmd->add_option("--samples", bd.samples, "Sampled-norm CSV (default: beside --out)");

  std::string suite = "all";
  auto* check_cmd = app.add_subcommand("check", "Run the invariant suites");
  std::vector<std::string> suites = og::check_suite_names();
  suites.emplace_back("all");
  check_cmd->add_option("--suite", suite)->check(CLI::IsMember(suites));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "oscgauss: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*rule_cmd) return cmd_rule(g, rule);
    if (*trace_cmd) return cmd_trace(g, trace);
    if (*sweep_cmd) return cmd_sweep(g, sweep);
    if (*bd_cmd) return cmd_breakdown(g, bd);
    return cmd_check(g, suite);
  } catch (const og::NonExistent& e) {
    std::ostringstream extra;
    extra << "\"degree\":" << e.degree() << ",\"breakdown_distance\":" << og::format_number(e.breakdown_distance());
    write_json(g, og::error_json("non-existent", e.what(), extra.str()));
    std::cerr << "oscgauss: " << e.what() << '\n';
    return kNonExistent;
  } catch (const og::NumericalFailure& e) {
    write_json(g, og::error_json("numerical-failure", e.what()));
    std::cerr << "oscgauss: " << e.what() << '\n';
    return kNumerical;
  } catch (const UsageError& e) {
    std::cerr << "oscgauss: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const og::InvalidArgument& e) {
    std::cerr << "oscgauss: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }
}
