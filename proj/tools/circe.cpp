#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "circe/ensemble.hpp"
#include "circe/monte_carlo.hpp"
#include "circe/parallel.hpp"
#include "circe/serialize.hpp"
#include "circe/traces.hpp"
#include "verify.hpp"

using namespace circe;
using nlohmann::json;

namespace {

struct Config {
  int beta = 1;
  std::string lambda;
  std::string mu;
  int n = 1;
  int cap = -1;  // -1: n + 3 (|lambda| + 3 for traces)
  long N = 0;
  long M = 0;
  int max_rank = 3;
  std::uint64_t seed = 20240611;
  std::uint64_t samples = 100000;
  int batches = 20;
  double sigma = 4.0;
  unsigned threads = 0;
  bool json = false;
  bool experimental = false;
  bool asymptotics = false;
  std::string suite;
};

EngineOptions engine(const Config& c) {
  EngineOptions o;
  o.workers = resolve_workers(c.threads);
  o.experimental = c.experimental;
  return o;
}

std::string u_label(const EnsembleParams& params) {
  const std::string base = params.expansion_base_label();
  return "u=1/" + (base.find_first_of("+-/") == std::string::npos ? base : "(" + base + ")");
}

std::string decimal(const BigRational& q) {
  std::ostringstream os;
  os.precision(12);
  os << q.get_d();
  return os.str();
}

int cmd_jpoly(const Config& c) {
  const ExternalSpec spec{dyson_from_int(c.beta), c.n};
  const Partition lambda = parse_partition(c.lambda);
  const auto sum = diagram_sum(spec, lambda, engine(c));
  json rows = json::array();
  for (const auto& [pattern, poly] : sum->patterns) {
    const std::string text = poly.to_string("d");
    if (c.json) {
      rows.push_back({{"pattern", pattern.describe(spec.beta)}, {"j", text}, {"coefficients", to_json(poly)}});
    } else {
      std::cout << pattern.describe(spec.beta) << "  " << text << "\n";
    }
  }
  if (c.json) {
    std::cout << json{{"command", "jpoly"}, {"beta", c.beta}, {"n", c.n}, {"lambda", lambda.to_string()},
                      {"patterns", rows}}
                     .dump(2)
              << "\n";
  }
  return 0;
}

int cmd_moment(const Config& c) {
  const ExternalSpec spec{dyson_from_int(c.beta), c.n};
  const int cap = c.cap >= 0 ? c.cap : c.n + 3;
  const auto ms = moment_series(spec, cap, engine(c));
  const std::string u = u_label(ms.params);
  json rows = json::array();
  if (c.N > 0) {
    for (const auto& [pattern, value] : evaluate_at_N(ms, c.N)) {
      if (c.json) {
        rows.push_back({{"pattern", pattern.describe(spec.beta)}, {"value", to_json(value)}, {"decimal", value.get_d()}});
      } else {
        std::cout << pattern.describe(spec.beta) << "  " << to_string(value) << "  (" << decimal(value) << ")\n";
      }
    }
  } else {
    for (const auto& [pattern, series] : ms.patterns) {
      if (c.json) {
        rows.push_back({{"pattern", pattern.describe(spec.beta)}, {"series", series.to_string()}, {"terms", to_json(series)}});
      } else {
        std::cout << pattern.describe(spec.beta) << "  " << series.to_string() << "; " << u << "\n";
      }
    }
  }
  if (!c.json && ms.params.experimental()) std::cerr << "warning: beta = 4 results are experimental\n";
  if (c.json) {
    json out{{"command", "moment"}, {"ensemble", ms.params.name()}, {"beta", c.beta}, {"n", c.n},
             {"cap", cap},          {"u", u},                       {"patterns", rows},
             {"experimental", ms.params.experimental()}};
    if (c.N > 0) out["N"] = c.N;
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int cmd_trace(const Config& c) {
  const Partition lambda = parse_partition(c.lambda);
  const Partition mu = parse_partition(c.mu);
  const int cap = c.cap >= 0 ? c.cap : lambda.size() + 3;
  const auto r = trace_moment(lambda, mu, cap, engine(c));
  const std::string u = "u=1/(N+1)";
  const std::string head = "<p" + lambda.to_string() + "(Z) conj p" + mu.to_string() + "(Z)>";
  json out{{"command", "trace"}, {"lambda", lambda.to_string()}, {"mu", mu.to_string()}, {"cap", cap}, {"u", u},
           {"series", r.series.to_string()}, {"result", to_json(r)}};
  if (r.selection_rule_zero) {
    const std::string note = "selection rule: |lambda| = " + std::to_string(lambda.size()) +
                             " != |mu| = " + std::to_string(mu.size());
    out["note"] = note;
    if (!c.json) std::cout << head << " = 0  (" << note << ")\n";
  } else if (!c.json) {
    std::cout << head << " = " << r.series.to_string() << "; " << u << "\n";
  }
  if (c.M > 0 && c.N > 0) {
    const BigRational v = mc::evaluate_trace_series(r.series, c.M, c.N);
    out["M"] = c.M;
    out["N"] = c.N;
    out["value"] = to_json(v);
    out["decimal"] = v.get_d();
    if (!c.json) std::cout << "at M=" << c.M << ", N=" << c.N << ": " << to_string(v) << "  (" << decimal(v) << ")\n";
  }
  if (c.asymptotics && !r.selection_rule_zero) {
    json regimes = json::array();
    for (Regime g : {Regime::fixed_m, Regime::m_equals_n, Regime::proportional}) {
      const auto t = regime_asymptotics(r, g);
      const std::string text = t.determinate ? t.description : "indeterminate at cap " + std::to_string(cap);
      regimes.push_back({{"regime", regime_name(g)}, {"determinate", t.determinate}, {"leading", text}});
      if (!c.json) std::cout << regime_name(g) << ": " << text << "\n";
    }
    out["asymptotics"] = regimes;
  }
  if (c.json) std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_cancel(const Config& c) {
  const auto reports = cancellation_report(c.n, c.max_rank, dyson_from_int(c.beta), engine(c));
  json rows = json::array();
  bool all = true;
  for (const auto& r : reports) {
    all = all && r.vanishes();
    if (c.json) {
      rows.push_back({{"rank", r.rank}, {"formula", r.formula()}, {"vanishes", r.vanishes()}});
    } else {
      std::cout << "rank " << r.rank << "  " << r.formula() << "  " << (r.vanishes() ? "vanishes" : "nonzero")
                << "\n";
    }
  }
  if (c.json) {
    std::cout << json{{"command", "cancel"}, {"beta", c.beta}, {"n", c.n}, {"ranks", rows}, {"all_vanish", all}}
                     .dump(2)
              << "\n";
  }
  return 0;
}

int cmd_verify(const Config& c) {
  cli::VerifyOptions o;
  o.seed = c.seed;
  o.samples = c.samples;
  o.batches = c.batches;
  o.N = static_cast<int>(c.N);
  o.M = static_cast<int>(c.M);
  o.sigma_tol = c.sigma;
  o.engine = engine(c);

  if (!c.json) std::cout << "seed " << c.seed << ", generator " << mc::kGeneratorName << "\n";
  const auto checks = cli::run_suite(c.suite, o);
  int passed = 0;
  json rows = json::array();
  for (const auto& k : checks) {
    passed += k.pass;
    if (c.json) {
      json row{{"suite", k.suite}, {"check", k.name}, {"pass", k.pass}, {"detail", k.detail}};
      if (!k.extra.is_null()) row["comparison"] = k.extra;
      rows.push_back(row);
    } else {
      std::cout << (k.pass ? "PASS" : "FAIL") << "  " << k.suite << "  " << k.name << "  " << k.detail << "\n";
    }
  }
  const bool ok = passed == static_cast<int>(checks.size());
  if (c.json) {
    std::cout << json{{"command", "verify"},
                      {"suite", c.suite},
                      {"seed", c.seed},
                      {"generator", mc::kGeneratorName},
                      {"samples", c.samples},
                      {"checks", rows},
                      {"passed", passed},
                      {"total", checks.size()},
                      {"pass", ok}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << passed << "/" << checks.size() << " checks passed\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"circe: exact moments of circular ensembles by Wick enumeration"};
  app.require_subcommand(1);
  Config c;

  app.add_option("--threads", c.threads, "Worker threads (0: $CIRCE_THREADS or hardware)")->capture_default_str();
  app.add_flag("--json", c.json, "Machine-readable output");
  app.add_flag("--experimental", c.experimental, "Allow beta = 4");

  auto beta = [&](CLI::App* s) { s->add_option("--beta", c.beta, "Dyson index 1, 2 or 4")->capture_default_str(); };
  auto cap = [&](CLI::App* s) { s->add_option("--cap", c.cap, "Order cap in u (default n+3)"); };
  auto n = [&](CLI::App* s) { s->add_option("--n", c.n, "External factor pairs")->check(CLI::PositiveNumber)->capture_default_str(); };

  auto* jpoly = app.add_subcommand("jpoly", "Tabulate j polynomials per delta pattern");
  beta(jpoly);
  n(jpoly);
  jpoly->add_option("--lambda", c.lambda, "Vertex type, comma separated, no part 1")->required();

  auto* moment = app.add_subcommand("moment", "Moment series of the entries");
  beta(moment);
  n(moment);
  cap(moment);
  moment->add_option("--N", c.N, "Evaluate at this matrix size")->check(CLI::PositiveNumber);

  auto* trace = app.add_subcommand("trace", "Moments of power sums of a leading M x M block of the COE");
  trace->add_option("--lambda", c.lambda, "Cycle type for Z")->required();
  trace->add_option("--mu", c.mu, "Cycle type for conj Z")->required();
  cap(trace);
  trace->add_option("--M", c.M, "Block size for evaluation")->check(CLI::PositiveNumber);
  trace->add_option("--N", c.N, "Matrix size for evaluation")->check(CLI::PositiveNumber);
  trace->add_flag("--asymptotics", c.asymptotics, "Leading large-N terms in three regimes");

  auto* cancel = app.add_subcommand("cancel", "Weighted stratum sums per rank");
  beta(cancel);
  n(cancel);
  cancel->add_option("--max-rank", c.max_rank, "Highest rank")->check(CLI::PositiveNumber)->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", c.suite, "Suite name")->required()->check(CLI::IsMember(cli::suite_names()));
  verify->add_option("--seed", c.seed, "Monte Carlo seed")->capture_default_str();
  verify->add_option("--samples", c.samples, "Monte Carlo samples")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--batches", c.batches, "Batches for the standard error")->check(CLI::Range(2, 1 << 20))->capture_default_str();
  verify->add_option("--sigma", c.sigma, "Tolerance in standard errors")->capture_default_str();
  verify->add_option("--N", c.N, "Matrix size (mc suites)")->check(CLI::PositiveNumber);
  verify->add_option("--M", c.M, "Block size (mc-coe)")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*jpoly) return cmd_jpoly(c);
    if (*moment) return cmd_moment(c);
    if (*trace) return cmd_trace(c);
    if (*cancel) return cmd_cancel(c);
    return cmd_verify(c);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
