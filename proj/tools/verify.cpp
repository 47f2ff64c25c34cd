#include "verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <cmath>
#include <stdexcept>

#include "circe/ensemble.hpp"
#include "circe/monte_carlo.hpp"
#include "circe/parallel.hpp"
#include "circe/serialize.hpp"
#include "circe/traces.hpp"

namespace circe::cli {

namespace {

using Checks = std::vector<Check>;

const ExternalSpec kCoe1{Dyson::orthogonal, 1};

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

DimPolynomial dp(std::initializer_list<long> high_to_low) {
  std::vector<BigInt> c(high_to_low.begin(), high_to_low.end());
  std::reverse(c.begin(), c.end());
  return DimPolynomial(std::move(c));
}

MPolynomial mp(std::initializer_list<long> low_to_high) {
  return MPolynomial(std::vector<BigRational>(low_to_high.begin(), low_to_high.end()));
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

Check make(const std::string& suite, const std::string& name, bool pass, const std::string& detail) {
  return Check{suite, name, pass, detail, {}};
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

Checks cancellations(const VerifyOptions& o) {
  Checks out;
  for (const auto& r : cancellation_report(1, 3, Dyson::orthogonal, o.engine)) {
    out.push_back(make("cancellations", "rank " + std::to_string(r.rank), r.vanishes(), r.formula()));
  }
  return out;
}

Checks catalan(const VerifyOptions& o) {
  Checks out;
  const std::vector<std::pair<Partition, long>> cases{
      {P({3}), 5}, {P({2, 2}), 4}, {P({4}), 14}, {P({3, 2}), 10}, {P({2, 2, 2}), 8}};
  for (const auto& [lambda, want] : cases) {
    const auto j = j_polynomial(lambda, kCoe1, o.engine);
    const auto& poly = j.begin()->second;
    const bool pass = poly.leading_coefficient() == want && poly.degree() == lambda.size() + lambda.length();
    out.push_back(make("catalan", lambda.to_string(), pass,
                       poly.leading_coefficient().get_str() + "d^" + std::to_string(poly.degree())));
  }
  return out;
}

Checks jpoly(const VerifyOptions& o) {
  Checks out;
  const std::vector<std::pair<Partition, DimPolynomial>> cases{
      {P({2}), dp({2, 4, 10, 8})},
      {P({3}), dp({5, 16, 49, 74, 48})},
      {P({4}), dp({14, 64, 242, 528, 688, 384})},
      {P({3, 2}), dp({10, 52, 356, 1180, 3410, 6568, 7624, 3840})},
      {P({2, 2, 2}), dp({8, 48, 432, 1744, 7704, 21568, 52912, 92992, 99072, 46080})},
  };
  for (const auto& [lambda, want] : cases) {
    const auto j = j_polynomial(lambda, kCoe1, o.engine);
    bool pass = j.size() == 2;
    for (const auto& [pattern, poly] : j) pass = pass && poly == want;
    out.push_back(make("jpoly", lambda.to_string(), pass, j.begin()->second.to_string("d")));
  }
  return out;
}

Checks termcount(const VerifyOptions& o) {
  Checks out;
  for (Dyson beta : {Dyson::orthogonal, Dyson::unitary}) {
    for (const auto& lambda : partitions_no_ones_up_to_rank(3)) {
      BigInt total = 0;
      for (const auto& [pattern, poly] : j_polynomial(lambda, ExternalSpec{beta, 1}, o.engine)) {
        total += poly.evaluate(BigInt(1));
      }
      const int e = 1 + lambda.size();
      const BigInt want = beta == Dyson::orthogonal ? BigInt(factorial(e) << e) : factorial(e);
      out.push_back(make("termcount", "beta=" + std::to_string(beta_value(beta)) + " " + lambda.to_string(),
                         total == want, total.get_str() + " (expected " + want.get_str() + ")"));
    }
  }
  return out;
}

Checks typo(const VerifyOptions& o) {
  const auto j = j_polynomial(P({2, 2}), kCoe1, o.engine).begin()->second;
  const DimPolynomial printed = dp({4, 16, 92, 224, 412, 688, 384});
  const DimPolynomial diff = j - printed;
  Checks out;
  out.push_back(make("typo", "j(-1) = 64", j.evaluate(BigInt(-1)) == 64, j.evaluate(BigInt(-1)).get_str()));
  out.push_back(make("typo", "j(1) = 1920", j.evaluate(BigInt(1)) == 1920, j.evaluate(BigInt(1)).get_str()));
  out.push_back(make("typo", "differs only at d^2", diff == DimPolynomial::monomial(diff.coefficient(2), 2) &&
                                                        !diff.is_zero(),
                     "computed " + j.to_string("d")));
  return out;
}

// Reference series through u^4. For sizes 2 the u^4 terms are the expansions
// of the exact finite-N moments (see README), which differ from the values in
// circulation; everything else is as published.
struct Reference {
  Partition lambda, mu;
  std::vector<std::pair<int, MPolynomial>> terms;
};

const std::vector<Reference>& trace_references() {
  static const std::vector<Reference> refs{
      {P({1}), P({1}), {{1, mp({0, 2})}}},
      {P({2}), P({2}), {{2, mp({0, 4, 4})}, {3, mp({0, -12, -4})}, {4, mp({0, 20, 12})}}},
      {P({1, 1}), P({1, 1}), {{2, mp({0, 0, 8})}, {3, mp({0, -16})}, {4, mp({0, 16, 16})}}},
      {P({2}), P({1, 1}), {{2, mp({0, 8})}, {3, mp({0, -8, -8})}, {4, mp({0, 24, 8})}}},
      {P({3}), P({3}), {{3, mp({0, 24, 18, 6})}, {4, mp({0, -144, -126, -18})}}},
      {P({2, 1}), P({2, 1}), {{3, mp({0, 32, 8, 8})}, {4, mp({0, -128, -152, -8})}}},
      {P({1, 1, 1}), P({1, 1, 1}), {{3, mp({0, 0, 0, 48})}, {4, mp({0, 0, -288})}}},
      {P({3}), P({2, 1}), {{3, mp({0, 24, 24})}, {4, mp({0, -168, -96, -24})}}},
      {P({3}), P({1, 1, 1}), {{3, mp({0, 48})}, {4, mp({0, -144, -144})}}},
      {P({2, 1}), P({1, 1, 1}), {{3, mp({0, 0, 48})}, {4, mp({0, -192, -48, -48})}}},
  };
  return refs;
}

Checks traces(const VerifyOptions& o) {
  Checks out;
  for (const auto& ref : trace_references()) {
    MSeries want(4);
    for (const auto& [k, p] : ref.terms) want.add_term(k, p);
    const auto got = trace_moment(ref.lambda, ref.mu, 4, o.engine).series;
    out.push_back(make("traces", ref.lambda.to_string() + ref.mu.to_string(), got == want, got.to_string()));
  }
  return out;
}

Checks jm(const VerifyOptions& o) {
  Checks out;
  for (int n = 1; n <= 3; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const BigRational got = jm_limit(lambda, o.engine);
      const BigRational want(z_weight(lambda) << lambda.length());
      out.push_back(make("jm", lambda.to_string(), got == want,
                         to_string(got) + " (expected " + to_string(want) + ")"));
    }
  }
  return out;
}

Checks selection(const VerifyOptions& o) {
  Checks out;
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      if (a == b) continue;
      for (const auto& lambda : partitions_of(a)) {
        for (const auto& mu : partitions_of(b)) {
          const auto r = trace_moment(lambda, mu, a + 3, o.engine);
          out.push_back(make("selection", lambda.to_string() + mu.to_string(),
                             r.selection_rule_zero && r.series.is_zero(), "zero"));
        }
      }
    }
  }
  return out;
}

Checks cue(const VerifyOptions& o) {
  Checks out;
  const auto one = moment_series(ExternalSpec{Dyson::unitary, 1}, 3, o.engine);
  const auto& s = one.patterns.begin()->second;
  out.push_back(make("cue", "<|S_ij|^2> = u", s == RationalSeries::monomial(3, 1, BigRational(1)), s.to_string()));
  // Two factors: 1/(N^2-1) and -1/(N(N^2-1)), i.e. u^2 + u^4 and -u^3 - u^5 in u = 1/N.
  const auto two = moment_series(ExternalSpec{Dyson::unitary, 2}, 5, o.engine);
  const auto& same = two.patterns.at(DeltaPattern{{0, 1, 2, 3}});
  const auto& swapped = two.patterns.at(DeltaPattern{{0, 3, 2, 1}});
  out.push_back(make("cue", "i1=a1 j1=b1 i2=a2 j2=b2",
                     same == RationalSeries(5, {0, 0, BigRational(1), 0, BigRational(1), 0}), same.to_string()));
  out.push_back(make("cue", "i1=a1 j1=b2 i2=a2 j2=b1",
                     swapped == RationalSeries(5, {0, 0, 0, BigRational(-1), 0, BigRational(-1)}),
                     swapped.to_string()));
  return out;
}

mc::SampleConfig sample_config(const VerifyOptions& o, mc::Ensemble e, int N) {
  mc::SampleConfig c;
  c.ensemble = e;
  c.N = N;
  c.sample_count = o.samples;
  c.seed = o.seed;
  c.batch_count = o.batches;
  c.workers = o.engine.workers;
  return c;
}

Check from_comparison(const std::string& suite, const mc::Comparison& c) {
  Check k = make(suite, c.observable, c.pass,
                 "mean " + fmt(c.mean.real()) + " stderr " + fmt(c.std_error) + " vs " + fmt(c.symbolic) +
                     " (trunc " + fmt(c.trunc_bound) + ")");
  k.extra = c.to_json();
  return k;
}

Checks mc_coe(const VerifyOptions& o) {
  const int N = o.N > 0 ? o.N : 8;
  const int M = o.M > 0 ? o.M : std::min(3, N);
  const auto c = sample_config(o, mc::Ensemble::coe, N);
  Checks out;

  const auto values = evaluate_at_N(moment_series(kCoe1, 4, o.engine), N);
  auto entry = [&](int i1, int i2, int j1, int j2) {
    const int z[2] = {i1, i2}, zb[2] = {j1, j2};
    BigRational total = 0;
    for (const auto& [pattern, v] : values) {
      if (z[0] == zb[pattern.match[0]] && z[1] == zb[pattern.match[1]]) total += v;
    }
    return total.get_d();
  };
  if (N >= 2) {
    out.push_back(from_comparison("mc-coe", mc::compare("|W_11|^2", N, 0, entry(0, 0, 0, 0),
                                                        mc::estimate_moment(c, mc::entry_product({{0, 0}}, {{0, 0}})),
                                                        o.sigma_tol)));
    out.push_back(from_comparison("mc-coe", mc::compare("|W_12|^2", N, 0, entry(0, 1, 0, 1),
                                                        mc::estimate_moment(c, mc::entry_product({{0, 1}}, {{0, 1}})),
                                                        o.sigma_tol)));
  }
  const std::vector<std::pair<Partition, Partition>> traces{
      {P({1}), P({1})}, {P({1}), Partition()}, {P({2}), P({2})}, {P({1, 1}), P({1, 1})}, {P({2}), P({1, 1})}};
  for (const auto& [lambda, mu] : traces) {
    const auto obs = mc::trace_product(lambda, mu, M);
    const auto est = mc::estimate_moment(c, obs);
    if (mu.empty()) {
      out.push_back(from_comparison("mc-coe", mc::compare(obs.name, N, M, 0.0, est, o.sigma_tol)));
      continue;
    }
    const auto series = trace_moment(lambda, mu, 4, o.engine).series;
    out.push_back(from_comparison(
        "mc-coe", mc::compare(obs.name, N, M, mc::evaluate_trace_series(series, M, N).get_d(), est, o.sigma_tol,
                              mc::truncation_allowance(series, lambda.size(), M, N))));
  }
  return out;
}

Checks mc_cue(const VerifyOptions& o) {
  const int N = o.N > 0 ? o.N : 5;
  const auto c = sample_config(o, mc::Ensemble::cue, N);
  Checks out;
  const auto one = evaluate_at_N(moment_series(ExternalSpec{Dyson::unitary, 1}, 3, o.engine), N);
  const double s11 = one.begin()->second.get_d();
  // The cap-3 series 1/N is exact, so no truncation allowance.
  out.push_back(from_comparison("mc-cue", mc::compare("|S_11|^2", N, 0, s11,
                                                      mc::estimate_moment(c, mc::entry_product({{0, 0}}, {{0, 0}})),
                                                      o.sigma_tol)));
  out.push_back(from_comparison("mc-cue", mc::compare("S_11 (phase)", N, 0, 0.0,
                                                      mc::estimate_moment(c, mc::entry_product({{0, 0}}, {})),
                                                      o.sigma_tol)));
  if (N >= 2) {
    const auto two = moment_series(ExternalSpec{Dyson::unitary, 2}, 5, o.engine);
    const double w = evaluate_at_N(two, N).at(DeltaPattern{{0, 3, 2, 1}}).get_d();
    const double tail = std::pow(1.0 / N, 6) / (1.0 - 1.0 / (N * N));
    out.push_back(from_comparison(
        "mc-cue", mc::compare("S_11 S_22 conj(S_12 S_21)", N, 0, w,
                              mc::estimate_moment(c, mc::entry_product({{0, 0}, {1, 1}}, {{0, 1}, {1, 0}})),
                              o.sigma_tol, tail)));
  }
  return out;
}

Checks determinism(const VerifyOptions& o) {
  const unsigned most = std::max(4u, resolve_workers(0));
  std::vector<std::string> dumps;
  std::vector<mc::EstimateResult> runs;
  for (unsigned w : {1u, 2u, most}) {
    EngineOptions e;
    e.workers = w;
    dumps.push_back(to_json(*diagram_sum(kCoe1, P({3, 2}), e)).dump() +
                    to_json(trace_moment(P({2, 1}), P({2, 1}), 4, e)).dump());
    auto c = sample_config(o, mc::Ensemble::coe, 6);
    c.sample_count = std::min<std::uint64_t>(o.samples, 20000);
    c.workers = w;
    runs.push_back(mc::estimate_moment(c, mc::trace_product(P({2}), P({2}), 4)));
  }
  Checks out;
  bool symbolic = std::all_of(dumps.begin(), dumps.end(), [&](const auto& d) { return d == dumps[0]; });
  bool sampled = std::all_of(runs.begin(), runs.end(), [&](const auto& r) {
    return r.mean == runs[0].mean && r.std_error == runs[0].std_error;
  });
  const std::string workers = "workers 1, 2, " + std::to_string(most);
  out.push_back(make("determinism", "symbolic", symbolic, workers));
  out.push_back(make("determinism", "monte carlo", sampled, workers));
  return out;
}

using Suite = Checks (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> s{
      {"cancellations", cancellations}, {"catalan", catalan},     {"jpoly", jpoly},   {"termcount", termcount},
      {"typo", typo},                   {"traces", traces},       {"jm", jm},         {"selection", selection},
      {"cue", cue},                     {"mc-coe", mc_coe},       {"mc-cue", mc_cue}, {"determinism", determinism},
  };
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : suites()) n.push_back(name);
    n.push_back("all");
    return n;
  }();
  return names;
}

std::vector<Check> run_suite(const std::string& suite, const VerifyOptions& options) {
  Checks out;
  for (const auto& [name, fn] : suites()) {
    if (suite == "all" || suite == name) {
      auto part = fn(options);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  if (out.empty() && suite != "all") throw std::invalid_argument("unknown suite '" + suite + "'");
  return out;
}

}  // namespace circe::cli
