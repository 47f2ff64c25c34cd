#include "circe/ensemble.hpp"

#include <stdexcept>

namespace circe {

namespace {

BigRational half_beta(Dyson beta) { return make_rational(beta_value(beta), 2); }

// The symplectic model has no Wick rules of its own here; experimental runs
// borrow the symmetric ones.
ExternalSpec enumeration_spec(const ExternalSpec& spec, const EngineOptions& options) {
  if (spec.beta != Dyson::symplectic) return spec;
  if (!options.experimental) {
    throw std::invalid_argument("beta = 4 is experimental; enable it explicitly");
  }
  return ExternalSpec{Dyson::orthogonal, spec.n};
}

}  // namespace

std::string EnsembleParams::name() const {
  switch (beta) {
    case Dyson::orthogonal: return "COE";
    case Dyson::unitary: return "CUE";
    case Dyson::symplectic: return "CSE";
  }
  return "?";
}

BigRational EnsembleParams::dimension() const { return BigRational(1) - make_rational(2, beta_value(beta)); }

BigRational EnsembleParams::omega(const BigRational& N) const {
  return BigRational(half_beta(beta) * (N - 1) + 1);
}

BigRational EnsembleParams::expansion_base(const BigRational& N) const {
  return BigRational(omega(N) / half_beta(beta));
}

std::string EnsembleParams::expansion_base_label() const {
  switch (beta) {
    case Dyson::orthogonal: return "N+1";
    case Dyson::unitary: return "N";
    case Dyson::symplectic: return "(2N-1)/2";
  }
  return "?";
}

BigRational EnsembleParams::stratum_weight(const Partition& vertex_type) const {
  BigRational w = pow(BigRational(-half_beta(beta)), static_cast<unsigned>(vertex_type.length()));
  return BigRational(w / BigRational(z_weight(vertex_type)));
}

MomentSeries moment_series(const ExternalSpec& spec, int order_cap, const EngineOptions& options) {
  if (order_cap < spec.n) {
    throw std::invalid_argument("order cap " + std::to_string(order_cap) +
                                " is below the leading order u^" + std::to_string(spec.n));
  }
  const ExternalSpec enumerated = enumeration_spec(spec, options);
  MomentSeries out;
  out.params = EnsembleParams::of(spec.beta);
  out.spec = spec;
  out.order_cap = order_cap;
  const BigRational d = out.params.dimension();

  for (const auto& lambda : partitions_no_ones_up_to_rank(order_cap - spec.n)) {
    const auto sum = diagram_sum(enumerated, lambda, options);
    const BigRational weight = out.params.stratum_weight(lambda);
    const int power = spec.n + lambda.rank();
    for (const auto& [pattern, poly] : sum->patterns) {
      auto it = out.patterns.try_emplace(pattern, order_cap).first;
      it->second.add_term(power, BigRational(weight * poly.evaluate(d)));
    }
  }
  return out;
}

std::map<DeltaPattern, BigRational> evaluate_at_N(const MomentSeries& series, long N) {
  if (N < 1) throw std::invalid_argument("N must be at least 1");
  const BigRational base = series.params.expansion_base(BigRational(N));
  if (base == 0) throw std::invalid_argument("expansion base vanishes at this N");
  const BigRational u = BigRational(1) / base;
  std::map<DeltaPattern, BigRational> out;
  for (const auto& [pattern, s] : series.patterns) {
    BigRational value = 0;
    BigRational power = 1;
    for (int k = 0; k <= s.cap(); ++k) {
      value += s.coefficient(k) * power;
      power *= u;
    }
    out.emplace(pattern, value);
  }
  return out;
}

bool RankReport::vanishes() const {
  for (const auto& [pattern, total] : totals) {
    if (total != 0) return false;
  }
  return true;
}

std::string RankReport::formula() const {
  std::string out;
  for (const auto& term : terms) {
    if (term.j_values.empty()) continue;
    const BigRational& j = term.j_values.begin()->second;
    // weight = sign / denominator, with denominator = z_lambda (2/beta)^l.
    const BigRational denominator = BigRational(1) / abs(term.weight);
    const bool negative = j != 0 && (term.weight < 0) != (j < 0);
    const BigRational magnitude = abs(j);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += to_string(magnitude) + "/" + to_string(denominator);
  }
  const BigRational total = totals.empty() ? BigRational(0) : totals.begin()->second;
  return (out.empty() ? std::string("0") : out) + " = " + to_string(total);
}

std::vector<RankReport> cancellation_report(int n, int max_rank, Dyson beta, const EngineOptions& options) {
  const ExternalSpec spec{beta, n};
  const ExternalSpec enumerated = enumeration_spec(spec, options);
  const EnsembleParams params = EnsembleParams::of(beta);
  const BigRational d = params.dimension();

  std::vector<RankReport> reports;
  for (int r = 1; r <= max_rank; ++r) reports.push_back(RankReport{r, {}, {}});
  for (const auto& lambda : partitions_no_ones_up_to_rank(max_rank)) {
    if (lambda.rank() == 0) continue;
    auto& report = reports[lambda.rank() - 1];
    StratumTerm term{lambda, params.stratum_weight(lambda), {}};
    const auto sum = diagram_sum(enumerated, lambda, options);
    for (const auto& [pattern, poly] : sum->patterns) {
      const BigRational value = poly.evaluate(d);
      term.j_values.emplace(pattern, value);
      auto& total = report.totals.try_emplace(pattern, BigRational(0)).first->second;
      total += term.weight * value;
    }
    report.terms.push_back(std::move(term));
  }
  return reports;
}

}  // namespace circe
