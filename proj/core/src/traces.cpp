#include "circe/traces.hpp"

#include <stdexcept>

#include "circe/ensemble.hpp"
#include "circe/union_find.hpp"

namespace circe {

int index_cycles(const DeltaPattern& pattern, const Permutation& pi, const Permutation& pi_bar) {
  const int n = pi.size();
  // Index variables: i_0..i_{n-1} are 0..n-1, j_0..j_{n-1} are n..2n-1.
  auto z_index = [&](int slot) { return slot % 2 == kRowSlot ? slot / 2 : pi(slot / 2); };
  auto zbar_index = [&](int slot) { return n + (slot % 2 == kRowSlot ? slot / 2 : pi_bar(slot / 2)); };
  UnionFind uf(2 * n);
  for (int s = 0; s < static_cast<int>(pattern.match.size()); ++s) {
    uf.unite(z_index(s), zbar_index(pattern.match[s]));
  }
  return uf.components();
}

TraceMomentResult trace_moment(const Permutation& pi, const Permutation& pi_bar, int order_cap,
                               const EngineOptions& options) {
  TraceMomentResult out;
  out.lambda = pi.cycle_type();
  out.mu = pi_bar.cycle_type();
  const int n = pi.size();
  if (n == 0) throw std::invalid_argument("trace moments need a non-empty partition");
  if (order_cap < n) {
    throw std::invalid_argument("order cap " + std::to_string(order_cap) + " is below the leading order u^" +
                                std::to_string(n));
  }
  out.series = MSeries(order_cap);
  if (pi_bar.size() != n) {
    out.selection_rule_zero = true;
    return out;
  }

  const ExternalSpec spec{Dyson::orthogonal, n};
  const EnsembleParams params = EnsembleParams::of(Dyson::orthogonal);
  const BigRational d = params.dimension();
  for (const auto& lambda : partitions_no_ones_up_to_rank(order_cap - n)) {
    const auto sum = diagram_sum(spec, lambda, options);
    const BigRational weight = params.stratum_weight(lambda);
    std::vector<BigRational> by_cycles(n + 1);
    for (const auto& [pattern, poly] : sum->patterns) {
      const BigRational value = poly.evaluate(d);
      if (value == 0) continue;
      const int cycles = index_cycles(pattern, pi, pi_bar);
      if (cycles > n) throw std::logic_error("more index cycles than z factors");
      by_cycles[cycles] += value;
    }
    out.series.add_term(n + lambda.rank(), MPolynomial(std::move(by_cycles)) * weight);
  }
  return out;
}

TraceMomentResult trace_moment(const Partition& lambda, const Partition& mu, int order_cap,
                               const EngineOptions& options) {
  if (lambda.empty() || mu.empty()) throw std::invalid_argument("trace moments need non-empty partitions");
  return trace_moment(permutation_of_type(lambda, lambda.size()), permutation_of_type(mu, mu.size()), order_cap,
                      options);
}

namespace {

BigInt binomial(int n, int k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

// Terms M^j u^k at M = (1 - u)/u become (1-u)^j u^(k-j). Returns the series
// through u^limit.
RationalSeries substitute_m_equals_n(const MSeries& series, int limit) {
  RationalSeries out(limit);
  for (int k = 0; k <= series.cap(); ++k) {
    const auto& poly = series.coefficient(k);
    for (int j = 0; j <= poly.degree(); ++j) {
      const BigRational c = poly.coefficient(j);
      if (c == 0) continue;
      if (j > k) throw std::logic_error("M-degree exceeds the u power");
      for (int t = 0; t <= j && k - j + t <= limit; ++t) {
        BigRational term = c * BigRational(binomial(j, t));
        if (t % 2) term = -term;
        out.add_term(k - j + t, term);
      }
    }
  }
  return out;
}

std::string over_n_power(const std::string& coefficient, int power) {
  if (power == 0) return coefficient;
  const bool compound = coefficient.find_first_of("+-/", 1) != std::string::npos;
  return (compound ? "(" + coefficient + ")" : coefficient) + "/N" + (power > 1 ? "^" + std::to_string(power) : "");
}

}  // namespace

BigRational jm_limit(const Partition& lambda, const EngineOptions& options, int order_cap) {
  const int n = lambda.size();
  const int cap = std::max(order_cap, n + 1);
  auto constant_term = [&](int c) {
    return substitute_m_equals_n(trace_moment(lambda, lambda, c, options).series, 0).coefficient(0);
  };
  const BigRational value = constant_term(cap);
  if (constant_term(cap + 1) != value) {
    throw std::runtime_error("M = N limit of " + lambda.to_string() + " is not stable at cap " +
                             std::to_string(cap));
  }
  return value;
}

std::string regime_name(Regime regime) {
  switch (regime) {
    case Regime::fixed_m: return "fixed-M";
    case Regime::m_equals_n: return "M=N";
    case Regime::proportional: return "M=xiN";
  }
  return "?";
}

LeadingTerm regime_asymptotics(const TraceMomentResult& result, Regime regime) {
  LeadingTerm out;
  out.regime = regime;
  const MSeries& s = result.series;
  const int n = result.lambda.size();
  const int known = s.cap() - n;  // orders resolved in the M = N and xi regimes

  if (result.selection_rule_zero) {
    out.determinate = true;
    out.description = "0 (selection rule |lambda| != |mu|)";
    return out;
  }

  switch (regime) {
    case Regime::fixed_m: {
      if (auto k = s.lowest_nonzero_power()) {
        out.determinate = true;
        out.inverse_n_power = *k;
        out.coefficient = s.coefficient(*k);
        out.description = over_n_power(out.coefficient.to_string("M"), *k);
      }
      break;
    }
    case Regime::m_equals_n: {
      if (known < 0) break;
      const RationalSeries at_n = substitute_m_equals_n(s, known);
      if (auto p = at_n.lowest_nonzero_power()) {
        out.determinate = true;
        out.inverse_n_power = *p;
        out.coefficient = MPolynomial::constant(at_n.coefficient(*p));
        out.description = over_n_power(to_string(at_n.coefficient(*p)), *p);
      }
      break;
    }
    case Regime::proportional: {
      // M^j u^k with M = xi N scales as xi^j N^(j-k).
      for (int q = 0; q <= known; ++q) {
        std::vector<BigRational> xi(n + 1);
        for (int k = q; k <= s.cap(); ++k) {
          if (k - q <= n) xi[k - q] = s.coefficient(k).coefficient(k - q);
        }
        MPolynomial poly(std::move(xi));
        if (!poly.is_zero()) {
          out.determinate = true;
          out.inverse_n_power = q;
          out.coefficient = poly;
          out.description = over_n_power(poly.to_string("xi"), q);
          break;
        }
      }
      break;
    }
  }
  if (!out.determinate) out.description = "indeterminate at cap " + std::to_string(s.cap());
  return out;
}

}  // namespace circe
