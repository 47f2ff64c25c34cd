#pragma once

// Moments <p_lambda(Z) p_mu(conj Z)> of power sums of the M x M upper-left
// block Z of a COE(N) matrix, as series in u = 1/(N+1) whose coefficients are
// exact polynomials in M.
//
// p_lambda(Z) = sum_i prod_k Z_{i_k, i_pi(k)} for any pi of cycle type lambda,
// so each delta pattern of the n = |lambda| moment, composed with pi and pi',
// identifies the 2n summation indices into some number of index cycles; each
// cycle contributes a factor M.

#include <string>

#include "circe/algebra.hpp"
#include "circe/partition.hpp"
#include "circe/series.hpp"
#include "circe/wick.hpp"

namespace circe {

struct TraceMomentResult {
  Partition lambda;
  Partition mu;
  MSeries series{0};
  /// Set when |lambda| != |mu|: the moment vanishes identically by phase
  /// invariance and no enumeration was run.
  bool selection_rule_zero = false;
};

/// Throws std::invalid_argument if lambda is empty or order_cap < |lambda|.
TraceMomentResult trace_moment(const Partition& lambda, const Partition& mu, int order_cap,
                               const EngineOptions& options = {});

/// Same with explicit index permutations pi (for Z) and pi_bar (for conj Z).
TraceMomentResult trace_moment(const Permutation& pi, const Permutation& pi_bar, int order_cap,
                               const EngineOptions& options = {});

/// Number of index cycles after joining the external slots of a pattern
/// through pi (z side) and pi_bar (zbar side). z-factor k carries indices
/// (i_k, i_pi(k)), zbar-factor k carries (j_k, j_pi_bar(k)).
int index_cycles(const DeltaPattern& pattern, const Permutation& pi, const Permutation& pi_bar);

/// Large-N limit of <|p_lambda(Z)|^2> at M = N: substitute M = (1-u)/u and
/// read the u^0 coefficient. Uses cap max(order_cap, |lambda|+1), recomputes
/// at cap+1, and throws std::runtime_error if the two disagree.
BigRational jm_limit(const Partition& lambda, const EngineOptions& options = {}, int order_cap = 0);

enum class Regime { fixed_m, m_equals_n, proportional };

std::string regime_name(Regime regime);

/// Leading large-N behaviour coefficient / N^inverse_n_power.
struct LeadingTerm {
  Regime regime = Regime::fixed_m;
  bool determinate = false;
  int inverse_n_power = 0;
  /// A polynomial in M (fixed M), a constant (M = N) or a polynomial in
  /// xi (M = xi N).
  MPolynomial coefficient;
  std::string description;
};

/// Reads the leading term off a computed series. The u^k coefficient has
/// M-degree at most n = |lambda| (there are at most n index cycles), so
/// unknown orders k > cap first matter at N^-(cap+1-n) in the M = N and
/// M = xi N regimes; anything at or beyond that is reported indeterminate.
LeadingTerm regime_asymptotics(const TraceMomentResult& result, Regime regime);

}  // namespace circe
