#pragma once

#include <map>
#include <string>
#include <vector>

#include "circe/algebra.hpp"
#include "circe/partition.hpp"
#include "circe/series.hpp"
#include "circe/wick.hpp"

namespace circe {

/// Constants of the Gaussian model hidden in the circular ensemble C(beta)E(N).
///
///   Omega_beta = (beta/2)(N-1) + 1            ((N+1)/2, N, 2N-1)
///   d          = 1 - 2/beta                   (-1, 0, 1/2)
///   u          = beta / (2 Omega_beta)        (1/(N+1), 1/N, 2/(2N-1))
///
/// u is the covariance carried by one Wick edge, so a vertex factor
/// -Omega_beta equals -(beta/2)/u and a stratum with vertex type lambda sits at
/// u^(n + rank(lambda)) with weight (-beta/2)^l(lambda) / z_lambda.
struct EnsembleParams {
  Dyson beta = Dyson::orthogonal;

  static EnsembleParams of(Dyson beta) { return EnsembleParams{beta}; }

  std::string name() const;
  BigRational dimension() const;
  BigRational omega(const BigRational& N) const;
  /// 1/u as a function of N: N+1, N or (2N-1)/2.
  BigRational expansion_base(const BigRational& N) const;
  /// "N+1", "N", "(2N-1)/2".
  std::string expansion_base_label() const;
  /// (-beta/2)^l(lambda) / z_lambda.
  BigRational stratum_weight(const Partition& vertex_type) const;
  bool experimental() const { return beta == Dyson::symplectic; }
};

/// Per-pattern moment series in u.
struct MomentSeries {
  EnsembleParams params;
  ExternalSpec spec;
  int order_cap = 0;
  std::map<DeltaPattern, RationalSeries> patterns;
};

/// Sum over vertex types lambda with rank <= order_cap - n. Each j polynomial
/// is assembled in full and only then evaluated at d = 1 - 2/beta.
/// Throws std::invalid_argument when order_cap < n, or for beta = 4 without
/// options.experimental.
MomentSeries moment_series(const ExternalSpec& spec, int order_cap, const EngineOptions& options = {});

/// Truncated value at integer N: substitutes u = 1/expansion_base(N).
/// Throws std::invalid_argument for N < 1.
std::map<DeltaPattern, BigRational> evaluate_at_N(const MomentSeries& series, long N);

/// One vertex type's contribution to a cancellation check.
struct StratumTerm {
  Partition vertex_type;
  BigRational weight;
  /// j(d) at the ensemble dimension, per pattern.
  std::map<DeltaPattern, BigRational> j_values;
};

struct RankReport {
  int rank = 0;
  std::vector<StratumTerm> terms;
  /// Sum over vertex types of this rank of weight * j(d), per pattern.
  std::map<DeltaPattern, BigRational> totals;

  bool vanishes() const;
  /// e.g. "-12/6 + 64/32 = 0" for the first pattern: each term written as
  /// j(d) / (z_lambda (2/beta)^l) with its sign.
  std::string formula() const;
};

/// Per-rank weighted sums for ranks 1..max_rank.
std::vector<RankReport> cancellation_report(int n, int max_rank, Dyson beta, const EngineOptions& options = {});

}  // namespace circe
