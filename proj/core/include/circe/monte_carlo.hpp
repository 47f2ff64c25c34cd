#pragma once

// Sampling oracle for CUE(N) and COE(N).
//
// CUE samples come from a complex Gaussian matrix G = QR followed by
// Q <- Q diag(R_kk / |R_kk|). Without that phase fix the law of Q depends on
// the QR implementation's sign convention and is not Haar. COE samples are
// S S^T with S from the CUE.

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <string>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "circe/partition.hpp"
#include "circe/series.hpp"

namespace circe::mc {

using Matrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;
using Rng = std::mt19937_64;

enum class Ensemble { cue, coe };

std::string ensemble_name(Ensemble e);

/// Recorded in every report so a run can be reproduced.
inline constexpr const char* kGeneratorName = "mt19937_64, stream seeds splitmix64(seed + stream)";

/// Independent generator for batch `stream` of a run seeded with `seed`.
Rng stream_rng(std::uint64_t seed, std::uint64_t stream);

Matrix sample_cue(int N, Rng& rng);
Matrix sample_coe(int N, Rng& rng);

struct SampleConfig {
  Ensemble ensemble = Ensemble::coe;
  int N = 1;
  std::uint64_t sample_count = 100000;
  std::uint64_t seed = 1;
  /// Batch b always uses stream b, whichever worker runs it.
  int batch_count = 20;
  unsigned workers = 0;
};

struct EstimateResult {
  Complex mean{};
  /// Standard error of the mean from the spread of batch means.
  double std_error = 0.0;
  std::uint64_t sample_count = 0;
  std::string generator = kGeneratorName;
};

/// A scalar function of a sampled matrix that reads only its leading
/// block_size x block_size block.
struct Observable {
  std::string name;
  int block_size = 1;
  std::function<Complex(const Matrix&)> evaluate;
};

/// prod_k S_{rows_k cols_k} * prod_k conj(S_{bar_rows_k bar_cols_k}), 0-based.
Observable entry_product(std::vector<std::pair<int, int>> entries, std::vector<std::pair<int, int>> conj_entries);

/// p_lambda(Z) conj(p_mu(Z)) for Z the leading M x M block. An empty mu
/// gives p_lambda(Z) alone.
Observable trace_product(const Partition& lambda, const Partition& mu, int M);

/// Throws std::invalid_argument for an invalid configuration or when the
/// observable's block exceeds N.
EstimateResult estimate_moment(const SampleConfig& config, const Observable& observable);

struct Comparison {
  std::string observable;
  int N = 0;
  int M = 0;
  double symbolic = 0.0;
  Complex mean{};
  double std_error = 0.0;
  double sigma_tol = 4.0;
  double trunc_bound = 0.0;
  bool pass = false;

  /// |mean - symbolic| <= sigma_tol * std_error + trunc_bound.
  double allowed() const { return sigma_tol * std_error + trunc_bound; }
  nlohmann::json to_json() const;
};

Comparison compare(std::string observable, int N, int M, double symbolic, const EstimateResult& empirical,
                   double sigma_tol, double trunc_bound = 0.0);

/// Allowance for the orders a cap-k series leaves out:
/// C u^(k+1) M^min(k+1, 2n), C the largest |coefficient| in the series.
double truncation_allowance(const MSeries& series, int n, int M, int N);

/// Value of an (M, u) series at integers M and N, u = 1/(N+1).
BigRational evaluate_trace_series(const MSeries& series, long M, long N);

}  // namespace circe::mc
