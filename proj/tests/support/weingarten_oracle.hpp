#pragma once

// Test-only oracle: circular-ensemble moments from unitary Weingarten calculus.
//
// For Haar S in U(N),
//   E[prod_r S_{x_r y_r} conj(S_{x'_r y'_r})]
//     = sum_{sigma,tau in S_m} prod_r d(x_r, x'_sigma(r)) d(y_r, y'_tau(r)) Wg(sigma tau^-1).
// With Gram matrix G(sigma,tau) = N^#cycles(sigma tau^-1) = N^m (I + A),
// Wg = N^-m (I + A)^-1 e_id, and A has entries O(1/N), so the inverse is a
// Neumann series. Everything is carried as exact series in the ensemble's
// expansion variable u. Nothing here touches the Wick enumerator.

#include <map>
#include <vector>

#include "circe/partition.hpp"
#include "circe/series.hpp"

namespace circe::oracle {

class WeingartenOracle {
 public:
  /// m = number of S factors; inverse_n = 1/N as a series in u.
  WeingartenOracle(int m, const RationalSeries& inverse_n);

  /// (I + A)^-1 e_id evaluated at pi, i.e. N^m Wg(pi).
  const RationalSeries& scaled_wg(const Permutation& pi) const;
  /// (1/N)^k as a series.
  const RationalSeries& inverse_n_power(int k) const { return inverse_n_powers_.at(k); }
  int m() const { return m_; }

 private:
  int m_;
  std::vector<RationalSeries> inverse_n_powers_;
  std::map<Partition, RationalSeries> by_class_;
};

/// 1/N in u = 1/(N+1): u/(1-u).
RationalSeries coe_inverse_n(int cap);
/// 1/N in u = 1/N.
RationalSeries cue_inverse_n(int cap);

/// COE(N) moment <prod_k W_{x(2k) x(2k+1)} prod_k conj(W_{y(2k) y(2k+1)})>,
/// W = S S^T, n factors each side, as a series in u = 1/(N+1) for every
/// delta pattern sigma in S_2n (z slot r joined to zbar slot sigma(r)).
std::map<std::vector<int>, RationalSeries> coe_pattern_series(int n, int cap);

/// CUE(N) moment <prod_k U_{i_k j_k} prod_k conj(U_{a_k b_k})> in u = 1/N,
/// keyed by (sigma, tau) flattened into the slot matching used by the engine:
/// row slot 2k -> 2 sigma(k), column slot 2k+1 -> 2 tau(k) + 1.
std::map<std::vector<int>, RationalSeries> cue_pattern_series(int n, int cap);

}  // namespace circe::oracle
