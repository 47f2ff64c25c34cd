#pragma once

// Wick-pairing enumeration for the complex Gaussian matrix models behind the
// circular ensembles.
//
// The integrand is a product of matrix elements z and conjugates zbar. Each
// factor has a row slot and a column slot. External factors come from the
// moment being computed; their slots carry free indices. Internal factors come
// from p_lambda(Z Z^dagger): a part q contributes q z's and q zbar's joined in
// a ring by trace identifications
//
//     col(z_k) -- col(zbar_k),   row(zbar_k) -- row(z_{k+1 mod q})
//
// which is (Z Z^dagger)_{ab} = sum_c z_{ac} conj(z_{bc}) written out. A Wick
// pairing is a bijection from z factors to zbar factors; for the symmetric
// (beta = 1) model every edge may also be twisted, joining row to column.
// After pairing, every slot has degree <= 2, so the slots split into closed
// cycles (each a factor of the formal dimension d) and open chains that join
// one external z slot to one external zbar slot (the Kronecker-delta pattern).

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "circe/algebra.hpp"
#include "circe/partition.hpp"

namespace circe {

/// Dyson index.
enum class Dyson : int { orthogonal = 1, unitary = 2, symplectic = 4 };

int beta_value(Dyson beta);
/// Accepts 1, 2, 4. Throws std::invalid_argument otherwise.
Dyson dyson_from_int(int beta);

/// Shape of the external integrand: n factors z and n factors zbar.
///
/// beta = 1: z-factor k is z_{i(2k+1) i(2k+2)}, zbar-factor k is
/// zbar_{j(2k+1) j(2k+2)}. beta = 2: z-factor k is z_{i_k j_k}, zbar-factor k
/// is zbar_{a_k b_k}. Slot 2k is the row of factor k, slot 2k+1 its column.
struct ExternalSpec {
  Dyson beta = Dyson::orthogonal;
  int n = 1;

  friend auto operator<=>(const ExternalSpec&, const ExternalSpec&) = default;
};

inline constexpr int kRowSlot = 0;
inline constexpr int kColSlot = 1;
/// External factors per side are limited so a delta pattern packs into 64 bits.
inline constexpr int kMaxExternalFactors = 8;

/// Matching of the 2n external z slots onto the 2n external zbar slots:
/// match[s] is the zbar slot joined to z slot s.
struct DeltaPattern {
  std::vector<int> match;

  /// e.g. "i1=j1 i2=j2".
  std::string describe(Dyson beta) const;
  /// For beta = 2 patterns: rows go to rows and columns to columns. Returns
  /// the row bijection sigma and column bijection tau on factor indices.
  std::pair<Permutation, Permutation> split_rows_columns() const;

  friend auto operator<=>(const DeltaPattern&, const DeltaPattern&) = default;
};

/// Name of external slot s on the z side (zbar = false) or zbar side.
std::string slot_name(Dyson beta, bool zbar, int slot);

struct SlotGraph {
  Dyson beta = Dyson::orthogonal;
  int external_factors = 0;
  /// Total factors per side: external_factors + |lambda|.
  int factor_count = 0;
  Partition vertex_type;
  /// Partner of each slot under trace identification, -1 for external slots.
  /// Slots 0..2F-1 are z-side (factor f: 2f row, 2f+1 column); 2F..4F-1 zbar-side.
  std::vector<int> trace_partner;

  int slot_count() const { return 4 * factor_count; }
  int z_slot(int factor, int side) const { return 2 * factor + side; }
  int zbar_slot(int factor, int side) const { return 2 * factor_count + 2 * factor + side; }
  int identification_edges() const;
  /// One entry 2q per part q.
  std::vector<int> vertex_valences() const;
  bool twisted_edges_allowed() const { return beta == Dyson::orthogonal; }
};

/// Throws std::invalid_argument for a part equal to 1, for beta = 4, for a
/// negative n or n > kMaxExternalFactors.
SlotGraph build_slot_graph(const ExternalSpec& spec, const Partition& vertex_type);

/// Per-pattern cycle-count generating polynomials: coefficient of d^c in the
/// polynomial for pattern P counts the pairings (with twists, for beta = 1)
/// that produce pattern P with exactly c closed cycles. The covariance factor
/// per edge is not applied; `edges` records how many there are.
struct DiagramSum {
  ExternalSpec spec;
  Partition vertex_type;
  int edges = 0;
  std::map<DeltaPattern, DimPolynomial> patterns;

  friend bool operator==(const DiagramSum&, const DiagramSum&) = default;
};

/// Exhaustive enumeration: all bijections in lexicographic order, twists as a
/// binary counter. Work is split by the image of the first z factor and merged
/// in chunk order, so the result does not depend on `workers`.
DiagramSum enumerate_wick(const SlotGraph& graph, unsigned workers = 0);

/// Memoises diagram sums by (beta, n, lambda). Thread safe.
class WickCache {
 public:
  std::shared_ptr<const DiagramSum> get(const ExternalSpec& spec, const Partition& vertex_type,
                                        unsigned workers);
  std::size_t size() const;

 private:
  using Key = std::tuple<int, int, Partition>;
  mutable std::mutex mutex_;
  std::map<Key, std::shared_ptr<const DiagramSum>> entries_;
};

struct EngineOptions {
  /// 0 selects resolve_workers(0).
  unsigned workers = 0;
  /// Allows beta = 4 through the beta = 1 twist rules. Results are unverified.
  bool experimental = false;
  WickCache* cache = nullptr;
};

/// enumerate_wick(build_slot_graph(...)), through options.cache when given.
std::shared_ptr<const DiagramSum> diagram_sum(const ExternalSpec& spec, const Partition& vertex_type,
                                              const EngineOptions& options = {});

/// The per-pattern j polynomials for vertex type lambda.
std::map<DeltaPattern, DimPolynomial> j_polynomial(const Partition& vertex_type, const ExternalSpec& spec,
                                                   const EngineOptions& options = {});

}  // namespace circe
