#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "circe/algebra.hpp"

namespace circe {

/// Integer partition, parts stored weakly decreasing. The empty partition is
/// valid. Vertex types for the Wick expansion additionally forbid parts equal
/// to 1; that is checked where it matters, not here.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts. Throws std::invalid_argument on a part below 1.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  /// |lambda|
  int size() const { return size_; }
  /// l(lambda)
  int length() const { return static_cast<int>(parts_.size()); }
  /// |lambda| - l(lambda)
  int rank() const { return size_ - length(); }
  bool has_unit_part() const;

  /// "(3,2)", "()" for the empty partition.
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// prod_i lambda_i * prod_k (multiplicity of k)!
BigInt z_weight(const Partition& lambda);

/// Every partition with all parts >= 2 and rank <= max_rank, the empty one
/// included. Ordered by rank, then length, then parts descending.
std::vector<Partition> partitions_no_ones_up_to_rank(int max_rank);

/// All partitions of n (parts >= 1), in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Comma separated parts, e.g. "3,2"; the empty string is the empty
/// partition. Throws std::invalid_argument.
Partition parse_partition(std::string_view text);

/// Permutation of {0..n-1} stored as images: images[k] = pi(k).
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless images is a bijection on 0..n-1.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[k]; }
  const std::vector<int>& images() const { return images_; }

  Partition cycle_type() const;
  Permutation inverse() const;
  /// (this * other)(k) = this(other(k))
  Permutation compose(const Permutation& other) const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Canonical representative of cycle type lambda on n = |lambda| points:
/// consecutive blocks, each block one cycle b -> b+1 -> ... -> b.
/// Throws std::invalid_argument when |lambda| != n.
Permutation permutation_of_type(const Partition& lambda, int n);

}  // namespace circe
