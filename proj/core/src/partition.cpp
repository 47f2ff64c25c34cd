#include "circe/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace circe {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::has_unit_part() const {
  return !parts_.empty() && parts_.back() == 1;
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

BigInt z_weight(const Partition& lambda) {
  BigInt z = 1;
  std::map<int, int> multiplicity;
  for (int p : lambda.parts()) {
    z *= p;
    ++multiplicity[p];
  }
  for (auto [part, m] : multiplicity) {
    for (int k = 2; k <= m; ++k) z *= k;
  }
  return z;
}

std::vector<Partition> partitions_no_ones_up_to_rank(int max_rank) {
  std::vector<Partition> out;
  if (max_rank < 0) return out;
  // Parts >= 2 means each part adds at least 1 to the rank.
  std::vector<int> current;
  std::function<void(int, int)> extend = [&](int largest, int rank) {
    out.emplace_back(current);
    for (int p = 2; p <= largest; ++p) {
      if (rank + p - 1 > max_rank) break;
      current.push_back(p);
      extend(p, rank + p - 1);
      current.pop_back();
    }
  };
  extend(max_rank + 1, 0);
  std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    if (a.length() != b.length()) return a.length() < b.length();
    return a.parts() > b.parts();
  });
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  std::function<void(int, int)> extend = [&](int remaining, int largest) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, largest); p >= 1; --p) {
      current.push_back(p);
      extend(remaining - p, p);
      current.pop_back();
    }
  };
  extend(n, n);
  return out;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return Partition();
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto token = trim(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
    if (token.empty()) throw std::invalid_argument("empty part in partition '" + std::string(text) + "'");
    int value = 0;
    for (char ch : token) {
      if (ch < '0' || ch > '9' || value > 100000) {
        throw std::invalid_argument("bad partition part '" + std::string(token) + "'");
      }
      value = value * 10 + (ch - '0');
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v]) {
      throw std::invalid_argument("images do not form a permutation");
    }
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Partition Permutation::cycle_type() const {
  std::vector<char> seen(images_.size(), 0);
  std::vector<int> lengths;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (int k = static_cast<int>(start); !seen[k]; k = images_[k]) {
      seen[k] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition(std::move(lengths));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) inv[images_[k]] = static_cast<int>(k);
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("composing permutations of different sizes");
  std::vector<int> out(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) out[k] = images_[other.images_[k]];
  return Permutation(std::move(out));
}

Permutation permutation_of_type(const Partition& lambda, int n) {
  if (lambda.size() != n) {
    throw std::invalid_argument("partition " + lambda.to_string() + " does not have size " +
                                std::to_string(n));
  }
  std::vector<int> images(n);
  int base = 0;
  for (int q : lambda.parts()) {
    for (int k = 0; k < q; ++k) images[base + k] = base + (k + 1) % q;
    base += q;
  }
  return Permutation(std::move(images));
}

}  // namespace circe
