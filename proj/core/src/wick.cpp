#include "circe/wick.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "circe/parallel.hpp"
#include "circe/union_find.hpp"

namespace circe {

int beta_value(Dyson beta) { return static_cast<int>(beta); }

Dyson dyson_from_int(int beta) {
  switch (beta) {
    case 1: return Dyson::orthogonal;
    case 2: return Dyson::unitary;
    case 4: return Dyson::symplectic;
    default: throw std::invalid_argument("Dyson index must be 1, 2 or 4, got " + std::to_string(beta));
  }
}

std::string slot_name(Dyson beta, bool zbar, int slot) {
  if (beta == Dyson::unitary) {
    const int factor = slot / 2 + 1;
    const char* names = zbar ? "ab" : "ij";
    return std::string(1, names[slot % 2]) + std::to_string(factor);
  }
  return (zbar ? "j" : "i") + std::to_string(slot + 1);
}

std::string DeltaPattern::describe(Dyson beta) const {
  std::string out;
  for (std::size_t s = 0; s < match.size(); ++s) {
    if (!out.empty()) out += " ";
    out += slot_name(beta, false, static_cast<int>(s)) + "=" + slot_name(beta, true, match[s]);
  }
  return out.empty() ? "1" : out;
}

std::pair<Permutation, Permutation> DeltaPattern::split_rows_columns() const {
  const int n = static_cast<int>(match.size()) / 2;
  std::vector<int> rows(n), cols(n);
  for (int f = 0; f < n; ++f) {
    if (match[2 * f] % 2 != kRowSlot || match[2 * f + 1] % 2 != kColSlot) {
      throw std::logic_error("pattern mixes rows and columns");
    }
    rows[f] = match[2 * f] / 2;
    cols[f] = match[2 * f + 1] / 2;
  }
  return {Permutation(std::move(rows)), Permutation(std::move(cols))};
}

int SlotGraph::identification_edges() const {
  return static_cast<int>(std::count_if(trace_partner.begin(), trace_partner.end(),
                                        [](int p) { return p >= 0; })) / 2;
}

std::vector<int> SlotGraph::vertex_valences() const {
  std::vector<int> out;
  for (int q : vertex_type.parts()) out.push_back(2 * q);
  return out;
}

SlotGraph build_slot_graph(const ExternalSpec& spec, const Partition& vertex_type) {
  if (spec.beta == Dyson::symplectic) {
    throw std::invalid_argument("no beta = 4 Wick rules; enumerate with beta = 1 in experimental mode");
  }
  if (spec.n < 0 || spec.n > kMaxExternalFactors) {
    throw std::invalid_argument("external factor count must lie in [0, " +
                                std::to_string(kMaxExternalFactors) + "]");
  }
  if (vertex_type.has_unit_part()) {
    throw std::invalid_argument("vertex type " + vertex_type.to_string() + " has a part equal to 1");
  }
  SlotGraph g;
  g.beta = spec.beta;
  g.external_factors = spec.n;
  g.factor_count = spec.n + vertex_type.size();
  g.vertex_type = vertex_type;
  g.trace_partner.assign(g.slot_count(), -1);
  auto join = [&g](int a, int b) {
    g.trace_partner[a] = b;
    g.trace_partner[b] = a;
  };
  int base = spec.n;
  for (int q : vertex_type.parts()) {
    for (int k = 0; k < q; ++k) {
      const int next = base + (k + 1) % q;
      join(g.z_slot(base + k, kColSlot), g.zbar_slot(base + k, kColSlot));
      join(g.zbar_slot(base + k, kRowSlot), g.z_slot(next, kRowSlot));
    }
    base += q;
  }
  return g;
}

namespace {

using PatternKey = std::uint64_t;
using Histogram = std::vector<std::uint64_t>;
using ChunkResult = std::unordered_map<PatternKey, Histogram>;

DeltaPattern decode(PatternKey key, int external_slots) {
  DeltaPattern p;
  p.match.resize(external_slots);
  for (int s = 0; s < external_slots; ++s) p.match[s] = static_cast<int>((key >> (4 * s)) & 0xF);
  return p;
}

// All pairings whose first z factor maps to zbar factor `first`.
ChunkResult enumerate_chunk(const SlotGraph& g, const UnionFind& joined_traces, int first) {
  const int F = g.factor_count;
  const int external_slots = 2 * g.external_factors;
  const int max_cycles = 2 * F;
  const std::uint64_t twist_states = g.twisted_edges_allowed() ? (std::uint64_t{1} << F) : 1;

  std::vector<int> images(F);
  std::vector<int> rest;
  for (int f = 0; f < F; ++f) {
    if (f != first) rest.push_back(f);
  }
  images[0] = first;

  std::vector<int> zbar_of_root(g.slot_count(), -1);
  std::vector<std::uint32_t> stamp(g.slot_count(), 0);
  std::uint32_t generation = 0;

  ChunkResult result;
  PatternKey last_key = ~PatternKey{0};
  Histogram* last_hist = nullptr;
  UnionFind uf;

  do {
    std::copy(rest.begin(), rest.end(), images.begin() + 1);
    for (std::uint64_t mask = 0; mask < twist_states; ++mask) {
      uf = joined_traces;
      for (int f = 0; f < F; ++f) {
        const int target = images[f];
        const int twist = static_cast<int>((mask >> f) & 1u);
        uf.unite(g.z_slot(f, kRowSlot), g.zbar_slot(target, kRowSlot ^ twist));
        uf.unite(g.z_slot(f, kColSlot), g.zbar_slot(target, kColSlot ^ twist));
      }
      // Each open chain holds exactly one external z slot and one external zbar slot.
      const int cycles = uf.components() - external_slots;

      ++generation;
      for (int s = 0; s < external_slots; ++s) {
        const int root = uf.find(g.zbar_slot(s / 2, s % 2));
        zbar_of_root[root] = s;
        stamp[root] = generation;
      }
      PatternKey key = 0;
      for (int s = 0; s < external_slots; ++s) {
        const int root = uf.find(g.z_slot(s / 2, s % 2));
        if (stamp[root] != generation) {
          throw std::logic_error("open chain does not end on a zbar slot");
        }
        key |= static_cast<PatternKey>(zbar_of_root[root]) << (4 * s);
      }
      if (key != last_key || last_hist == nullptr) {
        auto [it, inserted] = result.try_emplace(key);
        if (inserted) it->second.assign(max_cycles + 1, 0);
        last_hist = &it->second;
        last_key = key;
      }
      ++(*last_hist)[cycles];
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return result;
}

}  // namespace

DiagramSum enumerate_wick(const SlotGraph& g, unsigned workers) {
  DiagramSum sum;
  sum.spec = ExternalSpec{g.beta, g.external_factors};
  sum.vertex_type = g.vertex_type;
  sum.edges = g.factor_count;
  const int external_slots = 2 * g.external_factors;

  if (g.factor_count == 0) {
    sum.patterns.emplace(DeltaPattern{}, DimPolynomial{1});
    return sum;
  }

  UnionFind joined(g.slot_count());
  for (int s = 0; s < g.slot_count(); ++s) {
    if (g.trace_partner[s] > s) joined.unite(s, g.trace_partner[s]);
  }

  std::vector<ChunkResult> chunks(g.factor_count);
  parallel_for(chunks.size(), resolve_workers(workers),
               [&](std::size_t first) { chunks[first] = enumerate_chunk(g, joined, static_cast<int>(first)); });

  // Single merge point; integer addition makes the order irrelevant, but it is fixed anyway.
  std::map<PatternKey, std::vector<BigInt>> totals;
  for (const auto& chunk : chunks) {
    for (const auto& [key, hist] : chunk) {
      auto& acc = totals[key];
      if (acc.empty()) acc.assign(hist.size(), BigInt(0));
      for (std::size_t c = 0; c < hist.size(); ++c) acc[c] += BigInt(static_cast<unsigned long>(hist[c]));
    }
  }
  for (auto& [key, coeffs] : totals) {
    sum.patterns.emplace(decode(key, external_slots), DimPolynomial(std::move(coeffs)));
  }
  return sum;
}

std::shared_ptr<const DiagramSum> WickCache::get(const ExternalSpec& spec, const Partition& vertex_type,
                                                 unsigned workers) {
  Key key{beta_value(spec.beta), spec.n, vertex_type};
  {
    std::lock_guard lock(mutex_);
    if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  }
  auto computed = std::make_shared<const DiagramSum>(enumerate_wick(build_slot_graph(spec, vertex_type), workers));
  std::lock_guard lock(mutex_);
  return entries_.try_emplace(key, std::move(computed)).first->second;
}

std::size_t WickCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

std::shared_ptr<const DiagramSum> diagram_sum(const ExternalSpec& spec, const Partition& vertex_type,
                                              const EngineOptions& options) {
  if (options.cache) return options.cache->get(spec, vertex_type, options.workers);
  return std::make_shared<const DiagramSum>(
      enumerate_wick(build_slot_graph(spec, vertex_type), options.workers));
}

std::map<DeltaPattern, DimPolynomial> j_polynomial(const Partition& vertex_type, const ExternalSpec& spec,
                                                   const EngineOptions& options) {
  return diagram_sum(spec, vertex_type, options)->patterns;
}

}  // namespace circe
