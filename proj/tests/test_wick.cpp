#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "circe/wick.hpp"

using namespace circe;

namespace {

DimPolynomial dp(std::initializer_list<long> high_to_low) {
  std::vector<BigInt> c;
  for (long x : high_to_low) c.emplace_back(x);
  std::reverse(c.begin(), c.end());
  return DimPolynomial(std::move(c));
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

int catalan(int q) {
  BigInt c = factorial(2 * q) / (factorial(q) * factorial(q + 1));
  return static_cast<int>(c.get_si());
}

const ExternalSpec kCoe1{Dyson::orthogonal, 1};

// Independent enumeration by walking chains. Slots are (side, factor, row/col)
// with side 0 = z, 1 = zbar. Every slot has one Wick partner; internal slots
// also have one trace partner, built here from the ring rule directly.
std::map<std::vector<int>, std::vector<long>> walk_enumeration(bool twisted, int n, const Partition& lambda) {
  const int F = n + lambda.size();
  auto id = [F](int side, int f, int s) { return side * 2 * F + 2 * f + s; };
  std::vector<int> trace(4 * F, -1);
  int base = n;
  for (int q : lambda.parts()) {
    for (int k = 0; k < q; ++k) {
      const int f = base + k, next = base + (k + 1) % q;
      trace[id(0, f, 1)] = id(1, f, 1);
      trace[id(1, f, 1)] = id(0, f, 1);
      trace[id(1, f, 0)] = id(0, next, 0);
      trace[id(0, next, 0)] = id(1, f, 0);
    }
    base += q;
  }

  std::map<std::vector<int>, std::vector<long>> out;
  std::vector<int> sigma(F);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    const unsigned masks = twisted ? 1u << F : 1u;
    for (unsigned mask = 0; mask < masks; ++mask) {
      auto wick = [&](int z_slot) {
        const int f = (z_slot / 2) % F, s = z_slot % 2;
        const int t = (mask >> f) & 1u;
        return id(1, sigma[f], t ? 1 - s : s);
      };
      std::vector<char> seen(2 * F, 0);
      std::vector<int> match(2 * n);
      for (int start = 0; start < 2 * n; ++start) {
        int z = start;
        while (true) {
          seen[z] = 1;
          const int zb = wick(z) - 2 * F;
          if (zb < 2 * n) {
            match[start] = zb;
            break;
          }
          z = trace[zb + 2 * F];
        }
      }
      int cycles = 0;
      for (int start = 2 * n; start < 2 * F; ++start) {
        if (seen[start]) continue;
        ++cycles;
        for (int z = start; !seen[z]; z = trace[wick(z)]) seen[z] = 1;
      }
      auto& hist = out[match];
      if (static_cast<int>(hist.size()) <= cycles) hist.resize(cycles + 1);
      ++hist[cycles];
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

}  // namespace

TEST(SlotGraph, Shapes) {
  auto g0 = build_slot_graph(kCoe1, Partition());
  EXPECT_EQ(g0.factor_count, 1);
  EXPECT_EQ(g0.slot_count(), 4);
  EXPECT_EQ(g0.identification_edges(), 0);
  EXPECT_EQ(std::count(g0.trace_partner.begin(), g0.trace_partner.end(), -1), 4);

  auto g2 = build_slot_graph(kCoe1, Partition({2}));
  EXPECT_EQ(g2.factor_count, 3);
  EXPECT_EQ(g2.identification_edges(), 4);
  EXPECT_EQ(g2.vertex_valences(), std::vector<int>{4});

  auto g43 = build_slot_graph(ExternalSpec{Dyson::orthogonal, 3}, Partition({4, 3}));
  EXPECT_EQ(g43.factor_count, 10);
  auto valences = g43.vertex_valences();
  std::sort(valences.begin(), valences.end());
  EXPECT_EQ(valences, (std::vector<int>{6, 8}));
}

TEST(SlotGraph, TraceEdgesAreBipartiteAndPerfect) {
  for (const auto& lambda : {Partition({2}), Partition({4, 3}), Partition({2, 2, 2})}) {
    auto g = build_slot_graph(ExternalSpec{Dyson::orthogonal, 2}, lambda);
    const int half = 2 * g.factor_count;
    for (int s = 0; s < g.slot_count(); ++s) {
      const int p = g.trace_partner[s];
      const bool external = (s % half) < 2 * g.external_factors;
      if (external) {
        EXPECT_EQ(p, -1);
        continue;
      }
      ASSERT_GE(p, 0);
      EXPECT_EQ(g.trace_partner[p], s);
      EXPECT_NE(s < half, p < half);
    }
    EXPECT_EQ(g.identification_edges(), 2 * lambda.size());
  }
}

TEST(SlotGraph, RejectsInvalid) {
  EXPECT_THROW(build_slot_graph(kCoe1, Partition({2, 1})), std::invalid_argument);
  EXPECT_THROW(build_slot_graph(ExternalSpec{Dyson::symplectic, 1}, Partition()), std::invalid_argument);
  EXPECT_THROW(build_slot_graph(ExternalSpec{Dyson::orthogonal, 9}, Partition()), std::invalid_argument);
  EXPECT_THROW(dyson_from_int(3), std::invalid_argument);
}

TEST(Enumerate, GaussianTwoPatterns) {
  auto sum = diagram_sum(kCoe1, Partition());
  EXPECT_EQ(sum->edges, 1);
  ASSERT_EQ(sum->patterns.size(), 2u);
  for (const auto& [pattern, poly] : sum->patterns) EXPECT_EQ(poly, dp({1}));
  EXPECT_EQ(sum->patterns.begin()->first.describe(Dyson::orthogonal), "i1=j1 i2=j2");
  EXPECT_EQ(std::next(sum->patterns.begin())->first.describe(Dyson::orthogonal), "i1=j2 i2=j1");
}

TEST(Enumerate, UnitaryGaussianSinglePattern) {
  auto sum = diagram_sum(ExternalSpec{Dyson::unitary, 1}, Partition());
  ASSERT_EQ(sum->patterns.size(), 1u);
  EXPECT_EQ(sum->patterns.begin()->first.match, (std::vector<int>{0, 1}));
  EXPECT_EQ(sum->patterns.begin()->first.describe(Dyson::unitary), "i1=a1 j1=b1");
  EXPECT_EQ(sum->patterns.begin()->second, dp({1}));
}

TEST(Enumerate, PublishedPolynomials) {
  const std::vector<std::pair<Partition, DimPolynomial>> cases{
      {Partition({2}), dp({2, 4, 10, 8})},
      {Partition({3}), dp({5, 16, 49, 74, 48})},
      {Partition({4}), dp({14, 64, 242, 528, 688, 384})},
      {Partition({3, 2}), dp({10, 52, 356, 1180, 3410, 6568, 7624, 3840})},
      {Partition({2, 2, 2}), dp({8, 48, 432, 1744, 7704, 21568, 52912, 92992, 99072, 46080})},
  };
  for (const auto& [lambda, want] : cases) {
    auto j = j_polynomial(lambda, kCoe1);
    ASSERT_EQ(j.size(), 2u) << lambda.to_string();
    for (const auto& [pattern, poly] : j) EXPECT_EQ(poly, want) << lambda.to_string();
  }
}

TEST(Enumerate, TwoTwoSelfConsistency) {
  const auto j = j_polynomial(Partition({2, 2}), kCoe1);
  const auto& poly = j.begin()->second;
  EXPECT_EQ(poly.evaluate(BigInt(-1)), 64);
  EXPECT_EQ(2 * poly.evaluate(BigInt(1)), 2 * 1920);
  EXPECT_EQ(poly, dp({4, 16, 92, 224, 512, 688, 384}));
  const auto printed = dp({4, 16, 92, 224, 412, 688, 384});
  EXPECT_NE(printed.evaluate(BigInt(-1)), 64);
  auto diff = poly - printed;
  EXPECT_EQ(diff, DimPolynomial::monomial(BigInt(100), 2));
}

TEST(Enumerate, CatalanLeadingCoefficients) {
  for (const auto& lambda : partitions_no_ones_up_to_rank(3)) {
    BigInt product = 1;
    for (int q : lambda.parts()) product *= catalan(q);
    for (const auto& [pattern, poly] : j_polynomial(lambda, kCoe1)) {
      EXPECT_EQ(poly.degree(), lambda.size() + lambda.length()) << lambda.to_string();
      EXPECT_EQ(poly.leading_coefficient(), product) << lambda.to_string();
    }
  }
}

TEST(Enumerate, TermCountOrthogonal) {
  for (int n = 1; n <= 2; ++n) {
    for (const auto& lambda : partitions_no_ones_up_to_rank(n == 1 ? 3 : 2)) {
      ExternalSpec spec{Dyson::orthogonal, n};
      BigInt total = 0;
      for (const auto& [pattern, poly] : j_polynomial(lambda, spec)) total += poly.evaluate(BigInt(1));
      const int e = n + lambda.size();
      EXPECT_EQ(total, factorial(e) * (BigInt(1) << e)) << n << " " << lambda.to_string();
    }
  }
  auto total_of = [](const Partition& lambda) {
    BigInt t = 0;
    for (const auto& [p, poly] : j_polynomial(lambda, kCoe1)) t += poly.evaluate(BigInt(1));
    return t;
  };
  EXPECT_EQ(total_of(Partition({3})), 384);
  EXPECT_EQ(total_of(Partition({3, 2})), 46080);
  EXPECT_EQ(total_of(Partition({2, 2, 2})), 645120);
}

TEST(Enumerate, TermCountUnitary) {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& lambda : partitions_no_ones_up_to_rank(n == 3 ? 2 : 3)) {
      ExternalSpec spec{Dyson::unitary, n};
      BigInt total = 0;
      for (const auto& [pattern, poly] : j_polynomial(lambda, spec)) {
        total += poly.evaluate(BigInt(1));
        EXPECT_NO_THROW(pattern.split_rows_columns());
      }
      EXPECT_EQ(total, factorial(n + lambda.size())) << n << " " << lambda.to_string();
    }
  }
}

TEST(Enumerate, PatternSymmetryAndNonnegativity) {
  for (const auto& lambda : partitions_no_ones_up_to_rank(3)) {
    auto j = j_polynomial(lambda, kCoe1);
    ASSERT_EQ(j.size(), 2u);
    EXPECT_EQ(j.begin()->second, std::next(j.begin())->second);
    for (const auto& [pattern, poly] : j) {
      for (const auto& c : poly.coefficients()) EXPECT_GE(c, 0);
    }
  }
  for (const auto& [pattern, poly] : j_polynomial(Partition({2, 2}), ExternalSpec{Dyson::orthogonal, 2})) {
    for (const auto& c : poly.coefficients()) EXPECT_GE(c, 0);
  }
}

TEST(Enumerate, AgreesWithWalkOracle) {
  struct Case {
    Dyson beta;
    int n;
    Partition lambda;
  };
  const std::vector<Case> cases{
      {Dyson::orthogonal, 1, Partition({2})},    {Dyson::orthogonal, 1, Partition({3})},
      {Dyson::orthogonal, 1, Partition({2, 2})}, {Dyson::orthogonal, 2, Partition()},
      {Dyson::orthogonal, 2, Partition({2})},    {Dyson::orthogonal, 2, Partition({3})},
      {Dyson::orthogonal, 3, Partition({2})},    {Dyson::unitary, 2, Partition({2, 2})},
      {Dyson::unitary, 3, Partition({3})},       {Dyson::unitary, 1, Partition({4})},
  };
  for (const auto& c : cases) {
    auto oracle = walk_enumeration(c.beta == Dyson::orthogonal, c.n, c.lambda);
    auto engine = j_polynomial(c.lambda, ExternalSpec{c.beta, c.n});
    ASSERT_EQ(engine.size(), oracle.size()) << c.n << " " << c.lambda.to_string();
    for (const auto& [pattern, poly] : engine) {
      auto it = oracle.find(pattern.match);
      ASSERT_NE(it, oracle.end());
      std::vector<BigInt> want;
      for (long v : it->second) want.emplace_back(v);
      EXPECT_EQ(poly, DimPolynomial(want)) << pattern.describe(c.beta) << " " << c.lambda.to_string();
    }
  }
}

TEST(Enumerate, IndependentOfWorkerCount) {
  for (const auto& [spec, lambda] : {std::pair{kCoe1, Partition({3, 2})},
                                     std::pair{ExternalSpec{Dyson::orthogonal, 2}, Partition({2, 2})},
                                     std::pair{ExternalSpec{Dyson::unitary, 3}, Partition({2, 2})}}) {
    auto graph = build_slot_graph(spec, lambda);
    const auto one = enumerate_wick(graph, 1);
    EXPECT_EQ(enumerate_wick(graph, 2), one);
    EXPECT_EQ(enumerate_wick(graph, 4), one);
  }
}

TEST(WickCache, Memoises) {
  WickCache cache;
  EngineOptions opts;
  opts.cache = &cache;
  auto a = diagram_sum(kCoe1, Partition({3}), opts);
  auto b = diagram_sum(kCoe1, Partition({3}), opts);
  EXPECT_EQ(a.get(), b.get());
  EXPECT_EQ(cache.size(), 1u);
  diagram_sum(ExternalSpec{Dyson::unitary, 1}, Partition({3}), opts);
  EXPECT_EQ(cache.size(), 2u);
}

TEST(Enumerate, NoSymplecticRules) {
  EngineOptions opts;
  opts.experimental = true;
  EXPECT_THROW(diagram_sum(ExternalSpec{Dyson::symplectic, 1}, Partition(), opts), std::invalid_argument);
}
