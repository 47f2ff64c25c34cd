#include <benchmark/benchmark.h>

#include "circe/ensemble.hpp"
#include "circe/monte_carlo.hpp"
#include "circe/traces.hpp"
#include "circe/wick.hpp"

using namespace circe;

namespace {

const std::vector<Partition> kVertexTypes{Partition({3}), Partition({2, 2}), Partition({3, 2}), Partition({2, 2, 2})};

// range(0): vertex type index, range(1): workers
void BM_EnumerateOrthogonal(benchmark::State& state) {
  const auto graph = build_slot_graph(ExternalSpec{Dyson::orthogonal, 1}, kVertexTypes[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_wick(graph, static_cast<unsigned>(state.range(1))));
  // F! 2^F pairings with twists
  double terms = 1;
  for (int k = 1; k <= graph.factor_count; ++k) terms *= 2 * k;
  state.SetLabel(kVertexTypes[state.range(0)].to_string());
  state.counters["terms/s"] = benchmark::Counter(terms, benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_EnumerateOrthogonal)->ArgsProduct({{0, 1, 2, 3}, {1, 2}})->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_EnumerateUnitary(benchmark::State& state) {
  const auto graph = build_slot_graph(ExternalSpec{Dyson::unitary, 2}, kVertexTypes[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_wick(graph, 1));
  state.SetLabel(kVertexTypes[state.range(0)].to_string());
}
BENCHMARK(BM_EnumerateUnitary)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_MomentSeries(benchmark::State& state) {
  EngineOptions o;
  o.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(moment_series(ExternalSpec{Dyson::orthogonal, 1}, static_cast<int>(state.range(0)), o));
}
BENCHMARK(BM_MomentSeries)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_TraceMoment(benchmark::State& state) {
  EngineOptions o;
  o.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(trace_moment(Partition({2}), Partition({2}), 4, o));
}
BENCHMARK(BM_TraceMoment)->Unit(benchmark::kMillisecond);

void BM_SampleCoe(benchmark::State& state) {
  auto rng = mc::stream_rng(1, 0);
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mc::sample_coe(N, rng));
}
BENCHMARK(BM_SampleCoe)->Arg(3)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
