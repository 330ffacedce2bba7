#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "pgcycles/blowup.hpp"
#include "pgcycles/cycle_algorithms.hpp"
#include "pgcycles/elliptic.hpp"
#include "pgcycles/pg_construct.hpp"

using namespace pgc;

namespace {

// Chain of n curves of self-intersection -3.
GraphPtr chain(long n) {
  std::vector<VertexData> v;
  std::vector<EdgeData> e;
  for (long i = 0; i < n; ++i) {
    v.push_back({"C" + std::to_string(i), -3, 0});
    if (i > 0) e.push_back({"C" + std::to_string(i - 1), "C" + std::to_string(i), 1});
  }
  return DualGraph::create(v, e);
}

void BM_FundamentalCycle(benchmark::State& state) {
  const auto g = chain(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fundamental_cycle(g));
}
BENCHMARK(BM_FundamentalCycle)->RangeMultiplier(2)->Range(4, 64);

void BM_CanonicalCycle(benchmark::State& state) {
  const auto g = chain(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_cycle(g));
}
BENCHMARK(BM_CanonicalCycle)->RangeMultiplier(2)->Range(4, 64);

void BM_ConeConstruction(benchmark::State& state) {
  const long genus = state.range(0);
  const auto g = DualGraph::create({{"E", -2, static_cast<int>(genus)}}, {});
  const SingularityData s{g, static_cast<int>(genus + 1), std::nullopt, std::nullopt, true};
  const Cycle w = 2 * Cycle::reduced(g);
  const Cycle c0 = seed_C0(s, SeedStrategy::Canonical, w).c0;
  for (auto _ : state) benchmark::DoNotOptimize(run_construction(s, w, c0));
}
BENCHMARK(BM_ConeConstruction)->DenseRange(2, 8, 2);

void BM_ClassifyUlrich(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_ulrich(state.range(0)));
}
BENCHMARK(BM_ClassifyUlrich)->DenseRange(1, 5);

void BM_BlowupChain(benchmark::State& state) {
  const auto base = chain(3);
  for (auto _ : state) {
    GraphPtr g = base;
    Cycle z = fundamental_cycle(g);
    for (long i = 0; i < state.range(0); ++i) {
      const auto m = blow_up(g, GenericOn{g->vertex(g->size() - 1).id});
      z = pullback(m, z);
      g = m.target;
    }
    benchmark::DoNotOptimize(z);
  }
}
BENCHMARK(BM_BlowupChain)->RangeMultiplier(2)->Range(1, 32);

}  // namespace
BENCHMARK_MAIN();
