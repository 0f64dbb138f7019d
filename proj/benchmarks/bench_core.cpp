#include <benchmark/benchmark.h>

#include <random>

#include "wsat/canonical.hpp"
#include "wsat/constructions.hpp"
#include "wsat/percolation.hpp"
#include "wsat/search.hpp"

using namespace wsat;

namespace {

Graph seeded_random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution flip(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (flip(rng)) g.add_edge(u, v);
  return g;
}

void BM_ClosureGnt(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = gnt(n, 4).graph;
  for (auto _ : state) benchmark::DoNotOptimize(closure_complete(g, PatternSpec(2, 4)));
}
BENCHMARK(BM_ClosureGnt)->Arg(8)->Arg(10)->Arg(12);

void BM_CanonicalKey(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph g = seeded_random_graph(n, 0.4, 99);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(g));
}
BENCHMARK(BM_CanonicalKey)->Arg(7)->Arg(9)->Arg(12);

void BM_Freeness(benchmark::State& state) {
  Graph g = seeded_random_graph(static_cast<int>(state.range(0)), 0.5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(is_kst_free(g, PatternSpec(2, 4)));
}
BENCHMARK(BM_Freeness)->Arg(7)->Arg(10);

void BM_EdgeCompletion(benchmark::State& state) {
  Graph g = seeded_random_graph(10, 0.4, 21);
  auto miss = missing_edges(g);
  std::size_t i = 0;
  for (auto _ : state) {
    Edge e = miss[i++ % miss.size()];
    benchmark::DoNotOptimize(edge_completes_kst_fast(g, e, PatternSpec(2, 3)));
  }
}
BENCHMARK(BM_EdgeCompletion);

void BM_SearchLevel(benchmark::State& state) {
  SearchConfig cfg(6, PatternSpec(2, 3));
  for (auto _ : state) benchmark::DoNotOptimize(verify_no_smaller(cfg, 6));
}
BENCHMARK(BM_SearchLevel);

}  // namespace

BENCHMARK_MAIN();
