#include <benchmark/benchmark.h>

#include "rankgraph/automorphisms.hpp"
#include "rankgraph/catalog.hpp"
#include "rankgraph/crown_graph.hpp"
#include "rankgraph/crown_powers.hpp"
#include "rankgraph/graphs.hpp"
#include "rankgraph/group_structure.hpp"

using namespace rankgraph;

static void BM_SchreierSimsSymmetric(benchmark::State& state) {
  auto e = symmetric(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(to_perm_group(e).order());
}
BENCHMARK(BM_SchreierSimsSymmetric)->Arg(8)->Arg(12);

static void BM_CayleyTable(benchmark::State& state) {
  Catalog catalog;
  auto e = catalog.resolve(state.range(0) == 0 ? "A5" : "PGL(2,7)");
  for (auto _ : state) benchmark::DoNotOptimize(to_group(e)->size());
}
BENCHMARK(BM_CayleyTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_GeneratingGraph(benchmark::State& state) {
  Catalog catalog;
  auto g = to_group(catalog.resolve(state.range(0) == 0 ? "A5" : "S5"));
  for (auto _ : state) {
    SubgroupCache cache(g);
    benchmark::DoNotOptimize(build_generating_graph(cache).edge_count());
  }
}
BENCHMARK(BM_GeneratingGraph)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_RankGraphD3(benchmark::State& state) {
  Catalog catalog;
  auto g = to_group(catalog.resolve("S4"));
  for (auto _ : state) {
    SubgroupCache cache(g);
    benchmark::DoNotOptimize(build_delta_d(cache, 3).edge_count());
  }
}
BENCHMARK(BM_RankGraphD3)->Unit(benchmark::kMillisecond);

static void BM_AutomorphismGroup(benchmark::State& state) {
  Catalog catalog;
  auto g = to_group(catalog.resolve("S5"));
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(g).order());
}
BENCHMARK(BM_AutomorphismGroup)->Unit(benchmark::kMillisecond);

static void BM_OrbitTable(benchmark::State& state) {
  Catalog catalog;
  auto l = resolve_monolithic(catalog, "A5");
  AutGroup x = x_subgroup(automorphism_group(l->group_ptr()), l->socle_members());
  const auto t = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    OrbitTable table(l, x, standard_generating_tuple(*l, t));
    benchmark::DoNotOptimize(table.orbit_count());
  }
}
BENCHMARK(BM_OrbitTable)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_CrownGraphWeak(benchmark::State& state) {
  Catalog catalog;
  auto l = resolve_monolithic(catalog, "A5");
  AutGroup x = x_subgroup(automorphism_group(l->group_ptr()), l->socle_members());
  OrbitTable table(l, x, standard_generating_tuple(*l, 3));
  const auto eta = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    CrownGraph graph(table, eta);
    benchmark::DoNotOptimize(weak_connectivity(graph).pass);
  }
}
BENCHMARK(BM_CrownGraphWeak)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
