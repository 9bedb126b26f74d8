#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "mstrep/mstrep.hpp"

namespace {

using namespace mstrep;

struct Prepared {
  Graph g;
  MstResult mst;
  TreeIndex ti;
};

// path-chords with m = 4n, built once per size.
const Prepared& prepared(std::size_t n) {
  static std::map<std::size_t, Prepared> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    GeneratorParams p;
    p.family = GraphFamily::kPathChords;
    p.n = n;
    p.m = 4 * n;
    Graph g = generate_graph(p);
    MstResult mst = kruskal(g);
    TreeIndex ti = build_tree_index(g, mst);
    it = cache.emplace(n, Prepared{std::move(g), std::move(mst), std::move(ti)}).first;
  }
  return it->second;
}

void BM_Scan(benchmark::State& state, DsuEngine engine) {
  const Prepared& p = prepared(static_cast<std::size_t>(state.range(0)));
  ReplacementOptions opts;
  opts.engine = engine;
  OpStats stats;
  for (auto _ : state) {
    auto r = find_replacement_edges(p.g, p.mst, p.ti, opts);
    stats = r.stats;
    benchmark::DoNotOptimize(r.table.assigned_count());
  }
  state.SetItemsProcessed(state.iterations() * p.g.num_edges());
  state.counters["finds"] = static_cast<double>(stats.finds);
  state.counters["steps_per_edge"] =
      static_cast<double>(stats.engine_steps) / static_cast<double>(p.g.num_edges());
}

void BM_SortKruskal(benchmark::State& state) {
  const Prepared& p = prepared(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto mst = kruskal(p.g);
    benchmark::DoNotOptimize(mst.total_weight);
  }
  state.SetItemsProcessed(state.iterations() * p.g.num_edges());
}

void BM_TreeIndex(benchmark::State& state) {
  const Prepared& p = prepared(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto ti = build_tree_index(p.g, p.mst);
    benchmark::DoNotOptimize(ti.label.data());
  }
  state.SetItemsProcessed(state.iterations() * p.g.num_vertices());
}

void BM_RandomFinds(benchmark::State& state, DsuEngine engine) {
  const Prepared& p = prepared(static_cast<std::size_t>(state.range(0)));
  const std::size_t n = p.ti.size();
  std::mt19937_64 rng(1);
  std::vector<VertexId> queries(1 << 16);
  for (auto& q : queries) q = static_cast<VertexId>(uniform_int(rng, 0, n - 1));
  for (auto _ : state) {
    state.PauseTiming();
    StaticUnion su(p.ti, engine);
    for (VertexId v = 0; v < n; ++v) su.makeset(v);
    state.ResumeTiming();
    for (std::size_t i = 0; i < queries.size(); ++i) {
      const VertexId r = su.find(queries[i]);
      if (i % 2 == 0 && r != p.ti.root) su.link(r);
    }
  }
  state.SetItemsProcessed(state.iterations() * queries.size());
}

}  // namespace

BENCHMARK_CAPTURE(BM_Scan, gt, DsuEngine::kGabowTarjan)
    ->RangeMultiplier(2)->Range(1 << 14, 1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Scan, ref, DsuEngine::kReference)
    ->RangeMultiplier(2)->Range(1 << 14, 1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SortKruskal)->RangeMultiplier(4)->Range(1 << 14, 1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TreeIndex)->RangeMultiplier(4)->Range(1 << 14, 1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RandomFinds, gt, DsuEngine::kGabowTarjan)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK_CAPTURE(BM_RandomFinds, ref, DsuEngine::kReference)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK_MAIN();
