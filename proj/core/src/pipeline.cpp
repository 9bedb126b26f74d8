#include "mstrep/pipeline.hpp"

#include <chrono>

namespace mstrep {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
      .count();
}

}  // namespace

Analysis analyze(const Graph& g, const AnalysisOptions& options) {
  using Clock = std::chrono::steady_clock;
  Analysis a;

  auto t0 = Clock::now();
  a.mst = kruskal(g, sort_edges(g));
  a.times.sort_kruskal_ms = elapsed_ms(t0);

  t0 = Clock::now();
  a.index = build_tree_index(g, a.mst, options.root);
  a.times.index_ms = elapsed_ms(t0);

  t0 = Clock::now();
  ReplacementOptions ro;
  ro.engine = options.engine;
  ro.early_exit = options.early_exit;
  ro.trace = options.trace;
  a.replacements = find_replacement_edges(g, a.mst, a.index, ro);
  a.times.scan_ms = elapsed_ms(t0);

  a.vital = most_vital_edge(g, a.replacements.table);
  return a;
}

}  // namespace mstrep
