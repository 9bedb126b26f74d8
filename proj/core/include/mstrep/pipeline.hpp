#pragma once

#include "mstrep/graph.hpp"
#include "mstrep/kruskal.hpp"
#include "mstrep/replacement.hpp"
#include "mstrep/tree_index.hpp"

namespace mstrep {

struct AnalysisOptions {
  VertexId root = 0;
  DsuEngine engine = DsuEngine::kGabowTarjan;
  bool early_exit = false;
  TraceSink trace;
};

/// Wall time per phase, in milliseconds. The scan phase includes disjoint
/// set initialization (and the bridge count when early exit is on).
struct PhaseTimes {
  double sort_kruskal_ms = 0;
  double index_ms = 0;
  double scan_ms = 0;
};

struct Analysis {
  MstResult mst;
  TreeIndex index;
  ReplacementResult replacements;
  VitalEdgeReport vital;
  PhaseTimes times;
};

/// Sort + Kruskal, root and label the tree, scan the non-tree edges and
/// derive the most vital edge. Throws NotConnected for disconnected input
/// and std::out_of_range for a bad root.
Analysis analyze(const Graph& g, const AnalysisOptions& options = {});

}  // namespace mstrep
