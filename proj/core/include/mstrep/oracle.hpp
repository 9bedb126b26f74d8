#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mstrep/graph.hpp"
#include "mstrep/kruskal.hpp"

// Brute-force reference results. Nothing here uses the static-union
// structures, DFS labels or the cycle walk; these functions only depend on
// the graph types and the MST edge set.

namespace mstrep::oracle {

struct Replacement {
  EdgeId eid;
  Weight w;

  friend bool operator==(const Replacement&, const Replacement&) = default;
};

struct VitalEdge {
  EdgeId eid;
  Weight delta;

  friend bool operator==(const VitalEdge&, const VitalEdge&) = default;
};

struct OracleResult {
  std::vector<EdgeId> tree_edges;                       // as given by the MST
  std::vector<std::optional<Replacement>> replacement;  // indexed by eid
  std::optional<VitalEdge> vital;
};

/// For each tree edge: cut the tree there, two-color the halves and take
/// the EdgeKey-minimum non-tree edge with one endpoint in each. O(n * m).
OracleResult oracle_replacements(const Graph& g, const MstResult& mst);

/// Slower cross-check: for each tree edge, try every non-tree edge as a swap
/// and keep the EdgeKey-minimum one that yields a spanning tree.
/// O(n * m * n); meant for tiny graphs.
OracleResult oracle_replacements_by_swap(const Graph& g, const MstResult& mst);

/// Most vital edge by recomputing the MST of G - e for every tree edge.
/// nullopt when a tree edge is a bridge (or there are no tree edges).
std::optional<VitalEdge> oracle_vital(const Graph& g, const MstResult& mst);

/// Bridges by deletion: an edge is a bridge iff G - e is disconnected.
/// Ascending eid.
std::vector<EdgeId> oracle_bridges(const Graph& g);

/// Walks v, parent[v], parent[parent[v]], ... and returns the first vertex
/// whose linked flag is false. The root must be unlinked.
VertexId oracle_find(std::span<const VertexId> parent, std::span<const char> linked,
                     VertexId v);

}  // namespace mstrep::oracle
