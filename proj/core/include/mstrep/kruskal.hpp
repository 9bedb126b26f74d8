#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mstrep/graph.hpp"

namespace mstrep {

/// Conventional union-find (union by rank, path compression) used by
/// Kruskal. Unrelated to the static-tree structures in static_union.hpp.
class BaselineDsu {
 public:
  explicit BaselineDsu(std::size_t n);

  VertexId find(VertexId v);
  /// Returns false if `a` and `b` were already in the same set.
  bool unite(VertexId a, VertexId b);

 private:
  std::vector<VertexId> parent_;
  std::vector<unsigned char> rank_;
};

struct MstResult {
  std::vector<EdgeId> tree_edges;      // ascending by EdgeKey
  std::vector<EdgeId> nontree_sorted;  // ascending by EdgeKey
  Weight total_weight = 0;
  std::vector<char> in_tree;           // indexed by eid
};

/// Kruskal's algorithm under the EdgeKey order. Throws NotConnected if the
/// graph has no spanning tree (or n == 0).
MstResult kruskal(const Graph& g);

/// Same, reusing an EdgeKey-sorted permutation from sort_edges().
MstResult kruskal(const Graph& g, std::span<const EdgeId> sorted);

}  // namespace mstrep
