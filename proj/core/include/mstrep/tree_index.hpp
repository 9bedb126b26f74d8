#pragma once

#include <cstdint>
#include <vector>

#include "mstrep/graph.hpp"
#include "mstrep/kruskal.hpp"

namespace mstrep {

using Label = std::uint32_t;

/// IN/OUT labels of one vertex, stored together since every comparison in
/// the cycle walk reads both.
struct Interval {
  Label in = 0;
  Label out = 0;
};

/// The spanning tree rooted at `root`, with Euler-step DFS labels.
///
/// The DFS counter starts at 0 with IN[root] = 0 and advances by one on every
/// edge step, down or up. A down-step into v assigns IN[v]; the up-step out
/// of v assigns OUT[v]. The root has no up-step, so OUT[root] is set to the
/// final counter + 1, above every other label.
/// Children are visited in ascending vertex id; `preorder` lists vertices by
/// ascending IN.
struct TreeIndex {
  VertexId root = 0;
  std::vector<VertexId> parent;     // parent[root] == root
  std::vector<EdgeId> parent_eid;   // kNoEdge at the root
  std::vector<Interval> label;      // IN/OUT per vertex
  std::vector<std::uint32_t> depth;  // only used by tests and oracles
  std::vector<VertexId> preorder;   // vertices by ascending IN

  std::size_t size() const { return parent.size(); }
  Label in(VertexId v) const { return label[v].in; }
  Label out(VertexId v) const { return label[v].out; }

  /// Strict ancestry: IN[a] < IN[d] < OUT[a]. A vertex is not its own ancestor.
  bool is_ancestor(VertexId a, VertexId d) const {
    return label[a].in < label[d].in && label[d].in < label[a].out;
  }
};

/// Roots `mst` at `root` with an iterative DFS over tree edges only.
/// Throws std::out_of_range if root >= n.
TreeIndex build_tree_index(const Graph& g, const MstResult& mst, VertexId root = 0);

}  // namespace mstrep
