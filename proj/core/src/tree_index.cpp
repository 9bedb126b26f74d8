#include "mstrep/tree_index.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace mstrep {

TreeIndex build_tree_index(const Graph& g, const MstResult& mst, VertexId root) {
  const std::size_t n = g.num_vertices();
  if (root >= n) {
    throw std::out_of_range("root " + std::to_string(root) + " not in [0," +
                            std::to_string(n) + ")");
  }
  if (n > std::numeric_limits<Label>::max() / 2 - 1) {
    throw std::length_error("graph too large for 32-bit DFS labels");
  }

  // Tree adjacency in CSR form, neighbors ascending.
  std::vector<std::uint32_t> offsets(n + 1, 0);
  for (EdgeId eid : mst.tree_edges) {
    const Edge& e = g.edge(eid);
    ++offsets[e.u + 1];
    ++offsets[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  std::vector<AdjacentEdge> adj(2 * mst.tree_edges.size());
  {
    std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
    for (EdgeId eid : mst.tree_edges) {
      const Edge& e = g.edge(eid);
      adj[cursor[e.u]++] = {e.v, eid};
      adj[cursor[e.v]++] = {e.u, eid};
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(adj.begin() + offsets[v], adj.begin() + offsets[v + 1],
              [](const AdjacentEdge& a, const AdjacentEdge& b) {
                return a.neighbor < b.neighbor;
              });
  }

  TreeIndex ti;
  ti.root = root;
  ti.parent.assign(n, root);
  ti.parent_eid.assign(n, kNoEdge);
  ti.label.assign(n, Interval{});
  ti.depth.assign(n, 0);
  ti.preorder.reserve(n);

  // next[v] is the position in v's adjacency of the next child to try.
  std::vector<std::uint32_t> next(offsets.begin(), offsets.end() - 1);
  std::vector<VertexId> stack;
  stack.reserve(n);
  Label counter = 0;
  ti.label[root].in = counter;
  ti.parent[root] = root;
  ti.preorder.push_back(root);
  stack.push_back(root);

  while (!stack.empty()) {
    const VertexId v = stack.back();
    if (next[v] < offsets[v + 1]) {
      const AdjacentEdge a = adj[next[v]++];
      if (a.eid == ti.parent_eid[v]) continue;
      const VertexId c = a.neighbor;
      ti.parent[c] = v;
      ti.parent_eid[c] = a.eid;
      ti.depth[c] = ti.depth[v] + 1;
      ti.label[c].in = ++counter;
      ti.preorder.push_back(c);
      stack.push_back(c);
    } else {
      stack.pop_back();
      if (v != root) ti.label[v].out = ++counter;
    }
  }
  ti.label[root].out = counter + 1;

  if (ti.preorder.size() != n) {
    throw NotConnected("tree edges do not span the graph");
  }
  return ti;
}

}  // namespace mstrep
