#include "mstrep/kruskal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace mstrep {

BaselineDsu::BaselineDsu(std::size_t n) : parent_(n), rank_(n, 0) {
  std::iota(parent_.begin(), parent_.end(), VertexId{0});
}

VertexId BaselineDsu::find(VertexId v) {
  VertexId root = v;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[v] != root) {
    VertexId next = parent_[v];
    parent_[v] = root;
    v = next;
  }
  return root;
}

bool BaselineDsu::unite(VertexId a, VertexId b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  return true;
}

MstResult kruskal(const Graph& g) { return kruskal(g, sort_edges(g)); }

MstResult kruskal(const Graph& g, std::span<const EdgeId> sorted) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw NotConnected("graph has no vertices");

  MstResult r;
  r.tree_edges.reserve(n - 1);
  r.nontree_sorted.reserve(g.num_edges() - std::min(g.num_edges(), n - 1));
  r.in_tree.assign(g.num_edges(), 0);

  BaselineDsu dsu(n);
  for (EdgeId eid : sorted) {
    const Edge& e = g.edge(eid);
    if (r.tree_edges.size() < n - 1 && dsu.unite(e.u, e.v)) {
      r.tree_edges.push_back(eid);
      r.in_tree[eid] = 1;
      if (__builtin_add_overflow(r.total_weight, e.w, &r.total_weight)) {
        throw std::overflow_error("MST total weight overflows 64 bits");
      }
    } else {
      r.nontree_sorted.push_back(eid);
    }
  }
  if (r.tree_edges.size() != n - 1) {
    throw NotConnected("graph is not connected: spanning forest has " +
                       std::to_string(r.tree_edges.size()) + " of " +
                       std::to_string(n - 1) + " edges");
  }
  return r;
}

}  // namespace mstrep
