#include "mstrep/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace mstrep::oracle {

namespace {

class SimpleUnionFind {
 public:
  explicit SimpleUnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), VertexId{0});
  }
  VertexId find(VertexId v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<VertexId> parent_;
};

std::vector<std::vector<AdjacentEdge>> tree_adjacency(const Graph& g,
                                                      const MstResult& mst) {
  std::vector<std::vector<AdjacentEdge>> adj(g.num_vertices());
  for (EdgeId eid : mst.tree_edges) {
    const Edge& e = g.edge(eid);
    adj[e.u].push_back({e.v, eid});
    adj[e.v].push_back({e.u, eid});
  }
  return adj;
}

std::vector<char> tree_mask(const Graph& g, const MstResult& mst) {
  std::vector<char> mask(g.num_edges(), 0);
  for (EdgeId t : mst.tree_edges) mask[t] = 1;
  return mask;
}

bool connected_without(const Graph& g, EdgeId removed) {
  SimpleUnionFind uf(g.num_vertices());
  std::size_t components = g.num_vertices();
  for (const Edge& e : g.edges()) {
    if (e.eid != removed && uf.unite(e.u, e.v)) --components;
  }
  return components <= 1;
}

}  // namespace

OracleResult oracle_replacements(const Graph& g, const MstResult& mst) {
  OracleResult result;
  result.tree_edges = mst.tree_edges;
  result.replacement.assign(g.num_edges(), std::nullopt);
  const auto adj = tree_adjacency(g, mst);
  const auto in_tree = tree_mask(g, mst);
  std::vector<char> side(g.num_vertices());
  std::vector<VertexId> stack;

  for (EdgeId cut : mst.tree_edges) {
    // Color the half of T - cut that contains cut.u.
    std::fill(side.begin(), side.end(), 0);
    const VertexId start = g.edge(cut).u;
    side[start] = 1;
    stack.assign(1, start);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (const AdjacentEdge& a : adj[v]) {
        if (a.eid != cut && !side[a.neighbor]) {
          side[a.neighbor] = 1;
          stack.push_back(a.neighbor);
        }
      }
    }

    const Edge* best = nullptr;
    for (const Edge& e : g.edges()) {
      if (in_tree[e.eid]) continue;
      if (side[e.u] != side[e.v] && (best == nullptr || edge_less(e, *best))) {
        best = &e;
      }
    }
    if (best) result.replacement[cut] = Replacement{best->eid, best->w};
  }
  return result;
}

OracleResult oracle_replacements_by_swap(const Graph& g, const MstResult& mst) {
  OracleResult result;
  result.tree_edges = mst.tree_edges;
  result.replacement.assign(g.num_edges(), std::nullopt);
  const std::size_t n = g.num_vertices();
  const auto in_tree = tree_mask(g, mst);

  for (EdgeId cut : mst.tree_edges) {
    const Edge* best = nullptr;
    for (const Edge& cand : g.edges()) {
      if (in_tree[cand.eid]) continue;
      SimpleUnionFind uf(n);
      std::size_t joined = 0;
      bool acyclic = true;
      for (EdgeId t : mst.tree_edges) {
        if (t == cut) continue;
        acyclic &= uf.unite(g.edge(t).u, g.edge(t).v);
        ++joined;
      }
      acyclic &= uf.unite(cand.u, cand.v);
      ++joined;
      const bool spanning = acyclic && joined == n - 1;
      if (spanning && (best == nullptr || edge_less(cand, *best))) best = &cand;
    }
    if (best) result.replacement[cut] = Replacement{best->eid, best->w};
  }
  return result;
}

std::optional<VitalEdge> oracle_vital(const Graph& g, const MstResult& mst) {
  if (mst.tree_edges.empty()) return std::nullopt;
  const std::vector<EdgeId> order = sort_edges(g);
  const std::size_t n = g.num_vertices();

  std::optional<VitalEdge> best;
  for (EdgeId removed : mst.tree_edges) {  // EdgeKey order
    SimpleUnionFind uf(n);
    std::size_t taken = 0;
    Weight weight = 0;
    for (EdgeId eid : order) {
      if (eid == removed) continue;
      const Edge& e = g.edge(eid);
      if (uf.unite(e.u, e.v)) {
        weight += e.w;
        ++taken;
      }
    }
    if (taken != n - 1) return std::nullopt;  // removed edge is a bridge
    const Weight delta = weight - mst.total_weight;
    if (!best || delta > best->delta) best = VitalEdge{removed, delta};
  }
  return best;
}

std::vector<EdgeId> oracle_bridges(const Graph& g) {
  std::vector<EdgeId> result;
  for (const Edge& e : g.edges()) {
    if (!connected_without(g, e.eid)) result.push_back(e.eid);
  }
  return result;
}

VertexId oracle_find(std::span<const VertexId> parent, std::span<const char> linked,
                     VertexId v) {
  while (linked[v]) v = parent[v];
  return v;
}

}  // namespace mstrep::oracle
