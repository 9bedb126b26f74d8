#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace mstrep;

namespace {

// Minimum spanning tree weight by enumerating every (n-1)-subset of edges.
Weight brute_force_mst_weight(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  bool found = false;
  Weight best = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != n - 1) continue;
    BaselineDsu dsu(n);
    Weight w = 0;
    bool acyclic = true;
    for (std::size_t i = 0; i < m && acyclic; ++i) {
      if (!(mask >> i & 1)) continue;
      acyclic = dsu.unite(g.edge(i).u, g.edge(i).v);
      w += g.edge(i).w;
    }
    if (acyclic && (!found || w < best)) {
      best = w;
      found = true;
    }
  }
  return best;
}

// Tree edges on the path between a and b, by walking the tree.
std::vector<EdgeId> tree_path(const Graph& g, const MstResult& mst, VertexId a, VertexId b) {
  std::vector<std::vector<AdjacentEdge>> adj(g.num_vertices());
  for (EdgeId t : mst.tree_edges) {
    adj[g.edge(t).u].push_back({g.edge(t).v, t});
    adj[g.edge(t).v].push_back({g.edge(t).u, t});
  }
  std::vector<EdgeId> via(g.num_vertices(), kNoEdge);
  std::vector<VertexId> from(g.num_vertices(), a);
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<VertexId> stack{a};
  seen[a] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (auto x : adj[v]) {
      if (!seen[x.neighbor]) {
        seen[x.neighbor] = 1;
        via[x.neighbor] = x.eid;
        from[x.neighbor] = v;
        stack.push_back(x.neighbor);
      }
    }
  }
  std::vector<EdgeId> path;
  for (VertexId v = b; v != a; v = from[v]) path.push_back(via[v]);
  return path;
}

}  // namespace

TEST(Kruskal, FourCycle) {
  Graph g = fixture::four_cycle();
  MstResult mst = kruskal(g);
  EXPECT_EQ(mst.tree_edges, (std::vector<EdgeId>{0, 1, 2}));
  EXPECT_EQ(mst.nontree_sorted, (std::vector<EdgeId>{3}));
  EXPECT_EQ(mst.total_weight, 6);
}

TEST(Kruskal, Singleton) {
  MstResult mst = kruskal(fixture::make_graph(1, {}));
  EXPECT_TRUE(mst.tree_edges.empty());
  EXPECT_TRUE(mst.nontree_sorted.empty());
  EXPECT_EQ(mst.total_weight, 0);
}

TEST(Kruskal, PathIsItsOwnTree) {
  Graph g = fixture::make_graph(4, {{0, 1, 9}, {1, 2, 3}, {2, 3, 5}});
  MstResult mst = kruskal(g);
  EXPECT_EQ(mst.tree_edges.size(), 3u);
  EXPECT_TRUE(mst.nontree_sorted.empty());
}

TEST(Kruskal, Disconnected) {
  EXPECT_THROW(kruskal(fixture::make_graph(4, {{0, 1, 1}, {2, 3, 1}})), NotConnected);
  EXPECT_THROW(kruskal(fixture::make_graph(0, {})), NotConnected);
}

TEST(Kruskal, Walkthrough) {
  using namespace fixture::wt;
  MstResult mst = kruskal(fixture::walkthrough_graph());
  EXPECT_EQ(mst.tree_edges, (std::vector<EdgeId>{ca, gh, he, ad, ce, be, bf}));
  EXPECT_EQ(mst.nontree_sorted, (std::vector<EdgeId>{ge, bg, de, fc, ag, df}));
}

TEST(KruskalProperty, MatchesEnumeration) {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 300; ++iter) {
    Graph g = fixture::random_multigraph(rng, 2 + iter % 7, iter % 7, -5, 5);
    if (g.num_edges() > 16) continue;
    EXPECT_EQ(kruskal(g).total_weight, brute_force_mst_weight(g));
  }
}

TEST(KruskalProperty, CycleEdgesAreHeaviest) {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 200; ++iter) {
    Graph g = fixture::random_graph(rng, 2, 40, 200, -10, 10);
    MstResult mst = kruskal(g);
    for (EdgeId ne : mst.nontree_sorted) {
      const Edge& e = g.edge(ne);
      for (EdgeId te : tree_path(g, mst, e.u, e.v)) {
        EXPECT_TRUE(edge_less(g.edge(te), e));
      }
    }
  }
}

TEST(KruskalProperty, IndependentOfInputOrder) {
  std::mt19937_64 rng(8);
  for (int iter = 0; iter < 100; ++iter) {
    Graph g = fixture::random_multigraph(rng, 30, 60, 0, 3);
    MstResult a = kruskal(g);
    EXPECT_EQ(a.tree_edges, kruskal(g).tree_edges);

    // Shuffle the input lines; compare trees as (w, u, v) multisets.
    std::vector<std::tuple<VertexId, VertexId, Weight>> raw;
    for (const Edge& e : g.edges()) raw.emplace_back(e.v, e.u, e.w);
    std::vector<std::size_t> perm(raw.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::tuple<VertexId, VertexId, Weight>> shuffled;
    for (auto i : perm) shuffled.push_back(raw[i]);
    Graph h(g.num_vertices(), shuffled);
    MstResult b = kruskal(h);
    ASSERT_EQ(a.tree_edges.size(), b.tree_edges.size());
    EXPECT_EQ(a.total_weight, b.total_weight);
    for (std::size_t i = 0; i < a.tree_edges.size(); ++i) {
      const Edge& x = g.edge(a.tree_edges[i]);
      const Edge& y = h.edge(b.tree_edges[i]);
      EXPECT_EQ(std::tie(x.w, x.u, x.v), std::tie(y.w, y.u, y.v));
    }
  }
}

TEST(Kruskal, WeightOverflowDetected) {
  std::vector<std::tuple<VertexId, VertexId, Weight>> raw;
  for (VertexId v = 1; v < 5; ++v) raw.emplace_back(v - 1, v, kMaxAbsWeight);
  EXPECT_THROW(kruskal(Graph(5, raw)), std::overflow_error);
}
