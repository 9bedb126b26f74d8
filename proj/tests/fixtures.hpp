#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <tuple>
#include <vector>

#include "mstrep/mstrep.hpp"

namespace mstrep::fixture {

// Worked example graph. Vertex ids: a=0 c=1 d=2 h=3 b=4 f=5 g=6 e=7, root c.
// Edge i (0-based eid) has weight i + 1.
namespace wt {
inline constexpr VertexId a = 0, c = 1, d = 2, h = 3, b = 4, f = 5, g = 6, e = 7;
inline constexpr VertexId kRoot = c;
// eids
inline constexpr EdgeId ca = 0, gh = 1, he = 2, ad = 3, ce = 4, ge = 5, be = 6,
                        bg = 7, bf = 8, de = 9, fc = 10, ag = 11, df = 12;
}  // namespace wt

inline Graph walkthrough_graph() {
  using namespace wt;
  std::vector<std::tuple<VertexId, VertexId, Weight>> raw = {
      {c, a, 1},  {g, h, 2},  {h, e, 3},  {a, d, 4},  {c, e, 5},
      {g, e, 6},  {b, e, 7},  {b, g, 8},  {b, f, 9},  {d, e, 10},
      {f, c, 11}, {a, g, 12}, {d, f, 13}};
  return Graph(8, raw);
}

inline Graph make_graph(std::size_t n,
                        std::vector<std::tuple<VertexId, VertexId, Weight>> raw) {
  return Graph(n, raw);
}

inline Graph four_cycle() {
  return make_graph(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 3}, {3, 0, 4}});
}

// Random connected simple graph with n in [nmin, nmax] and
// m in [n - 1, min(mcap, n(n-1)/2)], weights uniform in [wmin, wmax].
inline Graph random_graph(std::mt19937_64& rng, std::size_t nmin, std::size_t nmax,
                          std::size_t mcap, Weight wmin, Weight wmax) {
  const auto n = static_cast<std::size_t>(
      uniform_int(rng, static_cast<std::int64_t>(nmin), static_cast<std::int64_t>(nmax)));
  const std::size_t mmax = std::min(mcap, n * (n - 1) / 2);
  const auto m = static_cast<std::size_t>(uniform_int(
      rng, static_cast<std::int64_t>(n - 1), static_cast<std::int64_t>(mmax)));
  GeneratorParams p;
  p.family = GraphFamily::kRandomConnected;
  p.n = n;
  p.m = m;
  p.wmin = wmin;
  p.wmax = wmax;
  p.seed = rng();
  return generate_graph(p);
}

// Random multigraph: a random tree plus extra edges that may repeat pairs
// or be self-loops (dropped on construction).
inline Graph random_multigraph(std::mt19937_64& rng, std::size_t n, std::size_t extra,
                               Weight wmin, Weight wmax) {
  std::vector<std::tuple<VertexId, VertexId, Weight>> raw;
  for (VertexId v = 1; v < n; ++v) {
    raw.emplace_back(v, static_cast<VertexId>(uniform_int(rng, 0, v - 1)),
                     uniform_int(rng, wmin, wmax));
  }
  for (std::size_t i = 0; i < extra; ++i) {
    raw.emplace_back(static_cast<VertexId>(uniform_int(rng, 0, n - 1)),
                     static_cast<VertexId>(uniform_int(rng, 0, n - 1)),
                     uniform_int(rng, wmin, wmax));
  }
  std::shuffle(raw.begin(), raw.end(), rng);
  return Graph(n, raw);
}

// Engine table vs oracle table, entry by entry.
inline bool same_replacements(const ReplacementTable& rt, const oracle::OracleResult& o) {
  for (EdgeId te : rt.tree_edges()) {
    const auto& want = o.replacement[te];
    if (rt.is_bridge(te) != !want.has_value()) return false;
    if (want && rt[te] != want->eid) return false;
  }
  return std::equal(rt.tree_edges().begin(), rt.tree_edges().end(),
                    o.tree_edges.begin(), o.tree_edges.end());
}

inline std::uint64_t find_bound(std::size_t n, std::size_t m) {
  return 4 * (static_cast<std::uint64_t>(m) - n + 1) + 2 * (static_cast<std::uint64_t>(n) - 1) + n;
}

}  // namespace mstrep::fixture
