#include "mstrep/replacement.hpp"

#include <algorithm>

namespace mstrep {

std::string_view to_string(Plan plan) {
  switch (plan) {
    case Plan::kSkip:
      return "SKIP";
    case Plan::kAnc:
      return "ANC";
    case Plan::kLeft:
      return "LEFT";
    case Plan::kRight:
      return "RIGHT";
  }
  return "?";
}

ReplacementTable::ReplacementTable(std::size_t num_edges,
                                   std::span<const EdgeId> tree_edges)
    : tree_edges_(tree_edges.begin(), tree_edges.end()),
      replacement_(num_edges, kBridge) {}

void ReplacementTable::assign(EdgeId tree_eid, EdgeId replacement) {
  MSTREP_EXPECTS(tree_eid < replacement_.size(), "edge id out of range");
  MSTREP_EXPECTS(replacement_[tree_eid] == kBridge,
                 "tree edge " + std::to_string(tree_eid) + " already assigned");
  replacement_[tree_eid] = replacement;
  ++assigned_count_;
}

std::string format_trace(const PathLabelTrace& trace) {
  std::string out = "e=" + std::to_string(trace.eid) + " plan=" +
                    std::string(to_string(trace.plan)) + " assigned=[";
  for (std::size_t i = 0; i < trace.assigned.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(trace.assigned[i]);
  }
  out += ']';
  return out;
}

namespace {

template <typename Engine>
Plan path_label_impl(const TreeIndex& ti, Engine& su, ReplacementTable& rt,
                     VertexId s, VertexId t, EdgeId e,
                     std::vector<EdgeId>* assigned) {
  const Interval ls = su.label(s);
  const Interval lt = su.label(t);

  if (ls.in < lt.in && lt.in < ls.out) return Plan::kSkip;  // s above t

  Plan plan;
  Label k1;
  Label k2;
  if (lt.in < ls.in && ls.in < lt.out) {
    plan = Plan::kAnc;
    k1 = lt.in;
    k2 = ls.in;
  } else if (ls.in < lt.in) {
    plan = Plan::kLeft;
    k1 = ls.out;
    k2 = lt.in;
  } else {
    plan = Plan::kRight;
    k1 = lt.out;
    k2 = ls.in;
  }

  OpStats& stats = su.stats();
  VertexId v = s;
  while (k1 < k2) {
    ++stats.loop_iterations;
    if (su.find(v) == v) {
      MSTREP_EXPECTS(v != ti.root, "cycle walk reached the root");
      const EdgeId tree_eid = ti.parent_eid[v];
      rt.assign(tree_eid, e);
      su.link(v);
      if (assigned) assigned->push_back(tree_eid);
    }
    v = su.find(v);
    switch (plan) {
      case Plan::kAnc:
        k2 = su.label(v).in;
        break;
      case Plan::kLeft:
#ifdef MSTREP_FAULT_LEFT_K1
        // Deliberately broken build used to check that verify detects bugs.
        k2 = su.label(v).in;
#else
        k1 = su.label(v).out;
#endif
        break;
      case Plan::kRight:
        k2 = su.label(v).in;
        break;
      case Plan::kSkip:
        break;
    }
  }
  return plan;
}

template <typename Engine>
std::size_t scan_nontree_edges(const Graph& g, const MstResult& mst,
                               const TreeIndex& ti, Engine& su,
                               ReplacementTable& rt,
                               const ReplacementOptions& options) {
  const std::size_t n = g.num_vertices();
  for (VertexId v = 0; v < n; ++v) su.makeset(v);

  std::size_t target = mst.tree_edges.size();
  if (options.early_exit) target -= bridges(g).size();

  // Endpoints in scan order, so the loop below reads them sequentially and
  // can issue cache hints for edges a few steps ahead.
  struct Item {
    VertexId u;
    VertexId v;
    EdgeId eid;
  };
  std::vector<Item> items;
  items.reserve(mst.nontree_sorted.size());
  constexpr std::size_t kAhead = 16;
  const auto& order = mst.nontree_sorted;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i + kAhead < order.size()) __builtin_prefetch(&g.edge(order[i + kAhead]));
    const Edge& e = g.edge(order[i]);
    items.push_back({e.u, e.v, order[i]});
  }

  std::size_t scanned = 0;
  PathLabelTrace trace;
  std::vector<EdgeId>* sink = options.trace ? &trace.assigned : nullptr;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (options.early_exit && rt.assigned_count() == target) break;
    if (i + kAhead < items.size()) {
      const Item& x = items[i + kAhead];
      su.prefetch(x.u);
      su.prefetch(x.v);
    }
    if (i + kAhead / 2 < items.size()) {
      const Item& x = items[i + kAhead / 2];
      su.prefetch_microset(x.u);
      su.prefetch_microset(x.v);
    }
    const Item& e = items[i];
    const EdgeId eid = e.eid;
    if (!options.trace) {
      path_label_impl(ti, su, rt, e.u, e.v, eid, nullptr);
      path_label_impl(ti, su, rt, e.v, e.u, eid, nullptr);
    } else {
      for (auto [s, t] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        trace.assigned.clear();
        trace.eid = eid;
        trace.s = s;
        trace.t = t;
        trace.plan = path_label_impl(ti, su, rt, s, t, eid, sink);
        options.trace(trace);
      }
    }
    ++scanned;
  }
  return scanned;
}

}  // namespace

Plan path_label(const TreeIndex& ti, StaticUnion& su, ReplacementTable& rt,
                VertexId s, VertexId t, EdgeId e, std::vector<EdgeId>* assigned) {
  return su.visit([&](auto& engine) {
    return path_label_impl(ti, engine, rt, s, t, e, assigned);
  });
}

ReplacementResult find_replacement_edges(const Graph& g, const MstResult& mst,
                                         const TreeIndex& ti,
                                         const ReplacementOptions& options) {
  ReplacementResult result;
  result.table = ReplacementTable(g.num_edges(), mst.tree_edges);
  StaticUnion su(ti, options.engine);
  su.visit([&](auto& engine) {
    result.scanned_nontree_edges =
        scan_nontree_edges(g, mst, ti, engine, result.table, options);
  });
  result.stats = su.stats();
  return result;
}

std::vector<EdgeId> bridges(const Graph& g) {
  const std::size_t n = g.num_vertices();
  constexpr std::uint32_t kUnseen = 0;
  std::vector<std::uint32_t> disc(n, kUnseen);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<EdgeId> via(n, kNoEdge);  // tree edge used to enter the vertex

  struct Frame {
    VertexId v;
    std::uint32_t next;  // index into neighbors(v)
  };
  std::vector<Frame> stack;
  std::vector<EdgeId> result;
  std::uint32_t time = 0;

  for (VertexId start = 0; start < n; ++start) {
    if (disc[start] != kUnseen) continue;
    disc[start] = low[start] = ++time;
    stack.push_back({start, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto adj = g.neighbors(f.v);
      if (f.next < adj.size()) {
        const AdjacentEdge a = adj[f.next++];
        if (a.eid == via[f.v]) continue;
        if (disc[a.neighbor] == kUnseen) {
          disc[a.neighbor] = low[a.neighbor] = ++time;
          via[a.neighbor] = a.eid;
          stack.push_back({a.neighbor, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[a.neighbor]);
        }
      } else {
        const VertexId v = f.v;
        stack.pop_back();
        if (!stack.empty()) {
          const VertexId p = stack.back().v;
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) result.push_back(via[v]);
        }
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

VitalEdgeReport most_vital_edge(const Graph& g, const ReplacementTable& rt) {
  VitalEdgeReport report;
  report.bridge_count = rt.bridge_count();
  if (report.bridge_count > 0) return report;

  report.defined = !rt.tree_edges().empty();
  for (EdgeId te : rt.tree_edges()) {  // EdgeKey order, so '>' keeps the first
    const Weight delta = g.edge(rt[te]).w - g.edge(te).w;
    if (!report.delta || delta > *report.delta) {
      report.edge = te;
      report.delta = delta;
    }
  }
  return report;
}

}  // namespace mstrep
