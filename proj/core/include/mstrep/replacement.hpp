#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mstrep/graph.hpp"
#include "mstrep/kruskal.hpp"
#include "mstrep/static_union.hpp"
#include "mstrep/tree_index.hpp"

namespace mstrep {

/// Marks a tree edge without any replacement.
inline constexpr EdgeId kBridge = kNoEdge;

/// Walk plan chosen by one path_label call. kSkip means the call returned at
/// the ancestor guard without walking.
enum class Plan { kSkip, kAnc, kLeft, kRight };

std::string_view to_string(Plan plan);

/// Per tree edge: the replacement non-tree edge, or kBridge.
class ReplacementTable {
 public:
  ReplacementTable() = default;
  ReplacementTable(std::size_t num_edges, std::span<const EdgeId> tree_edges);

  /// Tree edges in EdgeKey order.
  std::span<const EdgeId> tree_edges() const { return tree_edges_; }

  /// Replacement of `tree_eid`, or kBridge.
  EdgeId operator[](EdgeId tree_eid) const { return replacement_[tree_eid]; }
  bool is_bridge(EdgeId tree_eid) const { return replacement_[tree_eid] == kBridge; }

  /// First assignment wins; assigning twice is a contract violation.
  void assign(EdgeId tree_eid, EdgeId replacement);

  std::size_t assigned_count() const { return assigned_count_; }
  std::size_t bridge_count() const { return tree_edges_.size() - assigned_count_; }

  friend bool operator==(const ReplacementTable& a, const ReplacementTable& b) {
    return a.tree_edges_ == b.tree_edges_ && a.replacement_ == b.replacement_;
  }

 private:
  std::vector<EdgeId> tree_edges_;
  std::vector<EdgeId> replacement_;  // indexed by eid; kBridge if none
  std::size_t assigned_count_ = 0;
};

/// One path_label call as seen by the trace hook.
struct PathLabelTrace {
  EdgeId eid = 0;
  VertexId s = 0;
  VertexId t = 0;
  Plan plan = Plan::kSkip;
  std::vector<EdgeId> assigned;  // tree edges, in walk order
};

/// "e=<eid> plan=<ANC|LEFT|RIGHT|SKIP> assigned=[<eid>,...]"
std::string format_trace(const PathLabelTrace& trace);

using TraceSink = std::function<void(const PathLabelTrace&)>;

/// Walks the fundamental cycle of non-tree edge `e` = {s, t} upward from s,
/// assigning `e` to every not-yet-assigned tree edge it crosses and linking
/// the lower endpoint into its parent's set. Stops below LCA(s, t) (or at t
/// when t is an ancestor of s) using only IN/OUT comparisons.
///
/// If `assigned` is non-null the tree edges assigned by this call are
/// appended to it.
Plan path_label(const TreeIndex& ti, StaticUnion& su, ReplacementTable& rt,
                VertexId s, VertexId t, EdgeId e,
                std::vector<EdgeId>* assigned = nullptr);

struct ReplacementOptions {
  DsuEngine engine = DsuEngine::kGabowTarjan;
  // Stop scanning once every non-bridge tree edge has a replacement.
  bool early_exit = false;
  TraceSink trace;
};

struct ReplacementResult {
  ReplacementTable table;
  OpStats stats;
  std::size_t scanned_nontree_edges = 0;
};

/// Scans the EdgeKey-sorted non-tree edges of `mst`, calling path_label for
/// (u, v) and then (v, u) of each canonical edge. Tree edges left unassigned
/// are bridges.
ReplacementResult find_replacement_edges(const Graph& g, const MstResult& mst,
                                         const TreeIndex& ti,
                                         const ReplacementOptions& options = {});

/// Bridges of `g` by iterative low-link DFS, ascending eid. Parallel edges
/// are never bridges.
std::vector<EdgeId> bridges(const Graph& g);

struct VitalEdgeReport {
  bool defined = false;
  std::optional<EdgeId> edge;
  std::optional<Weight> delta;  // w(replacement) - w(edge)
  std::size_t bridge_count = 0;

  friend bool operator==(const VitalEdgeReport&, const VitalEdgeReport&) = default;
};

/// The tree edge with the largest w(R_e) - w(e); ties go to the smaller
/// EdgeKey. Undefined when any tree edge is a bridge.
VitalEdgeReport most_vital_edge(const Graph& g, const ReplacementTable& rt);

}  // namespace mstrep
