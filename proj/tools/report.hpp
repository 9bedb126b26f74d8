#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mstrep/graph.hpp"
#include "mstrep/kruskal.hpp"
#include "mstrep/oracle.hpp"
#include "mstrep/pipeline.hpp"
#include "mstrep/static_union.hpp"

namespace mstrep::cli {

struct ReportRow {
  Edge tree;
  std::optional<Edge> replacement;  // nullopt: bridge

  friend bool operator==(const ReportRow& a, const ReportRow& b) {
    return same_edge(a.tree, b.tree) && a.replacement.has_value() == b.replacement.has_value() &&
           (!a.replacement || same_edge(*a.replacement, *b.replacement));
  }

  // eid is not serialized, so reports compare on (u, v, w) only.
  static bool same_edge(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v && a.w == b.w;
  }
};

struct VitalLine {
  bool defined = false;
  VertexId u = 0;
  VertexId v = 0;
  Weight delta = 0;
  std::size_t bridges = 0;

  friend bool operator==(const VitalLine&, const VitalLine&) = default;
};

/// Everything `compute` and `oracle` print.
struct Report {
  Weight mst_weight = 0;
  std::vector<ReportRow> rows;  // tree edges, EdgeKey order
  VitalLine vital;
  std::optional<OpStats> stats;

  friend bool operator==(const Report&, const Report&) = default;
};

Report make_report(const Graph& g, const Analysis& analysis, bool with_stats);

Report make_oracle_report(const Graph& g, const MstResult& mst,
                          const oracle::OracleResult& replacements,
                          const std::optional<oracle::VitalEdge>& vital);

// Text form, one record per line:
//
//   MST_WEIGHT <w>
//   <u> <v> <w> <ru> <rv> <rw>      or   <u> <v> <w> BRIDGE
//   VITAL <u> <v> <delta>           or   VITAL UNDEFINED bridges=<k>
//   STATS finds=<f> links=<l> makesets=<s> loop_iterations=<i> engine_steps=<e>
//
// The STATS line is present only when stats were requested.
std::string to_tsv(const Report& report);
std::string to_json(const Report& report);

/// Inverses of to_tsv / to_json. Throw std::runtime_error on bad input.
Report parse_tsv(std::string_view text);
Report parse_json(std::string_view text);

}  // namespace mstrep::cli
