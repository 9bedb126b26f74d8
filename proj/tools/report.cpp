#include "report.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mstrep::cli {

using nlohmann::json;

Report make_report(const Graph& g, const Analysis& analysis, bool with_stats) {
  Report r;
  r.mst_weight = analysis.mst.total_weight;
  const ReplacementTable& table = analysis.replacements.table;
  r.rows.reserve(table.tree_edges().size());
  for (EdgeId te : table.tree_edges()) {
    ReportRow row{g.edge(te), std::nullopt};
    if (!table.is_bridge(te)) row.replacement = g.edge(table[te]);
    r.rows.push_back(row);
  }
  const VitalEdgeReport& vital = analysis.vital;
  r.vital.bridges = vital.bridge_count;
  if (vital.defined) {
    r.vital.defined = true;
    r.vital.u = g.edge(*vital.edge).u;
    r.vital.v = g.edge(*vital.edge).v;
    r.vital.delta = *vital.delta;
  }
  if (with_stats) r.stats = analysis.replacements.stats;
  return r;
}

Report make_oracle_report(const Graph& g, const MstResult& mst,
                          const oracle::OracleResult& replacements,
                          const std::optional<oracle::VitalEdge>& vital) {
  Report r;
  r.mst_weight = mst.total_weight;
  for (EdgeId te : mst.tree_edges) {
    ReportRow row{g.edge(te), std::nullopt};
    if (const auto& rep = replacements.replacement[te]) row.replacement = g.edge(rep->eid);
    if (!row.replacement) ++r.vital.bridges;
    r.rows.push_back(row);
  }
  if (vital && r.vital.bridges == 0) {
    r.vital.defined = true;
    r.vital.u = g.edge(vital->eid).u;
    r.vital.v = g.edge(vital->eid).v;
    r.vital.delta = vital->delta;
  }
  return r;
}

std::string to_tsv(const Report& report) {
  std::ostringstream out;
  out << "MST_WEIGHT " << report.mst_weight << '\n';
  for (const ReportRow& row : report.rows) {
    out << row.tree.u << ' ' << row.tree.v << ' ' << row.tree.w << ' ';
    if (row.replacement) {
      out << row.replacement->u << ' ' << row.replacement->v << ' ' << row.replacement->w;
    } else {
      out << "BRIDGE";
    }
    out << '\n';
  }
  if (report.vital.defined) {
    out << "VITAL " << report.vital.u << ' ' << report.vital.v << ' ' << report.vital.delta
        << '\n';
  } else {
    out << "VITAL UNDEFINED bridges=" << report.vital.bridges << '\n';
  }
  if (report.stats) {
    const OpStats& s = *report.stats;
    out << "STATS finds=" << s.finds << " links=" << s.links << " makesets=" << s.makesets
        << " loop_iterations=" << s.loop_iterations << " engine_steps=" << s.engine_steps
        << '\n';
  }
  return out.str();
}

namespace {

json edge_json(const Edge& e) { return json{{"u", e.u}, {"v", e.v}, {"w", e.w}}; }

Edge edge_from_json(const json& j) {
  return Edge{j.at("u").get<VertexId>(), j.at("v").get<VertexId>(), j.at("w").get<Weight>(), 0};
}

[[noreturn]] void bad_tsv(std::size_t line, const std::string& what) {
  throw std::runtime_error("report line " + std::to_string(line) + ": " + what);
}

std::uint64_t stat_field(std::istringstream& in, std::string_view name, std::size_t line) {
  std::string tok;
  in >> tok;
  const std::string prefix = std::string(name) + "=";
  if (tok.rfind(prefix, 0) != 0) bad_tsv(line, "expected " + prefix);
  return std::stoull(tok.substr(prefix.size()));
}

}  // namespace

std::string to_json(const Report& report) {
  json j;
  j["mst_weight"] = report.mst_weight;
  json rows = json::array();
  for (const ReportRow& row : report.rows) {
    json r = edge_json(row.tree);
    r["replacement"] = row.replacement ? edge_json(*row.replacement) : json("BRIDGE");
    rows.push_back(std::move(r));
  }
  j["tree_edges"] = std::move(rows);
  json vital{{"defined", report.vital.defined}, {"bridges", report.vital.bridges}};
  if (report.vital.defined) {
    vital["u"] = report.vital.u;
    vital["v"] = report.vital.v;
    vital["delta"] = report.vital.delta;
  }
  j["vital"] = std::move(vital);
  if (report.stats) {
    const OpStats& s = *report.stats;
    j["stats"] = json{{"finds", s.finds},
                      {"links", s.links},
                      {"makesets", s.makesets},
                      {"loop_iterations", s.loop_iterations},
                      {"engine_steps", s.engine_steps}};
  }
  return j.dump(2) + "\n";
}

namespace {

Report parse_json_unchecked(std::string_view text) {
  const json j = json::parse(text);
  Report r;
  r.mst_weight = j.at("mst_weight").get<Weight>();
  for (const json& row : j.at("tree_edges")) {
    ReportRow rr{edge_from_json(row), std::nullopt};
    const json& rep = row.at("replacement");
    if (rep.is_object()) {
      rr.replacement = edge_from_json(rep);
    } else if (rep != "BRIDGE") {
      throw std::runtime_error("replacement must be an edge or \"BRIDGE\"");
    }
    r.rows.push_back(rr);
  }
  const json& vital = j.at("vital");
  r.vital.defined = vital.at("defined").get<bool>();
  r.vital.bridges = vital.at("bridges").get<std::size_t>();
  if (r.vital.defined) {
    r.vital.u = vital.at("u").get<VertexId>();
    r.vital.v = vital.at("v").get<VertexId>();
    r.vital.delta = vital.at("delta").get<Weight>();
  }
  if (j.contains("stats")) {
    const json& s = j["stats"];
    r.stats = OpStats{s.at("finds").get<std::uint64_t>(), s.at("links").get<std::uint64_t>(),
                      s.at("makesets").get<std::uint64_t>(),
                      s.at("loop_iterations").get<std::uint64_t>(),
                      s.at("engine_steps").get<std::uint64_t>()};
  }
  return r;
}

}  // namespace

Report parse_json(std::string_view text) {
  try {
    return parse_json_unchecked(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("bad report JSON: ") + e.what());
  }
}

Report parse_tsv(std::string_view text) {
  Report r;
  std::istringstream lines{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_weight = false;
  bool have_vital = false;
  while (std::getline(lines, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream in(line);
    std::string head;
    in >> head;
    if (head == "MST_WEIGHT") {
      if (!(in >> r.mst_weight)) bad_tsv(line_no, "bad MST_WEIGHT");
      have_weight = true;
    } else if (head == "VITAL") {
      std::string tok;
      in >> tok;
      if (tok == "UNDEFINED") {
        in >> tok;
        if (tok.rfind("bridges=", 0) != 0) bad_tsv(line_no, "expected bridges=");
        r.vital.bridges = std::stoull(tok.substr(8));
      } else {
        r.vital.defined = true;
        r.vital.u = static_cast<VertexId>(std::stoul(tok));
        if (!(in >> r.vital.v >> r.vital.delta)) bad_tsv(line_no, "bad VITAL line");
      }
      have_vital = true;
    } else if (head == "STATS") {
      OpStats s;
      s.finds = stat_field(in, "finds", line_no);
      s.links = stat_field(in, "links", line_no);
      s.makesets = stat_field(in, "makesets", line_no);
      s.loop_iterations = stat_field(in, "loop_iterations", line_no);
      s.engine_steps = stat_field(in, "engine_steps", line_no);
      r.stats = s;
    } else {
      ReportRow row{};
      std::istringstream full(line);
      if (!(full >> row.tree.u >> row.tree.v >> row.tree.w)) bad_tsv(line_no, "bad tree edge");
      std::string tok;
      full >> tok;
      if (tok != "BRIDGE") {
        Edge rep{};
        rep.u = static_cast<VertexId>(std::stoul(tok));
        if (!(full >> rep.v >> rep.w)) bad_tsv(line_no, "bad replacement edge");
        row.replacement = rep;
      }
      r.rows.push_back(row);
    }
  }
  if (!have_weight || !have_vital) throw std::runtime_error("incomplete report");
  return r;
}

}  // namespace mstrep::cli
