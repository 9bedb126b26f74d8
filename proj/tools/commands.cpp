#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "mstrep/oracle.hpp"
#include "report.hpp"

namespace mstrep::cli {

namespace {

Graph load_graph(const RunConfig& cfg) {
  if (cfg.input == "-") return parse_graph(std::cin);
  std::ifstream in(cfg.input, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + cfg.input);
  return parse_graph(in);
}

// Runs `body` and maps the library's exceptions onto exit codes.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const NotConnected& e) {
    err << "error: " << e.what() << '\n';
    return kExitNotConnected;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
}

void require_connected(const Graph& g) {
  if (!connectivity_check(g)) throw NotConnected("graph is not connected");
}

void warn_self_loops(const Graph& g, std::ostream& err) {
  if (g.dropped_self_loops() > 0) {
    err << "warning: dropped " << g.dropped_self_loops() << " self-loop(s)\n";
  }
}

void emit(const Report& report, OutputFormat format, std::ostream& out) {
  out << (format == OutputFormat::kJson ? to_json(report) : to_tsv(report));
}

std::string describe(const Graph& g, EdgeId eid) {
  if (eid == kBridge) return "BRIDGE";
  const Edge& e = g.edge(eid);
  return std::to_string(e.u) + " " + std::to_string(e.v) + " " + std::to_string(e.w);
}

}  // namespace

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = load_graph(cfg);
    warn_self_loops(g, err);
    require_connected(g);
    AnalysisOptions opts;
    opts.root = cfg.root;
    opts.engine = cfg.dsu;
    opts.early_exit = cfg.early_exit;
    const Analysis a = analyze(g, opts);
    emit(make_report(g, a, cfg.stats), cfg.format, out);
    return kExitOk;
  });
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = load_graph(cfg);
    warn_self_loops(g, err);
    require_connected(g);
    const MstResult mst = kruskal(g);
    const auto table = oracle::oracle_replacements(g, mst);
    const bool has_bridge =
        std::any_of(mst.tree_edges.begin(), mst.tree_edges.end(),
                    [&](EdgeId te) { return !table.replacement[te].has_value(); });
    const auto vital = has_bridge ? std::nullopt : oracle::oracle_vital(g, mst);
    emit(make_oracle_report(g, mst, table, vital), cfg.format, out);
    return kExitOk;
  });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = load_graph(cfg);
    warn_self_loops(g, err);
    require_connected(g);
    const MstResult mst = kruskal(g);
    const TreeIndex ti = build_tree_index(g, mst, cfg.root);
    const auto expected = oracle::oracle_replacements(g, mst);

    std::optional<VitalEdgeReport> first_vital;
    for (DsuEngine engine : {DsuEngine::kGabowTarjan, DsuEngine::kReference}) {
      ReplacementOptions ro;
      ro.engine = engine;
      ro.early_exit = cfg.early_exit;
      ReplacementResult got;
      try {
        got = find_replacement_edges(g, mst, ti, ro);
      } catch (const ContractViolation& e) {
        out << "MISMATCH dsu=" << to_string(engine) << " contract violation: " << e.what()
            << '\n';
        return kExitMismatch;
      }
      for (EdgeId te : mst.tree_edges) {
        const EdgeId want = expected.replacement[te] ? expected.replacement[te]->eid : kBridge;
        if (got.table[te] != want) {
          out << "MISMATCH dsu=" << to_string(engine) << " tree_edge=" << describe(g, te)
              << " engine=" << describe(g, got.table[te]) << " oracle=" << describe(g, want)
              << '\n';
          return kExitMismatch;
        }
      }
      const VitalEdgeReport vital = most_vital_edge(g, got.table);
      if (!first_vital) first_vital = vital;
    }

    const auto want = oracle::oracle_vital(g, mst);
    if (!first_vital->defined && want) {
      out << "MISMATCH vital engine=UNDEFINED oracle=" << describe(g, want->eid) << " delta "
          << want->delta << '\n';
      return kExitMismatch;
    }
    if (first_vital->defined) {
      if (!want || want->eid != *first_vital->edge || want->delta != *first_vital->delta) {
        out << "MISMATCH vital engine=" << describe(g, *first_vital->edge) << " delta "
            << *first_vital->delta << " oracle="
            << (want ? describe(g, want->eid) + " delta " + std::to_string(want->delta)
                     : std::string("UNDEFINED"))
            << '\n';
        return kExitMismatch;
      }
    }
    out << "OK tree_edges=" << mst.tree_edges.size() << " bridges=" << first_vital->bridge_count
        << '\n';
    return kExitOk;
  });
}

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!cfg.n) throw std::invalid_argument("gen requires --n");
    GeneratorParams p;
    p.family = cfg.family.value_or(GraphFamily::kRandomConnected);
    p.n = *cfg.n;
    p.m = cfg.m;
    p.wmin = 1;
    p.wmax = cfg.wmax;
    p.seed = cfg.seed;
    write_graph(out, generate_graph(p));
    return kExitOk;
  });
}

std::uint64_t find_bound(std::size_t n, std::size_t m) {
  return 4 * (std::uint64_t{m} - n + 1) + 2 * (std::uint64_t{n} - 1) + n;
}

std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
  std::vector<Graph> graphs;
  for (std::size_t i = 0; i < cfg.rows; ++i) {
    GeneratorParams p;
    p.family = cfg.family;
    p.n = cfg.n0 << i;
    if (cfg.family != GraphFamily::kGrid) p.m = cfg.m0 << i;
    p.wmin = 1;
    p.wmax = cfg.wmax;
    p.seed = cfg.seed + i;
    graphs.push_back(generate_graph(p));
  }

  AnalysisOptions opts;
  opts.engine = cfg.engine;
  opts.early_exit = cfg.early_exit;
  std::vector<BenchRow> rows(graphs.size());
  // Repetitions sweep the whole ladder in turn, so a slow spell on the host
  // does not land on all repetitions of one size.
  for (std::size_t rep = 0; rep < std::max<std::size_t>(1, cfg.repetitions); ++rep) {
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Analysis a = analyze(graphs[i], opts);
      BenchRow& row = rows[i];
      if (rep == 0) {
        row.best = a.times;
        row.stats = a.replacements.stats;
      } else {
        row.best.sort_kruskal_ms = std::min(row.best.sort_kruskal_ms, a.times.sort_kruskal_ms);
        row.best.index_ms = std::min(row.best.index_ms, a.times.index_ms);
        row.best.scan_ms = std::min(row.best.scan_ms, a.times.scan_ms);
      }
    }
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    BenchRow& row = rows[i];
    row.n = graphs[i].num_vertices();
    row.m = graphs[i].num_edges();
    row.find_bound = find_bound(row.n, row.m);
    row.bounds_ok = row.stats.finds <= row.find_bound && row.stats.links <= row.n - 1 &&
                    row.stats.makesets == row.n;
  }
  return rows;
}

void write_bench_table(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "n\tm\tsort_kruskal_ms\tindex_ms\tscan_ms\tfinds\tlinks\tmakesets\t"
         "loop_iterations\tengine_steps\tfind_bound\tbounds_ok\n";
  for (const BenchRow& r : rows) {
    out << r.n << '\t' << r.m << '\t' << r.best.sort_kruskal_ms << '\t' << r.best.index_ms
        << '\t' << r.best.scan_ms << '\t' << r.stats.finds << '\t' << r.stats.links << '\t'
        << r.stats.makesets << '\t' << r.stats.loop_iterations << '\t' << r.stats.engine_steps
        << '\t' << r.find_bound << '\t' << (r.bounds_ok ? "yes" : "no") << '\n';
  }
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    BenchConfig b;
    b.family = cfg.family.value_or(GraphFamily::kPathChords);
    if (cfg.n) b.n0 = *cfg.n;
    b.m0 = cfg.m.value_or(4 * b.n0);
    b.seed = cfg.seed;
    b.wmax = cfg.wmax;
    b.engine = cfg.dsu;
    b.early_exit = cfg.early_exit;
    const auto rows = run_bench(b);
    write_bench_table(out, rows);
    const bool ok = std::all_of(rows.begin(), rows.end(),
                                [](const BenchRow& r) { return r.bounds_ok; });
    return ok ? kExitOk : kExitMismatch;
  });
}

}  // namespace mstrep::cli
