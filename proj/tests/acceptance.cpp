// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
//
//   acceptance [--only N]...

#include <chrono>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "commands.hpp"
#include "fixtures.hpp"

using namespace mstrep;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// The randomized suite shared by several criteria.
std::vector<Graph> randomized_suite() {
  std::mt19937_64 rng(20240601);
  std::vector<Graph> graphs;
  graphs.reserve(1000);
  for (int i = 0; i < 1000; ++i) {
    graphs.push_back(fixture::random_graph(rng, 2, 200, 2000, -50, 50));
  }
  return graphs;
}

const std::vector<Graph>& suite() {
  static const std::vector<Graph> graphs = randomized_suite();
  return graphs;
}

const std::vector<cli::BenchRow>& ladder() {
  static const std::vector<cli::BenchRow> rows = [] {
    cli::BenchConfig cfg;  // path-chords, n = 2^16 .. 2^21, m = 4n, best of 3
    return cli::run_bench(cfg);
  }();
  return rows;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

Outcome oracle_equivalence() {
  std::size_t mismatches = 0;
  std::size_t bridges_seen = 0;
  for (const Graph& g : suite()) {
    const MstResult mst = kruskal(g);
    const TreeIndex ti = build_tree_index(g, mst);
    const auto want = oracle::oracle_replacements(g, mst);
    for (DsuEngine engine : {DsuEngine::kReference, DsuEngine::kGabowTarjan}) {
      ReplacementOptions o;
      o.engine = engine;
      const auto got = find_replacement_edges(g, mst, ti, o);
      if (!fixture::same_replacements(got.table, want)) ++mismatches;
      if (engine == DsuEngine::kReference) bridges_seen += got.table.bridge_count();
    }
  }
  return {mismatches == 0, std::to_string(suite().size()) + " graphs x 2 engines, " +
                               std::to_string(mismatches) + " mismatches, " +
                               std::to_string(bridges_seen) + " bridge entries"};
}

Outcome golden_walkthrough() {
  using namespace fixture::wt;
  const Graph gr = fixture::walkthrough_graph();
  Outcome out;
  for (DsuEngine engine : {DsuEngine::kReference, DsuEngine::kGabowTarjan}) {
    std::vector<PathLabelTrace> trace;
    AnalysisOptions o;
    o.root = kRoot;
    o.engine = engine;
    o.trace = [&](const PathLabelTrace& t) { trace.push_back(t); };
    const Analysis a = analyze(gr, o);
    const ReplacementTable& rt = a.replacements.table;
    const bool table_ok = rt[gh] == ge && rt[he] == ge && rt[be] == bg;
    bool left_ok = false;
    for (const PathLabelTrace& t : trace) {
      if (t.eid == bg && t.s == g && t.t == b) {
        left_ok = t.plan == Plan::kLeft && t.assigned.empty();
      }
    }
    if (!table_ok || !left_ok) {
      out.pass = false;
      out.detail += std::string(to_string(engine)) + ": table " + (table_ok ? "ok" : "wrong") +
                    ", (g,b) call " + (left_ok ? "ok" : "wrong") + "; ";
    }
  }
  if (out.pass) {
    out.detail = "R(g,h)=R(h,e)=(g,e), R(b,e)=(b,g), (g,b) LEFT with 0 assignments";
  }
  return out;
}

Outcome operation_bounds() {
  std::size_t violations = 0;
  std::size_t runs = 0;
  for (const Graph& g : suite()) {
    const MstResult mst = kruskal(g);
    const TreeIndex ti = build_tree_index(g, mst);
    const std::size_t n = g.num_vertices();
    for (DsuEngine engine : {DsuEngine::kReference, DsuEngine::kGabowTarjan}) {
      for (bool early : {false, true}) {
        ReplacementOptions o;
        o.engine = engine;
        o.early_exit = early;
        const OpStats s = find_replacement_edges(g, mst, ti, o).stats;
        ++runs;
        if (s.finds > fixture::find_bound(n, g.num_edges()) || s.links > n - 1 ||
            s.makesets != n) {
          ++violations;
        }
      }
    }
  }
  for (const cli::BenchRow& r : ladder()) {
    ++runs;
    if (!r.bounds_ok) ++violations;
  }
  return {violations == 0,
          std::to_string(runs) + " runs, " + std::to_string(violations) + " violations"};
}

Outcome linearity() {
  constexpr double kTimeRatio = 2.6;
  constexpr double kStepRatio = 2.2;
  const auto& rows = ladder();
  Outcome out;
  std::string times = "scan ratios";
  std::string steps = "step ratios";
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double t = rows[i].best.scan_ms / rows[i - 1].best.scan_ms;
    const double s = static_cast<double>(rows[i].stats.engine_steps) /
                     static_cast<double>(rows[i - 1].stats.engine_steps);
    times += " " + fmt(t);
    steps += " " + fmt(s);
    if (t > kTimeRatio || s > kStepRatio) out.pass = false;
  }
  out.detail = "n=" + std::to_string(rows.front().n) + ".." + std::to_string(rows.back().n) +
               "; " + times + " (max " + fmt(kTimeRatio) + "); " + steps + " (max " +
               fmt(kStepRatio) + ")";
  return out;
}

Outcome bridge_consistency() {
  std::size_t bad = 0;
  std::size_t bridges_seen = 0;
  for (const Graph& g : suite()) {
    const MstResult mst = kruskal(g);
    const TreeIndex ti = build_tree_index(g, mst);
    const auto full = find_replacement_edges(g, mst, ti, {});
    ReplacementOptions early;
    early.early_exit = true;
    const auto cut = find_replacement_edges(g, mst, ti, early);
    std::vector<EdgeId> unassigned;
    for (EdgeId te : mst.tree_edges) {
      if (full.table.is_bridge(te)) unassigned.push_back(te);
    }
    std::sort(unassigned.begin(), unassigned.end());
    bridges_seen += unassigned.size();
    if (bridges(g) != unassigned || !(cut.table == full.table)) ++bad;
  }
  return {bad == 0, std::to_string(bad) + " inconsistent graphs, " +
                        std::to_string(bridges_seen) + " bridges checked"};
}

Outcome vital_edge() {
  std::size_t bad = 0;
  std::size_t defined = 0;
  std::size_t undefined = 0;
  for (const Graph& g : suite()) {
    const Analysis a = analyze(g);
    const bool has_bridge = !bridges(g).empty();
    if (has_bridge) {
      ++undefined;
      if (a.vital.defined) ++bad;
      continue;
    }
    ++defined;
    const auto want = oracle::oracle_vital(g, a.mst);
    if (!a.vital.defined || !want || *a.vital.edge != want->eid || *a.vital.delta != want->delta) {
      ++bad;
    }
  }
  return {bad == 0, std::to_string(defined) + " bridge-free graphs, " +
                        std::to_string(undefined) + " with bridges, " + std::to_string(bad) +
                        " mismatches"};
}

Outcome static_union_contract() {
  std::mt19937_64 rng(777);
  std::size_t queries = 0;
  std::size_t mismatches = 0;
  while (queries < 100000) {
    GeneratorParams p;
    p.family = GraphFamily::kTree;
    p.n = static_cast<std::size_t>(uniform_int(rng, 1, 300));
    p.seed = rng();
    const Graph g = generate_graph(p);
    const TreeIndex ti =
        build_tree_index(g, kruskal(g), static_cast<VertexId>(uniform_int(rng, 0, p.n - 1)));
    ReferenceUnion ref(ti);
    MicrosetUnion gt(ti);
    for (VertexId v = 0; v < p.n; ++v) {
      ref.makeset(v);
      gt.makeset(v);
    }
    std::vector<char> linked(p.n, 0);
    for (int op = 0; op < 2000 && queries < 100000; ++op) {
      const auto v = static_cast<VertexId>(uniform_int(rng, 0, p.n - 1));
      if (uniform_int(rng, 0, 2) == 0 && v != ti.root && !linked[v]) {
        ref.link(v);
        gt.link(v);
        linked[v] = 1;
        continue;
      }
      const VertexId want = oracle::oracle_find(ti.parent, linked, v);
      if (ref.find(v) != want) ++mismatches;
      if (gt.find(v) != want) ++mismatches;
      ++queries;
    }
  }
  return {mismatches == 0, std::to_string(queries) + " queries x 2 engines, " +
                               std::to_string(mismatches) + " mismatches"};
}

Outcome deep_path() {
  constexpr std::size_t n = 1'000'000;
  std::mt19937_64 rng(5);
  std::string text = std::to_string(n) + " " + std::to_string(n - 1 + 10) + "\n";
  text.reserve(16 * n);
  for (std::size_t v = 1; v < n; ++v) {
    text += std::to_string(v - 1) + " " + std::to_string(v) + " " +
            std::to_string(uniform_int(rng, 1, 1000)) + "\n";
  }
  for (int i = 0; i < 10; ++i) {
    text += std::to_string(uniform_int(rng, 0, n - 1)) + " " +
            std::to_string(uniform_int(rng, 0, n - 1)) + " " +
            std::to_string(uniform_int(rng, 1, 1000)) + "\n";
  }
  const std::string path = (std::filesystem::temp_directory_path() /
                            ("mstrep_acceptance_" + std::to_string(::getpid()) + ".txt"))
                               .string();
  std::ofstream(path, std::ios::binary) << text;

  cli::RunConfig cfg;
  cfg.input = path;
  std::ostringstream out;
  std::ostringstream err;
  const auto start = std::chrono::steady_clock::now();
  const int code = cli::cmd_compute(cfg, out, err);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::remove(path.c_str());
  const bool ok = code == cli::kExitOk && secs < 5.0;
  return {ok, "exit " + std::to_string(code) + ", " + fmt(secs) + " s (limit 5 s)"};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i + 1 < argc; i += 2) {
    if (std::strcmp(argv[i], "--only") == 0) only.insert(std::atoi(argv[i + 1]));
  }

  const std::vector<Criterion> criteria = {
      {1, "oracle equivalence", oracle_equivalence},
      {2, "golden walkthrough", golden_walkthrough},
      {3, "operation bounds", operation_bounds},
      {4, "linearity", linearity},
      {5, "bridge consistency", bridge_consistency},
      {6, "most vital edge", vital_edge},
      {7, "static-union contract", static_union_contract},
      {8, "deep path", deep_path},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << o.detail
              << " (" << fmt(secs) << " s)" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
