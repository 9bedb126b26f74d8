#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mstrep/generators.hpp"
#include "mstrep/pipeline.hpp"
#include "mstrep/static_union.hpp"

namespace mstrep::cli {

enum class OutputFormat { kTsv, kJson };

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 1;
inline constexpr int kExitNotConnected = 2;
inline constexpr int kExitMismatch = 3;

struct RunConfig {
  std::string input = "-";  // "-" reads standard input
  VertexId root = 0;
  DsuEngine dsu = DsuEngine::kGabowTarjan;
  bool early_exit = false;
  OutputFormat format = OutputFormat::kTsv;
  bool stats = false;
  std::uint64_t seed = 1;
  std::optional<GraphFamily> family;  // gen: random-connected, bench: path-chords
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;
  Weight wmax = 1000;
};

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err);

struct BenchConfig {
  GraphFamily family = GraphFamily::kPathChords;
  std::size_t n0 = std::size_t{1} << 16;
  std::size_t m0 = std::size_t{4} << 16;
  std::size_t rows = 6;  // n doubles on every row
  std::size_t repetitions = 3;
  std::uint64_t seed = 1;
  Weight wmax = 1000;
  DsuEngine engine = DsuEngine::kGabowTarjan;
  bool early_exit = false;
};

struct BenchRow {
  std::size_t n = 0;
  std::size_t m = 0;
  PhaseTimes best;  // per-phase minimum over the repetitions
  OpStats stats;
  std::uint64_t find_bound = 0;  // 4(m - n + 1) + 2(n - 1) + n
  bool bounds_ok = false;        // finds, links and makesets within bounds
};

std::uint64_t find_bound(std::size_t n, std::size_t m);

std::vector<BenchRow> run_bench(const BenchConfig& cfg);

/// Tab-separated table with a header row.
void write_bench_table(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace mstrep::cli
