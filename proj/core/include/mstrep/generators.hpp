#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "mstrep/graph.hpp"

namespace mstrep {

enum class GraphFamily { kRandomConnected, kPathChords, kGrid, kTree };

std::optional<GraphFamily> parse_family(std::string_view name);
std::string_view to_string(GraphFamily family);

struct GeneratorParams {
  GraphFamily family = GraphFamily::kRandomConnected;
  std::size_t n = 0;
  std::optional<std::size_t> m;  // defaults per family when absent
  Weight wmin = 1;
  Weight wmax = 1000;
  std::uint64_t seed = 1;
};

/// Deterministic for a fixed parameter set (the generator does not depend on
/// standard-library distribution implementations).
///
///   tree              uniform random labeled tree (Pruefer code), m = n - 1
///   random-connected  uniform random labeled tree plus distinct extra edges;
///                     simple graph, m <= n(n-1)/2
///   path-chords       path 0-1-...-(n-1) plus random chords; parallel edges
///                     possible
///   grid              near-square grid, row-major ids; m is implied
///
/// Throws std::invalid_argument for an infeasible (n, m) pair or an empty
/// weight range.
Graph generate_graph(const GeneratorParams& params);

/// Uniform integer in [lo, hi] from a 64-bit engine by rejection sampling.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

}  // namespace mstrep
