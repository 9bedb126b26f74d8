#include "mstrep/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_set>
#include <utility>
#include <vector>

namespace mstrep {

namespace {

using RawEdge = std::tuple<VertexId, VertexId, Weight>;

std::uint64_t pair_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (std::uint64_t{a} << 32) | b;
}

template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(i - 1)));
    std::swap(items[i - 1], items[j]);
  }
}

VertexId random_vertex(std::mt19937_64& rng, std::size_t n) {
  return static_cast<VertexId>(uniform_int(rng, 0, static_cast<std::int64_t>(n) - 1));
}

// Random labeled tree, uniform over all n^(n-2) trees.
std::vector<std::pair<VertexId, VertexId>> pruefer_tree(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  if (n < 2) return edges;
  edges.reserve(n - 1);
  std::vector<VertexId> code(n - 2);
  for (auto& c : code) c = random_vertex(rng, n);

  std::vector<std::uint32_t> degree(n, 1);
  for (VertexId c : code) ++degree[c];
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  auto leaf = static_cast<VertexId>(ptr);
  for (VertexId c : code) {
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1 && c < ptr) {
      leaf = c;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = static_cast<VertexId>(ptr);
    }
  }
  edges.emplace_back(leaf, static_cast<VertexId>(n - 1));
  return edges;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<std::int64_t>(rng());
  }
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % range);
}

std::optional<GraphFamily> parse_family(std::string_view name) {
  if (name == "random-connected") return GraphFamily::kRandomConnected;
  if (name == "path-chords") return GraphFamily::kPathChords;
  if (name == "grid") return GraphFamily::kGrid;
  if (name == "tree") return GraphFamily::kTree;
  return std::nullopt;
}

std::string_view to_string(GraphFamily family) {
  switch (family) {
    case GraphFamily::kRandomConnected:
      return "random-connected";
    case GraphFamily::kPathChords:
      return "path-chords";
    case GraphFamily::kGrid:
      return "grid";
    case GraphFamily::kTree:
      return "tree";
  }
  return "?";
}

Graph generate_graph(const GeneratorParams& p) {
  const std::size_t n = p.n;
  require(n >= 1, "n must be at least 1");
  require(n <= std::numeric_limits<VertexId>::max() / 2, "n too large");
  require(p.wmin <= p.wmax, "empty weight range");
  require(p.wmin >= -kMaxAbsWeight && p.wmax <= kMaxAbsWeight, "weight range too wide");

  std::mt19937_64 rng(p.seed);
  auto weight = [&] { return uniform_int(rng, p.wmin, p.wmax); };
  std::vector<RawEdge> raw;

  switch (p.family) {
    case GraphFamily::kTree: {
      require(!p.m || *p.m == n - 1, "tree requires m = n - 1");
      for (auto [a, b] : pruefer_tree(n, rng)) raw.emplace_back(a, b, weight());
      break;
    }
    case GraphFamily::kRandomConnected: {
      const std::size_t max_m = n * (n - 1) / 2;
      const std::size_t m = p.m.value_or(std::min(max_m, 4 * n));
      require(m >= n - 1 && m <= max_m,
              "random-connected requires n - 1 <= m <= n(n-1)/2");
      require(m < std::numeric_limits<EdgeId>::max(), "m too large");
      raw.reserve(m);
      std::unordered_set<std::uint64_t> present;
      for (auto [a, b] : pruefer_tree(n, rng)) {
        raw.emplace_back(a, b, weight());
        present.insert(pair_key(a, b));
      }
      const std::size_t extra = m - (n - 1);
      if (extra > (max_m - (n - 1)) / 2) {
        // Dense: sample from the explicit list of absent pairs.
        std::vector<std::pair<VertexId, VertexId>> absent;
        for (VertexId a = 0; a < n; ++a) {
          for (VertexId b = a + 1; b < n; ++b) {
            if (!present.count(pair_key(a, b))) absent.emplace_back(a, b);
          }
        }
        shuffle(absent, rng);
        for (std::size_t i = 0; i < extra; ++i) {
          raw.emplace_back(absent[i].first, absent[i].second, weight());
        }
      } else {
        while (raw.size() < m) {
          const VertexId a = random_vertex(rng, n);
          VertexId b = random_vertex(rng, n - 1);
          if (b >= a) ++b;
          if (present.insert(pair_key(a, b)).second) raw.emplace_back(a, b, weight());
        }
      }
      shuffle(raw, rng);
      break;
    }
    case GraphFamily::kPathChords: {
      const std::size_t m = p.m.value_or(2 * n);
      require(m >= n - 1, "path-chords requires m >= n - 1");
      require(n >= 2 || m == 0, "path-chords with n = 1 cannot have chords");
      require(m < std::numeric_limits<EdgeId>::max(), "m too large");
      raw.reserve(m);
      for (VertexId v = 0; v + 1 < n; ++v) raw.emplace_back(v, v + 1, weight());
      while (raw.size() < m) {
        const VertexId a = random_vertex(rng, n);
        VertexId b = random_vertex(rng, n - 1);
        if (b >= a) ++b;
        raw.emplace_back(a, b, weight());
      }
      break;
    }
    case GraphFamily::kGrid: {
      const auto rows = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
      const std::size_t cols = (n + rows - 1) / rows;
      for (std::size_t id = 0; id < n; ++id) {
        const std::size_t c = id % cols;
        if (c + 1 < cols && id + 1 < n) {
          raw.emplace_back(static_cast<VertexId>(id), static_cast<VertexId>(id + 1), weight());
        }
        if (id + cols < n) {
          raw.emplace_back(static_cast<VertexId>(id), static_cast<VertexId>(id + cols), weight());
        }
      }
      require(!p.m || *p.m == raw.size(),
              "grid with n = " + std::to_string(n) + " has m = " + std::to_string(raw.size()));
      break;
    }
  }
  return Graph(n, raw);
}

}  // namespace mstrep
