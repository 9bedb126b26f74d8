#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace mstrep {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Weight = std::int64_t;

inline constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

// Weights are restricted so that differences of two weights always fit in
// a Weight.
inline constexpr Weight kMaxAbsWeight = Weight{1} << 62;

struct Edge {
  VertexId u = 0;  // u < v
  VertexId v = 0;
  Weight w = 0;
  EdgeId eid = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Composite (w, u, v, eid) key. Strict total order over the edges of a graph.
struct EdgeKey {
  Weight w;
  VertexId u;
  VertexId v;
  EdgeId eid;

  explicit EdgeKey(const Edge& e) : w(e.w), u(e.u), v(e.v), eid(e.eid) {}

  friend auto operator<=>(const EdgeKey& a, const EdgeKey& b) {
    return std::tie(a.w, a.u, a.v, a.eid) <=> std::tie(b.w, b.u, b.v, b.eid);
  }
  friend bool operator==(const EdgeKey&, const EdgeKey&) = default;
};

inline bool edge_less(const Edge& a, const Edge& b) {
  return EdgeKey(a) < EdgeKey(b);
}

struct AdjacentEdge {
  VertexId neighbor;
  EdgeId eid;
};

/// Immutable undirected weighted multigraph.
///
/// Edges are canonical (u < v) and numbered 0..m-1 in input order after
/// self-loops are removed. Adjacency is stored in CSR form; each undirected
/// edge appears once in the list of each endpoint.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from (u, v, w) triples. Self-loops are dropped; endpoints
  /// are swapped into canonical order. Throws std::invalid_argument on an
  /// out-of-range vertex or weight.
  Graph(std::size_t n, std::span<const std::tuple<VertexId, VertexId, Weight>> raw);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId eid) const { return edges_[eid]; }

  std::span<const AdjacentEdge> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  /// Number of self-loops dropped during construction.
  std::size_t dropped_self_loops() const { return dropped_self_loops_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<AdjacentEdge> adjacency_;
  std::size_t dropped_self_loops_ = 0;
};

enum class ParseErrorKind {
  kMalformedHeader,
  kMalformedEdge,
  kVertexOutOfRange,
  kEdgeCountMismatch,
  kWeightOverflow,
};

std::string_view to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail);

  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

class NotConnected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses the edge-list text format:
///
///   # optional comments
///   n m
///   u v w      (exactly m lines)
///
/// Self-loops are accepted by the parser and dropped from the graph.
Graph parse_graph(std::string_view text);
Graph parse_graph(std::istream& in);

/// Writes `g` in the format accepted by parse_graph.
void write_graph(std::ostream& out, const Graph& g);
std::string serialize_graph(const Graph& g);

/// Edge ids ordered by EdgeKey ascending.
std::vector<EdgeId> sort_edges(const Graph& g);

/// True iff every vertex is reachable from vertex 0 (vacuously true for n <= 1).
bool connectivity_check(const Graph& g);

}  // namespace mstrep
