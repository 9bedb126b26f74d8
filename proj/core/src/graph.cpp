#include "mstrep/graph.hpp"

#include <algorithm>
#include <charconv>
#include <iostream>
#include <iterator>
#include <limits>
#include <numeric>
#include <sstream>

namespace mstrep {

Graph::Graph(std::size_t n,
             std::span<const std::tuple<VertexId, VertexId, Weight>> raw)
    : n_(n) {
  edges_.reserve(raw.size());
  for (const auto& [a, b, w] : raw) {
    if (a >= n || b >= n) {
      throw std::invalid_argument("vertex id out of range: " +
                                  std::to_string(std::max(a, b)));
    }
    if (w > kMaxAbsWeight || w < -kMaxAbsWeight) {
      throw std::invalid_argument("weight out of range: " + std::to_string(w));
    }
    if (a == b) {
      ++dropped_self_loops_;
      continue;
    }
    const auto eid = static_cast<EdgeId>(edges_.size());
    edges_.push_back(Edge{std::min(a, b), std::max(a, b), w, eid});
  }

  offsets_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adjacency_.resize(2 * edges_.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[cursor[e.u]++] = {e.v, e.eid};
    adjacency_[cursor[e.v]++] = {e.u, e.eid};
  }
}

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kMalformedHeader:
      return "malformed header";
    case ParseErrorKind::kMalformedEdge:
      return "malformed edge line";
    case ParseErrorKind::kVertexOutOfRange:
      return "vertex id out of range";
    case ParseErrorKind::kEdgeCountMismatch:
      return "edge count mismatch";
    case ParseErrorKind::kWeightOverflow:
      return "weight overflow";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line,
                       const std::string& detail)
    : std::runtime_error("line " + std::to_string(line) + ": " +
                         std::string(to_string(kind)) +
                         (detail.empty() ? "" : ": " + detail)),
      kind_(kind),
      line_(line) {}

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

// Splits a line into whitespace-separated tokens, at most `N + 1` of them so
// callers can detect trailing garbage.
template <std::size_t N>
std::size_t tokenize(std::string_view line, std::string_view (&out)[N + 1]) {
  std::size_t count = 0;
  std::size_t i = 0;
  while (i < line.size() && count < N + 1) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    out[count++] = line.substr(i, j - i);
    i = j;
  }
  return count;
}

template <typename T>
std::errc parse_int(std::string_view token, T& value) {
  // from_chars rejects a leading '+', which is fine for this format.
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc{} && ptr != token.data() + token.size()) {
    return std::errc::invalid_argument;
  }
  return ec;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<std::tuple<VertexId, VertexId, Weight>> raw;

  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    std::size_t first = 0;
    while (first < line.size() && is_space(line[first])) ++first;
    if (first == line.size() || line[first] == '#') continue;

    if (!have_header) {
      std::string_view tok[3];
      if (tokenize<2>(line, tok) != 2 || parse_int(tok[0], n) != std::errc{} ||
          parse_int(tok[1], m) != std::errc{}) {
        throw ParseError(ParseErrorKind::kMalformedHeader, line_no,
                         "expected \"n m\"");
      }
      if (n > std::numeric_limits<VertexId>::max() ||
          m >= std::numeric_limits<EdgeId>::max()) {
        throw ParseError(ParseErrorKind::kMalformedHeader, line_no,
                         "graph too large");
      }
      have_header = true;
      raw.reserve(m);
      continue;
    }

    if (raw.size() == m) {
      throw ParseError(ParseErrorKind::kEdgeCountMismatch, line_no,
                       "more than " + std::to_string(m) + " edge lines");
    }
    std::string_view tok[4];
    if (tokenize<3>(line, tok) != 3) {
      throw ParseError(ParseErrorKind::kMalformedEdge, line_no,
                       "expected \"u v w\"");
    }
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    Weight w = 0;
    if (parse_int(tok[0], u) != std::errc{} || parse_int(tok[1], v) != std::errc{}) {
      // Distinguish "-1" or huge ids (range problems) from non-numeric junk.
      std::int64_t probe = 0;
      auto ec_u = parse_int(tok[0], probe);
      auto ec_v = parse_int(tok[1], probe);
      bool numeric = (ec_u == std::errc{} || ec_u == std::errc::result_out_of_range) &&
                     (ec_v == std::errc{} || ec_v == std::errc::result_out_of_range);
      throw ParseError(numeric ? ParseErrorKind::kVertexOutOfRange
                               : ParseErrorKind::kMalformedEdge,
                       line_no, std::string(tok[0]) + " " + std::string(tok[1]));
    }
    if (u >= n || v >= n) {
      throw ParseError(ParseErrorKind::kVertexOutOfRange, line_no,
                       "vertex " + std::to_string(u >= n ? u : v) +
                           " not in [0," + std::to_string(n) + ")");
    }
    const std::errc ec = parse_int(tok[2], w);
    if (ec == std::errc::result_out_of_range) {
      throw ParseError(ParseErrorKind::kWeightOverflow, line_no, std::string(tok[2]));
    }
    if (ec != std::errc{}) {
      throw ParseError(ParseErrorKind::kMalformedEdge, line_no,
                       "weight is not an integer: " + std::string(tok[2]));
    }
    if (w > kMaxAbsWeight || w < -kMaxAbsWeight) {
      throw ParseError(ParseErrorKind::kWeightOverflow, line_no, std::string(tok[2]));
    }
    raw.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v), w);
  }

  if (!have_header) {
    throw ParseError(ParseErrorKind::kMalformedHeader, line_no, "missing header");
  }
  if (raw.size() != m) {
    throw ParseError(ParseErrorKind::kEdgeCountMismatch, line_no,
                     "expected " + std::to_string(m) + " edges, found " +
                         std::to_string(raw.size()));
  }
  return Graph(static_cast<std::size_t>(n), raw);
}

Graph parse_graph(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_graph(text);
}

void write_graph(std::ostream& out, const Graph& g) {
  std::string buf;
  buf.reserve(32 * (g.num_edges() + 1));
  buf += std::to_string(g.num_vertices());
  buf += ' ';
  buf += std::to_string(g.num_edges());
  buf += '\n';
  for (const Edge& e : g.edges()) {
    buf += std::to_string(e.u);
    buf += ' ';
    buf += std::to_string(e.v);
    buf += ' ';
    buf += std::to_string(e.w);
    buf += '\n';
  }
  out << buf;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

std::vector<EdgeId> sort_edges(const Graph& g) {
  std::vector<EdgeId> order(g.num_edges());
  std::iota(order.begin(), order.end(), EdgeId{0});
  const auto edges = g.edges();
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    return edge_less(edges[a], edges[b]);
  });
  return order;
}

bool connectivity_check(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (const AdjacentEdge& a : g.neighbors(v)) {
      if (!seen[a.neighbor]) {
        seen[a.neighbor] = 1;
        ++reached;
        stack.push_back(a.neighbor);
      }
    }
  }
  return reached == n;
}

}  // namespace mstrep
