#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mstrep/contract.hpp"
#include "mstrep/detail/huge_pages.hpp"
#include "mstrep/tree_index.hpp"

namespace mstrep {

struct OpStats {
  std::uint64_t finds = 0;
  std::uint64_t links = 0;
  std::uint64_t makesets = 0;
  std::uint64_t loop_iterations = 0;
  // Elementary steps inside the disjoint-set engine (pointer hops, table
  // lookups, compression writes). Engine specific.
  std::uint64_t engine_steps = 0;

  friend bool operator==(const OpStats&, const OpStats&) = default;
};

enum class DsuEngine { kReference, kGabowTarjan };

std::string_view to_string(DsuEngine engine);

// Disjoint sets over the vertices of a fixed union tree. Every engine honors
// the same contract:
//
//   find(v) = the nearest ancestor-or-self u of v with linked[u] == false.
//
// link(v) contracts the tree edge {v, parent[v]}; it requires v to be an
// unlinked non-root vertex, so the root is always a valid answer.

/// Path compression over a per-vertex jump array. jump[v] == v iff v is
/// unlinked; otherwise jump[v] is a proper ancestor with find(jump[v]) ==
/// find(v).
class ReferenceUnion {
 public:
  explicit ReferenceUnion(const TreeIndex& ti);

  void makeset(VertexId v);

  VertexId find(VertexId v) {
    ++stats_.finds;
    VertexId r = v;
    while (jump_[r] != r) {
      r = jump_[r];
      ++stats_.engine_steps;
    }
    while (jump_[v] != r) {
      VertexId next = jump_[v];
      jump_[v] = r;
      v = next;
      ++stats_.engine_steps;
    }
    ++stats_.engine_steps;
    return r;
  }

  void link(VertexId v) {
    MSTREP_EXPECTS(v < parent_.size() && made_[v], "vertex not initialized");
    MSTREP_EXPECTS(v != root_, "cannot link the root");
    MSTREP_EXPECTS(jump_[v] == v, "vertex is not the label of its set");
    jump_[v] = parent_[v];
    ++stats_.links;
    ++stats_.engine_steps;
  }

  bool linked(VertexId v) const { return jump_[v] != v; }

  Interval label(VertexId v) const { return label_[v]; }

  void prefetch(VertexId v) const {
    __builtin_prefetch(&jump_[v]);
    __builtin_prefetch(&label_[v]);
  }
  void prefetch_microset(VertexId) const {}
  const OpStats& stats() const { return stats_; }
  OpStats& stats() { return stats_; }

 private:
  std::span<const VertexId> parent_;
  std::span<const Interval> label_;
  VertexId root_;
  detail::huge_vector<VertexId> jump_;
  std::vector<char> made_;
  OpStats stats_;
};

/// Static-tree set union with microsets.
///
/// The union tree is cut into connected fragments ("microsets") of at most
/// kMicrosetSize vertices by a bottom-up greedy packing. Inside a microset the
/// vertices are numbered in preorder, so every vertex stores a bitmask of its
/// in-microset ancestors-or-self. The answer to a find inside a microset is
/// then a function of (linked-bit pattern, node position): the deepest
/// unlinked ancestor is the highest set bit of `ancestors & ~linked`.
///
/// When a vertex's whole in-microset ancestor chain is linked, the query
/// leaves through the microset root. Each microset keeps a macro jump pointer
/// to a vertex above its root with the same find answer; these pointers are
/// path compressed, so chains of fully linked microsets are crossed once.
class MicrosetUnion {
 public:
  static constexpr unsigned kMicrosetSize = 32;
  using Mask = std::uint32_t;

  explicit MicrosetUnion(const TreeIndex& ti);

  void makeset(VertexId v);

  VertexId find(VertexId v) {
    ++stats_.finds;
    ++stats_.engine_steps;
    const Node& node = nodes_[v];
    Mask free = node.ancestors & ~micros_[node.micro].linked;
    if (std::bit_width(free) == std::bit_width(node.ancestors)) return v;
    if (free != 0) return member_at(node.micro, free);

    // Walk the macro chain, then compress it onto the exit vertex.
    VertexId x = micros_[node.micro].jump;
    for (;;) {
      ++stats_.engine_steps;
      const Node& xn = nodes_[x];
      free = xn.ancestors & ~micros_[xn.micro].linked;
      if (free != 0) break;
      x = micros_[xn.micro].jump;
    }
    const std::uint32_t exit_ms = nodes_[x].micro;
    for (std::uint32_t s = node.micro; s != exit_ms;) {
      const VertexId next = micros_[s].jump;
      if (next != x) {
        micros_[s].jump = x;
        ++stats_.engine_steps;
      }
      s = nodes_[next].micro;
    }
    return member_at(exit_ms, free);
  }

  void link(VertexId v) {
    MSTREP_EXPECTS(v < parent_.size() && made_[v], "vertex not initialized");
    MSTREP_EXPECTS(v != root_, "cannot link the root");
    const Node& node = nodes_[v];
    const Mask bit = self_bit(node);
    Mask& linked = micros_[node.micro].linked;
    MSTREP_EXPECTS((linked & bit) == 0, "vertex is not the label of its set");
    linked |= bit;
    ++stats_.links;
    ++stats_.engine_steps;
  }

  bool linked(VertexId v) const {
    const Node& node = nodes_[v];
    return (micros_[node.micro].linked & self_bit(node)) != 0;
  }

  // Copy of the vertex's IN/OUT labels, kept next to the engine state so the
  // cycle walk touches one cache line per vertex.
  Interval label(VertexId v) const { return nodes_[v].label; }

  // Cache hints for a vertex that will be queried soon: its record first,
  // then (once that has arrived) its microset.
  void prefetch(VertexId v) const { __builtin_prefetch(&nodes_[v]); }
  void prefetch_microset(VertexId v) const {
    __builtin_prefetch(&micros_[nodes_[v].micro]);
  }
  const OpStats& stats() const { return stats_; }
  OpStats& stats() { return stats_; }

  std::size_t num_microsets() const { return micros_.size(); }
  std::uint32_t microset_of(VertexId v) const { return nodes_[v].micro; }
  VertexId microset_root(std::uint32_t ms) const { return members_[micros_[ms].offset]; }
  std::size_t microset_size(std::uint32_t ms) const {
    const std::size_t end =
        ms + 1 < micros_.size() ? micros_[ms + 1].offset : members_.size();
    return end - micros_[ms].offset;
  }

 private:
  struct alignas(16) Node {
    Interval label;
    std::uint32_t micro;
    Mask ancestors;  // in-microset ancestors-or-self; highest bit is the vertex
  };
  struct Micro {
    Mask linked;
    std::uint32_t offset;  // into members_, which lists the microset in preorder
    VertexId jump;
  };

  static Mask self_bit(const Node& node) {
    return Mask{1} << (std::bit_width(node.ancestors) - 1);
  }

  VertexId member_at(std::uint32_t ms, Mask free) const {
    const unsigned pos = static_cast<unsigned>(std::bit_width(free)) - 1;
    return members_[micros_[ms].offset + pos];
  }

  std::span<const VertexId> parent_;
  VertexId root_;
  detail::huge_vector<Node> nodes_;
  detail::huge_vector<Micro> micros_;
  detail::huge_vector<VertexId> members_;
  std::vector<char> made_;
  OpStats stats_;
};

/// Engine-selecting wrapper. Hot loops should use visit() to get the
/// concrete engine once instead of dispatching per call.
class StaticUnion {
 public:
  StaticUnion(const TreeIndex& ti, DsuEngine engine);

  DsuEngine engine() const { return engine_; }

  void makeset(VertexId v) {
    std::visit([v](auto& e) { e.makeset(v); }, impl_);
  }
  VertexId find(VertexId v) {
    return std::visit([v](auto& e) { return e.find(v); }, impl_);
  }
  void link(VertexId v) {
    std::visit([v](auto& e) { e.link(v); }, impl_);
  }
  bool linked(VertexId v) const {
    return std::visit([v](const auto& e) { return e.linked(v); }, impl_);
  }
  const OpStats& stats() const {
    return std::visit([](const auto& e) -> const OpStats& { return e.stats(); }, impl_);
  }

  template <typename F>
  decltype(auto) visit(F&& f) {
    return std::visit(std::forward<F>(f), impl_);
  }

 private:
  DsuEngine engine_;
  std::variant<ReferenceUnion, MicrosetUnion> impl_;
};

}  // namespace mstrep
