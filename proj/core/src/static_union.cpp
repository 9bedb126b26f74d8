#include "mstrep/static_union.hpp"

#include <numeric>

namespace mstrep {

std::string_view to_string(DsuEngine engine) {
  switch (engine) {
    case DsuEngine::kReference:
      return "ref";
    case DsuEngine::kGabowTarjan:
      return "gt";
  }
  return "unknown";
}

ReferenceUnion::ReferenceUnion(const TreeIndex& ti)
    : parent_(ti.parent),
      label_(ti.label),
      root_(ti.root),
      jump_(ti.size()),
      made_(ti.size(), 0) {
  std::iota(jump_.begin(), jump_.end(), VertexId{0});
}

void ReferenceUnion::makeset(VertexId v) {
  MSTREP_EXPECTS(v < parent_.size(), "vertex out of range");
  MSTREP_EXPECTS(!made_[v], "makeset called twice");
  made_[v] = 1;
  jump_[v] = v;
  ++stats_.makesets;
}

MicrosetUnion::MicrosetUnion(const TreeIndex& ti)
    : parent_(ti.parent), root_(ti.root), nodes_(ti.size()), made_(ti.size(), 0) {
  const std::size_t n = ti.size();
  const auto& order = ti.preorder;

  // Greedy bottom-up packing: a vertex absorbs a child's open fragment while
  // the result still fits, otherwise the child's fragment becomes a microset.
  std::vector<std::uint32_t> open(n, 1);
  std::vector<char> is_root(n, 0);
  constexpr std::size_t kAhead = 16;
  for (std::size_t i = n; i-- > 1;) {
    if (i >= kAhead) {
      const VertexId far = order[i - kAhead];
      __builtin_prefetch(&ti.parent[far]);
      __builtin_prefetch(&open[far]);
      if (i >= 2 * kAhead) __builtin_prefetch(&open[ti.parent[order[i - kAhead / 2]]]);
    }
    const VertexId v = order[i];
    const VertexId p = ti.parent[v];
    if (open[p] + open[v] <= kMicrosetSize) {
      open[p] += open[v];
    } else {
      is_root[v] = 1;
    }
  }
  if (n > 0) is_root[ti.root] = 1;

  std::vector<VertexId> roots;
  std::vector<std::uint32_t> count;
  std::vector<std::uint8_t> local(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i + kAhead < n) {
      const VertexId far = order[i + kAhead];
      __builtin_prefetch(&nodes_[far], 1);
      __builtin_prefetch(&ti.label[far]);
      __builtin_prefetch(&ti.parent[far]);
      __builtin_prefetch(&is_root[far]);
      __builtin_prefetch(&local[far], 1);
    }
    if (i + kAhead / 2 < n) __builtin_prefetch(&nodes_[ti.parent[order[i + kAhead / 2]]]);
    const VertexId v = order[i];
    Node& node = nodes_[v];
    node.label = ti.label[v];
    if (is_root[v]) {
      node.micro = static_cast<std::uint32_t>(roots.size());
      roots.push_back(v);
      count.push_back(0);
    } else {
      node.micro = nodes_[ti.parent[v]].micro;
    }
    local[v] = static_cast<std::uint8_t>(count[node.micro]++);
    node.ancestors =
        (Mask{1} << local[v]) | (is_root[v] ? 0 : nodes_[ti.parent[v]].ancestors);
  }

  micros_.resize(roots.size());
  std::uint32_t offset = 0;
  for (std::size_t ms = 0; ms < roots.size(); ++ms) {
    micros_[ms] = Micro{0, offset, ti.parent[roots[ms]]};
    offset += count[ms];
  }
  members_.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    members_[micros_[nodes_[v].micro].offset + local[v]] = v;
  }
}

void MicrosetUnion::makeset(VertexId v) {
  MSTREP_EXPECTS(v < parent_.size(), "vertex out of range");
  MSTREP_EXPECTS(!made_[v], "makeset called twice");
  made_[v] = 1;
  micros_[nodes_[v].micro].linked &= ~self_bit(nodes_[v]);
  ++stats_.makesets;
}

namespace {

std::variant<ReferenceUnion, MicrosetUnion> make_engine(const TreeIndex& ti,
                                                        DsuEngine engine) {
  if (engine == DsuEngine::kReference) return ReferenceUnion(ti);
  return MicrosetUnion(ti);
}

}  // namespace

StaticUnion::StaticUnion(const TreeIndex& ti, DsuEngine engine)
    : engine_(engine), impl_(make_engine(ti, engine)) {}

}  // namespace mstrep
