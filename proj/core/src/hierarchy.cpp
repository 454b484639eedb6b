#include "qfz/hierarchy.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace qfz {

namespace {

// Stable counting sort of `items` by key(item) in [0, key_count).
template <typename Key>
std::vector<std::uint32_t> counting_sort(std::span<const std::uint32_t> items,
                                         std::size_t key_count, Key key) {
  std::vector<std::uint32_t> start(key_count + 1, 0);
  for (auto it : items) ++start[key(it) + 1];
  std::partial_sum(start.begin(), start.end(), start.begin());
  std::vector<std::uint32_t> out(items.size());
  for (auto it : items) out[start[key(it)]++] = it;
  return out;
}

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedInput, "dendrogram: " + what);
}

}  // namespace

std::span<const NodeId> Dendrogram::children(NodeId n) const {
  if (n >= node_count()) throw Error(ErrorCode::kPrecondition, "node out of range");
  return std::span<const NodeId>(children_).subspan(
      child_offset_[n], child_offset_[n + 1] - child_offset_[n]);
}

Dendrogram Dendrogram::canonical(std::size_t leaf_count,
                                 std::span<const NodeId> parent,
                                 std::span<const Level> level,
                                 Level level_bound) {
  const std::size_t total = parent.size();
  if (leaf_count == 0) malformed("no leaves");
  if (level.size() != total || total < leaf_count) malformed("array sizes differ");

  // Child lists of the input tree, for a pre-order walk from the root.
  NodeId root = kNoNode;
  std::vector<std::uint32_t> offset(total + 1, 0);
  for (NodeId i = 0; i < total; ++i) {
    if (i < leaf_count && level[i] != 0) malformed("leaf with nonzero level");
    if (parent[i] == kNoNode) {
      if (root != kNoNode) malformed("more than one root");
      root = i;
      continue;
    }
    if (parent[i] >= total) malformed("parent out of range");
    if (parent[i] < leaf_count) malformed("leaf used as parent");
    if (level[parent[i]] < level[i]) malformed("parent level below child level");
    ++offset[parent[i] + 1];
  }
  if (root == kNoNode) malformed("no root");
  std::partial_sum(offset.begin(), offset.end(), offset.begin());
  std::vector<NodeId> kids(total == 0 ? 0 : total - 1);
  {
    std::vector<std::uint32_t> fill(offset.begin(), offset.end() - 1);
    for (NodeId i = 0; i < total; ++i) {
      if (parent[i] != kNoNode) kids[fill[parent[i]]++] = i;
    }
  }
  std::vector<NodeId> preorder;
  preorder.reserve(total);
  std::vector<NodeId> stack{root};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    preorder.push_back(v);
    for (auto k = offset[v]; k < offset[v + 1]; ++k) stack.push_back(kids[k]);
  }
  if (preorder.size() != total) malformed("parent links contain a cycle");
  for (NodeId i = static_cast<NodeId>(leaf_count); i < total; ++i) {
    if (offset[i] == offset[i + 1]) malformed("internal node without children");
  }

  // Collapse chains of equal level into their topmost node.
  std::vector<NodeId> rep(total);
  for (NodeId v : preorder) {
    const NodeId p = parent[v];
    rep[v] = (v >= leaf_count && p != kNoNode && level[p] == level[v]) ? rep[p] : v;
  }
  std::vector<NodeId> collapsed_parent(total, kNoNode);
  std::vector<std::uint32_t> child_count(total, 0);
  for (NodeId v = 0; v < total; ++v) {
    if (rep[v] != v || parent[v] == kNoNode) continue;
    collapsed_parent[v] = rep[parent[v]];
    ++child_count[collapsed_parent[v]];
  }

  // Splice out unary nodes: anything attached to one attaches to its target.
  std::vector<NodeId> target(total, kNoNode);
  NodeId new_root = root;
  for (NodeId v : preorder) {
    if (rep[v] != v) continue;
    const NodeId up = collapsed_parent[v] == kNoNode ? kNoNode : target[collapsed_parent[v]];
    target[v] = (v >= leaf_count && child_count[v] == 1) ? up : v;
  }
  std::vector<NodeId> final_parent(total, kNoNode);
  std::vector<NodeId> kept_internal;
  for (NodeId v : preorder) {
    if (rep[v] != v || target[v] != v) continue;
    final_parent[v] = collapsed_parent[v] == kNoNode ? kNoNode : target[collapsed_parent[v]];
    if (final_parent[v] == kNoNode) new_root = v;
    if (v >= leaf_count) kept_internal.push_back(v);
  }

  std::vector<NodeId> min_leaf(total, kNoNode);
  for (NodeId v = 0; v < leaf_count; ++v) min_leaf[v] = v;
  for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
    const NodeId v = *it;
    if (target[v] != v || rep[v] != v) continue;
    if (final_parent[v] != kNoNode) {
      min_leaf[final_parent[v]] = std::min(min_leaf[final_parent[v]], min_leaf[v]);
    }
  }

  // Canonical ids: internal nodes ordered by (level, smallest leaf).
  const auto by_leaf = counting_sort(kept_internal, leaf_count,
                                     [&](NodeId v) { return min_leaf[v]; });
  Level max_level = 0;
  for (NodeId v : kept_internal) max_level = std::max(max_level, level[v]);
  const auto ordered = counting_sort(by_leaf, std::size_t{max_level} + 1,
                                     [&](NodeId v) { return level[v]; });

  std::vector<NodeId> new_id(total, kNoNode);
  for (NodeId v = 0; v < leaf_count; ++v) new_id[v] = v;
  for (std::size_t k = 0; k < ordered.size(); ++k) {
    new_id[ordered[k]] = static_cast<NodeId>(leaf_count + k);
  }

  Dendrogram d;
  d.leaf_count_ = leaf_count;
  d.level_bound_ = std::max(level_bound, level[new_root]);
  const std::size_t count = leaf_count + ordered.size();
  d.level_.assign(count, 0);
  d.parent_.assign(count, kNoNode);
  d.min_leaf_.assign(count, kNoNode);
  std::vector<NodeId> old_of(count);
  for (NodeId v = 0; v < leaf_count; ++v) old_of[v] = v;
  for (std::size_t k = 0; k < ordered.size(); ++k) old_of[leaf_count + k] = ordered[k];
  for (NodeId i = 0; i < count; ++i) {
    const NodeId old = old_of[i];
    d.level_[i] = level[old];
    d.min_leaf_[i] = min_leaf[old];
    d.parent_[i] = final_parent[old] == kNoNode ? kNoNode : new_id[final_parent[old]];
  }

  // Children grouped by parent, each group in order of smallest leaf.
  std::vector<std::uint32_t> all(count);
  std::iota(all.begin(), all.end(), 0u);
  const auto by_min_leaf = counting_sort(all, leaf_count,
                                         [&](NodeId v) { return d.min_leaf_[v]; });
  d.child_offset_.assign(count + 1, 0);
  for (NodeId i = 0; i < count; ++i) {
    if (d.parent_[i] != kNoNode) ++d.child_offset_[d.parent_[i] + 1];
  }
  std::partial_sum(d.child_offset_.begin(), d.child_offset_.end(), d.child_offset_.begin());
  d.children_.resize(count - 1);
  std::vector<std::uint32_t> fill(d.child_offset_.begin(), d.child_offset_.end() - 1);
  for (NodeId v : by_min_leaf) {
    if (d.parent_[v] != kNoNode) d.children_[fill[d.parent_[v]]++] = v;
  }
  return d;
}

Partition level_partition(const Graph& graph, const WeightMap& weights,
                          Level lambda, const std::optional<EdgeSet>& edge_subset) {
  const std::size_t m = graph.edge_count();
  if (weights.size() != m) throw Error(ErrorCode::kSizeMismatch, "weights do not match graph");
  if (lambda > m) {
    throw Error(ErrorCode::kLevelOutOfRange,
                "level " + std::to_string(lambda) + " outside {0.." + std::to_string(m) + "}");
  }
  const EdgeSet& host = edge_subset ? *edge_subset : EdgeSet::all(m);
  std::vector<EdgeId> below;
  for (EdgeId e : host.indices()) {
    if (e >= m) throw Error(ErrorCode::kInvalidEdgeIndex, "edge subset exceeds host graph");
    if (weights.rank(e) < lambda) below.push_back(e);
  }
  return connected_components(graph, EdgeSet(m, std::move(below)));
}

Dendrogram quasi_flat_zones(const Graph& graph, const WeightMap& weights,
                            const std::optional<EdgeSet>& edge_subset) {
  const std::size_t n = graph.vertex_count();
  const std::size_t m = graph.edge_count();
  if (weights.size() != m) throw Error(ErrorCode::kSizeMismatch, "weights do not match graph");

  std::vector<std::uint32_t> edges;
  if (edge_subset) {
    edges.assign(edge_subset->indices().begin(), edge_subset->indices().end());
    if (!edges.empty() && edges.back() >= m) {
      throw Error(ErrorCode::kInvalidEdgeIndex, "edge subset exceeds host graph");
    }
  } else {
    edges.resize(m);
    std::iota(edges.begin(), edges.end(), 0u);
  }
  const auto rank = weights.rank();
  const auto sorted = counting_sort(edges, std::max<std::size_t>(m, 1),
                                    [&](EdgeId e) { return rank[e]; });

  // Binary merge tree; canonical() collapses equal-level merges afterwards.
  std::vector<NodeId> parent(n, kNoNode);
  std::vector<Level> level(n, 0);
  parent.reserve(2 * n - 1);
  level.reserve(2 * n - 1);
  std::vector<NodeId> top(n);
  std::iota(top.begin(), top.end(), 0u);
  DisjointSets sets(n);
  for (EdgeId e : sorted) {
    const Edge& edge = graph.edges()[e];
    const auto a = sets.find(edge.x);
    const auto b = sets.find(edge.y);
    if (a == b) continue;
    const auto node = static_cast<NodeId>(parent.size());
    parent.push_back(kNoNode);
    level.push_back(rank[e] + 1);
    parent[top[a]] = node;
    parent[top[b]] = node;
    top[sets.unite(a, b)] = node;
    if (sets.set_count() == 1) break;
  }
  if (sets.set_count() != 1) {
    throw Error(ErrorCode::kDisconnected,
                "quasi-flat zones hierarchy requires a connected (sub)graph");
  }
  return Dendrogram::canonical(n, parent, level, static_cast<Level>(m));
}

Partition partition_at(const Dendrogram& dendrogram, Level lambda) {
  if (lambda > dendrogram.level_bound()) {
    throw Error(ErrorCode::kLevelOutOfRange,
                "level " + std::to_string(lambda) + " above hierarchy depth " +
                    std::to_string(dendrogram.level_bound()));
  }
  const std::size_t count = dendrogram.node_count();
  std::vector<NodeId> rep(count);
  const auto parents = dendrogram.parents();
  const auto levels = dendrogram.levels();
  for (std::size_t k = count; k-- > 0;) {
    const NodeId p = parents[k];
    rep[k] = (p != kNoNode && levels[p] <= lambda) ? rep[p] : static_cast<NodeId>(k);
  }
  rep.resize(dendrogram.leaf_count());
  return Partition::from_labels(rep);
}

bool hierarchy_equal(const Dendrogram& a, const Dendrogram& b) {
  if (a.leaf_count() != b.leaf_count()) {
    throw Error(ErrorCode::kSizeMismatch, "dendrograms have different leaf counts");
  }
  return a == b;
}

Dendrogram dendrogram_from_partitions(std::span<const Partition> partitions) {
  if (partitions.empty()) throw Error(ErrorCode::kPrecondition, "empty hierarchy");
  const std::size_t n = partitions.front().vertex_count();
  if (partitions.front() != Partition::singletons(n)) {
    throw Error(ErrorCode::kPrecondition, "first partition must be singletons");
  }
  if (partitions.back().region_count() != 1) {
    throw Error(ErrorCode::kPrecondition, "last partition must be {V}");
  }
  std::vector<NodeId> parent(n, kNoNode);
  std::vector<Level> level(n, 0);
  // Node currently standing for each region of the previous partition.
  std::vector<NodeId> current(n);
  std::iota(current.begin(), current.end(), 0u);
  for (std::size_t lambda = 1; lambda < partitions.size(); ++lambda) {
    const Partition& prev = partitions[lambda - 1];
    const Partition& next = partitions[lambda];
    if (next.vertex_count() != n || !refines(prev, next)) {
      throw Error(ErrorCode::kPrecondition,
                  "partition " + std::to_string(lambda) + " is not a coarsening");
    }
    // Distinct previous regions per new region, in vertex order.
    std::vector<std::vector<std::uint32_t>> members(next.region_count());
    std::vector<bool> seen(prev.region_count(), false);
    for (VertexId v = 0; v < n; ++v) {
      const auto r = prev.region_of(v);
      if (seen[r]) continue;
      seen[r] = true;
      members[next.region_of(v)].push_back(r);
    }
    std::vector<NodeId> updated(next.region_count());
    for (std::size_t region = 0; region < members.size(); ++region) {
      const auto& parts = members[region];
      if (parts.size() == 1) {
        updated[region] = current[parts.front()];
        continue;
      }
      const auto node = static_cast<NodeId>(parent.size());
      parent.push_back(kNoNode);
      level.push_back(static_cast<Level>(lambda));
      for (auto r : parts) parent[current[r]] = node;
      updated[region] = node;
    }
    current = std::move(updated);
  }
  return Dendrogram::canonical(n, parent, level,
                               static_cast<Level>(partitions.size() - 1));
}

std::vector<Partition> HierarchyView::partitions() const {
  std::vector<Partition> out;
  out.reserve(std::size_t{depth()} + 1);
  for (Level lambda = 0; lambda <= depth(); ++lambda) out.push_back(partition_at(lambda));
  return out;
}

}  // namespace qfz
