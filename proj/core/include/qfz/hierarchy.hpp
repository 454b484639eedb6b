#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qfz/graph.hpp"

namespace qfz {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

// Canonical merge tree of a complete connected hierarchy.
//
// Nodes 0..leaf_count()-1 are the leaves (one per vertex, level 0). Internal
// nodes follow, ordered by (level, smallest leaf), which is a topological
// order: every internal node has at least two children and a level strictly
// greater than each child's. Children are listed by smallest leaf. Two
// dendrograms describe the same hierarchy iff they compare equal.
class Dendrogram {
 public:
  // Canonicalizes an arbitrary rooted tree given by parent links. `parent`
  // and `level` cover all nodes; the first `leaf_count` are leaves and must
  // have level 0. Internal nodes may be unary or share the level of their
  // parent; such nodes are collapsed. `level_bound` is the largest valid
  // query level (|E| of the host graph).
  static Dendrogram canonical(std::size_t leaf_count,
                              std::span<const NodeId> parent,
                              std::span<const Level> level, Level level_bound);

  std::size_t leaf_count() const noexcept { return leaf_count_; }
  std::size_t node_count() const noexcept { return level_.size(); }
  std::size_t internal_count() const noexcept { return node_count() - leaf_count_; }
  NodeId root() const noexcept { return static_cast<NodeId>(node_count() - 1); }
  bool is_leaf(NodeId n) const noexcept { return n < leaf_count_; }
  Level level(NodeId n) const { return level_.at(n); }
  NodeId parent(NodeId n) const { return parent_.at(n); }
  NodeId min_leaf(NodeId n) const { return min_leaf_.at(n); }
  std::span<const NodeId> children(NodeId n) const;
  Level level_bound() const noexcept { return level_bound_; }

  std::span<const Level> levels() const noexcept { return level_; }
  std::span<const NodeId> parents() const noexcept { return parent_; }

  // Structural equality; level_bound is not part of the hierarchy.
  friend bool operator==(const Dendrogram& a, const Dendrogram& b) {
    return a.leaf_count_ == b.leaf_count_ && a.level_ == b.level_ &&
           a.parent_ == b.parent_;
  }

 private:
  std::size_t leaf_count_ = 0;
  Level level_bound_ = 0;
  std::vector<Level> level_;
  std::vector<NodeId> parent_;
  std::vector<NodeId> min_leaf_;
  std::vector<std::uint32_t> child_offset_;
  std::vector<NodeId> children_;
};

// Components of (V(X), {u in E(X) : rank(u) < lambda}) where X is the whole
// graph or the spanning subgraph given by `edge_subset`.
Partition level_partition(const Graph& graph, const WeightMap& weights,
                          Level lambda,
                          const std::optional<EdgeSet>& edge_subset = {});

// Quasi-flat zones hierarchy as a canonical dendrogram: edges are swept by
// increasing rank and each merge of rank r is recorded at level r + 1.
// Throws kDisconnected when the (sub)graph is not connected.
Dendrogram quasi_flat_zones(const Graph& graph, const WeightMap& weights,
                            const std::optional<EdgeSet>& edge_subset = {});

// Region of x = leaves under the highest ancestor of x with level <= lambda.
Partition partition_at(const Dendrogram& dendrogram, Level lambda);

// Level-wise equality of the two hierarchies.
bool hierarchy_equal(const Dendrogram& a, const Dendrogram& b);

// Rebuilds the canonical dendrogram of a complete hierarchy given as its
// partition sequence P_0, ..., P_l (P_0 singletons, P_l = {V}, nested).
Dendrogram dendrogram_from_partitions(std::span<const Partition> partitions);

// Read access to a dendrogram as the level-indexed sequence of partitions
// over {0, ..., level_bound}.
class HierarchyView {
 public:
  explicit HierarchyView(const Dendrogram& dendrogram) : dendrogram_(&dendrogram) {}

  Level depth() const noexcept { return dendrogram_->level_bound(); }
  Partition partition_at(Level lambda) const {
    return qfz::partition_at(*dendrogram_, lambda);
  }
  std::vector<Partition> partitions() const;

 private:
  const Dendrogram* dendrogram_;
};

}  // namespace qfz
