#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qfz/hierarchy.hpp"

namespace qfz {

// Static range-minimum index returning the position of the leftmost minimum.
//
// Values are cut into 32-wide blocks. A sparse table over block minima answers
// the whole-block part of a query; each position keeps a 32-bit mask of the
// increasing stack of its block prefix, which answers the in-block parts with
// one count-trailing-zeros. Build O(n + (n/32) log n), query O(1).
class RangeMinIndex {
 public:
  RangeMinIndex() = default;
  explicit RangeMinIndex(std::vector<std::uint32_t> values);

  std::size_t size() const noexcept { return values_.size(); }
  // Position of the minimum over [first, last] (inclusive, first <= last).
  std::uint32_t argmin(std::uint32_t first, std::uint32_t last) const;

 private:
  static constexpr std::uint32_t kBlock = 32;

  std::uint32_t in_block(std::uint32_t first, std::uint32_t last) const;
  std::uint32_t better(std::uint32_t a, std::uint32_t b) const {
    return values_[b] < values_[a] ? b : a;
  }

  std::vector<std::uint32_t> values_;
  std::vector<std::uint32_t> stack_mask_;
  // table_[k][b] = position of the minimum over blocks b .. b + 2^k - 1.
  std::vector<std::vector<std::uint32_t>> table_;
};

// Lowest common ancestor queries over a dendrogram via the Euler tour and a
// range-minimum over tour depths.
class LcaIndex {
 public:
  explicit LcaIndex(const Dendrogram& dendrogram);

  NodeId lca(NodeId a, NodeId b) const;
  std::size_t tour_length() const noexcept { return tour_.size(); }

 private:
  std::vector<NodeId> tour_;
  std::vector<std::uint32_t> first_;
  RangeMinIndex depth_min_;
};

inline LcaIndex build_lca(const Dendrogram& dendrogram) { return LcaIndex(dendrogram); }

}  // namespace qfz
