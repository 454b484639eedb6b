#include "qfz/lca.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace qfz {

RangeMinIndex::RangeMinIndex(std::vector<std::uint32_t> values)
    : values_(std::move(values)), stack_mask_(values_.size()) {
  const auto n = static_cast<std::uint32_t>(values_.size());
  for (std::uint32_t start = 0; start < n; start += kBlock) {
    const std::uint32_t end = std::min(n, start + kBlock);
    std::uint32_t mask = 0;
    for (std::uint32_t i = start; i < end; ++i) {
      while (mask != 0) {
        const auto top = static_cast<std::uint32_t>(std::bit_width(mask) - 1);
        if (values_[start + top] <= values_[i]) break;
        mask ^= 1u << top;
      }
      mask |= 1u << (i - start);
      stack_mask_[i] = mask;
    }
  }

  const std::uint32_t blocks = (n + kBlock - 1) / kBlock;
  if (blocks == 0) return;
  table_.emplace_back(blocks);
  for (std::uint32_t b = 0; b < blocks; ++b) {
    table_[0][b] = in_block(b * kBlock, std::min(n, (b + 1) * kBlock) - 1);
  }
  for (std::uint32_t k = 1; (1u << k) <= blocks; ++k) {
    const auto& prev = table_[k - 1];
    std::vector<std::uint32_t> row(blocks - (1u << k) + 1);
    for (std::uint32_t b = 0; b < row.size(); ++b) {
      row[b] = better(prev[b], prev[b + (1u << (k - 1))]);
    }
    table_.push_back(std::move(row));
  }
}

std::uint32_t RangeMinIndex::in_block(std::uint32_t first, std::uint32_t last) const {
  const std::uint32_t offset = first % kBlock;
  const std::uint32_t mask = stack_mask_[last] & (~0u << offset);
  return first - offset + static_cast<std::uint32_t>(std::countr_zero(mask));
}

std::uint32_t RangeMinIndex::argmin(std::uint32_t first, std::uint32_t last) const {
  const std::uint32_t first_block = first / kBlock;
  const std::uint32_t last_block = last / kBlock;
  if (first_block == last_block) return in_block(first, last);
  std::uint32_t best = in_block(first, (first_block + 1) * kBlock - 1);
  if (first_block + 1 < last_block) {
    const std::uint32_t lo = first_block + 1;
    const std::uint32_t span = last_block - lo;
    const auto k = static_cast<std::uint32_t>(std::bit_width(span) - 1);
    best = better(best, table_[k][lo]);
    best = better(best, table_[k][last_block - (1u << k)]);
  }
  return better(best, in_block(last_block * kBlock, last));
}

LcaIndex::LcaIndex(const Dendrogram& dendrogram) {
  const std::size_t count = dendrogram.node_count();
  tour_.reserve(2 * count - 1);
  first_.assign(count, 0);
  std::vector<std::uint32_t> depth;
  depth.reserve(2 * count - 1);

  // Iterative DFS; each frame remembers the next child to descend into.
  std::vector<std::pair<NodeId, std::uint32_t>> stack;
  stack.emplace_back(dendrogram.root(), 0);
  first_[dendrogram.root()] = 0;
  tour_.push_back(dendrogram.root());
  depth.push_back(0);
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    const auto kids = dendrogram.children(node);
    if (next == kids.size()) {
      stack.pop_back();
      if (!stack.empty()) {
        tour_.push_back(stack.back().first);
        depth.push_back(static_cast<std::uint32_t>(stack.size() - 1));
      }
      continue;
    }
    const NodeId child = kids[next++];
    first_[child] = static_cast<std::uint32_t>(tour_.size());
    tour_.push_back(child);
    depth.push_back(static_cast<std::uint32_t>(stack.size()));
    stack.emplace_back(child, 0);
  }
  depth_min_ = RangeMinIndex(std::move(depth));
}

NodeId LcaIndex::lca(NodeId a, NodeId b) const {
  auto fa = first_.at(a);
  auto fb = first_.at(b);
  if (fa > fb) std::swap(fa, fb);
  return tour_[depth_min_.argmin(fa, fb)];
}

}  // namespace qfz
