#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "qfz/error.hpp"

namespace qfz {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
// Level parameter lambda, ranging over {0, ..., |E|}. Edge ranks use the same
// type and range over {0, ..., |E| - 1}.
using Level = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

struct Edge {
  VertexId x;
  VertexId y;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected simple graph with a fixed edge order. Edge i is edges()[i].
class Graph {
 public:
  // Checks range, self-loops, duplicates and connectivity.
  static Graph validated(std::size_t vertex_count, std::vector<Edge> edges);
  // Same checks except connectivity. Meant for spanning subgraphs and
  // disconnection probes.
  static Graph unchecked_connectivity(std::size_t vertex_count,
                                      std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(std::size_t vertex_count, std::vector<Edge> edges)
      : vertex_count_(vertex_count), edges_(std::move(edges)) {}

  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

// Free-function spelling of Graph::validated.
Graph validate_graph(std::size_t vertex_count, std::vector<Edge> edges);

// Sorted, duplicate-free list of edge indices of a host graph.
class EdgeSet {
 public:
  EdgeSet() = default;
  // Sorts and validates `indices` against a host with `edge_count` edges.
  EdgeSet(std::size_t edge_count, std::vector<EdgeId> indices);

  static EdgeSet all(std::size_t edge_count);

  std::span<const EdgeId> indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  bool contains(EdgeId e) const;
  // Same set without `e`; `e` must be a member.
  EdgeSet without(EdgeId e) const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<EdgeId> indices_;
};

// Per-edge weights: the raw values and their order-isomorphic integer ranks.
class WeightMap {
 public:
  // Integer levels used directly as ranks (raw = level). Values must lie in
  // {0, ..., |E| - 1}; unlike normalize_weights they need not be dense, which
  // is what lets a saliency map be fed back in unchanged.
  static WeightMap from_levels(const Graph& graph, std::vector<Level> levels);

  std::size_t size() const noexcept { return rank_.size(); }
  std::span<const double> raw() const noexcept { return raw_; }
  std::span<const Level> rank() const noexcept { return rank_; }
  double raw(EdgeId e) const { return raw_.at(e); }
  Level rank(EdgeId e) const { return rank_.at(e); }

 private:
  friend WeightMap normalize_weights(const Graph&, std::span<const double>);
  WeightMap(std::vector<double> raw, std::vector<Level> rank)
      : raw_(std::move(raw)), rank_(std::move(rank)) {}

  std::vector<double> raw_;
  std::vector<Level> rank_;
};

// Dense ranking: equal raws share a rank, ranks form {0, ..., k - 1}.
WeightMap normalize_weights(const Graph& graph, std::span<const double> raw);

// Weights that are already integers in {0, ..., |E| - 1} are used as levels
// unchanged; anything else goes through normalize_weights. Keeps saliency
// maps read back from files bit-identical under psi.
WeightMap interpret_weights(const Graph& graph, std::span<const double> raw);

// Vertex labeling with canonical region ids: regions are numbered in order of
// their smallest vertex, so equal partitions compare equal structurally.
class Partition {
 public:
  Partition() = default;
  // Relabels arbitrary region ids into canonical form.
  static Partition from_labels(std::span<const std::uint32_t> labels);
  static Partition singletons(std::size_t vertex_count);
  static Partition whole(std::size_t vertex_count);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t region_count() const noexcept { return region_count_; }
  std::span<const std::uint32_t> labels() const noexcept { return labels_; }
  std::uint32_t region_of(VertexId v) const { return labels_.at(v); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::uint32_t> labels_;
  std::size_t region_count_ = 0;
};

// Union-find with path halving and union by rank.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t size);

  std::uint32_t find(std::uint32_t x);
  // Returns the new root, or kNoVertex when already joined.
  std::uint32_t unite(std::uint32_t a, std::uint32_t b);
  std::size_t set_count() const noexcept { return set_count_; }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> rank_;
  std::size_t set_count_;
};

// Components of (V, edge_subset).
Partition connected_components(const Graph& graph, const EdgeSet& edge_subset);
bool is_connected(const Graph& graph, const EdgeSet& edge_subset);

// True iff every region of `fine` lies inside a region of `coarse`.
bool refines(const Partition& fine, const Partition& coarse);

// Edges whose endpoints lie in different regions.
EdgeSet cut(const Partition& partition, const Graph& graph);

}  // namespace qfz
