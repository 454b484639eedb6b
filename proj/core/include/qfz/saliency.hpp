#pragma once

#include <span>
#include <vector>

#include "qfz/graph.hpp"
#include "qfz/hierarchy.hpp"
#include "qfz/lca.hpp"

namespace qfz {

// Per-edge saliency values in {0, ..., |E| - 1}: for edge {x, y}, one less
// than the level at which x and y first share a region.
class SaliencyMap {
 public:
  SaliencyMap() = default;
  explicit SaliencyMap(std::vector<Level> values) : values_(std::move(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const Level> values() const noexcept { return values_; }
  Level operator[](EdgeId e) const { return values_[e]; }

  // The values as level weights, ready to go back into psi or qfz.
  WeightMap as_weights(const Graph& graph) const {
    return WeightMap::from_levels(graph, values_);
  }
  // Each value re-expressed as the raw weight that carries that rank in
  // `weights` (the weights the map was computed from).
  std::vector<double> raw_values(const WeightMap& weights) const;

  friend bool operator==(const SaliencyMap&, const SaliencyMap&) = default;

 private:
  std::vector<Level> values_;
};

SaliencyMap saliency_of_hierarchy(const Dendrogram& dendrogram, const Graph& graph);
SaliencyMap saliency_of_hierarchy(const Dendrogram& dendrogram, const LcaIndex& lca,
                                  const Graph& graph);

// Saliency map of the quasi-flat zones hierarchy of (graph, weights).
SaliencyMap psi(const Graph& graph, const WeightMap& weights);

// True iff psi(graph, weights) equals the ranks of `weights` edge-wise.
bool is_saliency_map(const Graph& graph, const WeightMap& weights);

}  // namespace qfz
