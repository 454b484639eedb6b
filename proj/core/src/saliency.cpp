#include "qfz/saliency.hpp"

#include <algorithm>
#include <limits>

namespace qfz {

std::vector<double> SaliencyMap::raw_values(const WeightMap& weights) const {
  const auto rank = weights.rank();
  const Level top = rank.empty() ? 0 : *std::max_element(rank.begin(), rank.end());
  std::vector<double> raw_of_rank(std::size_t{top} + 1,
                                  std::numeric_limits<double>::quiet_NaN());
  for (std::size_t e = 0; e < rank.size(); ++e) raw_of_rank[rank[e]] = weights.raw()[e];
  std::vector<double> out(values_.size());
  for (std::size_t e = 0; e < values_.size(); ++e) {
    if (values_[e] > top) {
      throw Error(ErrorCode::kSizeMismatch, "saliency value has no rank in weights");
    }
    out[e] = raw_of_rank[values_[e]];
  }
  return out;
}

SaliencyMap saliency_of_hierarchy(const Dendrogram& dendrogram, const LcaIndex& lca,
                                  const Graph& graph) {
  if (dendrogram.leaf_count() != graph.vertex_count()) {
    throw Error(ErrorCode::kSizeMismatch, "dendrogram leaves do not match graph vertices");
  }
  const auto edges = graph.edges();
  const auto levels = dendrogram.levels();
  std::vector<Level> values(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    values[e] = levels[lca.lca(edges[e].x, edges[e].y)] - 1;
  }
  return SaliencyMap(std::move(values));
}

SaliencyMap saliency_of_hierarchy(const Dendrogram& dendrogram, const Graph& graph) {
  if (dendrogram.leaf_count() != graph.vertex_count()) {
    throw Error(ErrorCode::kSizeMismatch, "dendrogram leaves do not match graph vertices");
  }
  return saliency_of_hierarchy(dendrogram, LcaIndex(dendrogram), graph);
}

SaliencyMap psi(const Graph& graph, const WeightMap& weights) {
  return saliency_of_hierarchy(quasi_flat_zones(graph, weights), graph);
}

bool is_saliency_map(const Graph& graph, const WeightMap& weights) {
  const SaliencyMap s = psi(graph, weights);
  return std::equal(s.values().begin(), s.values().end(), weights.rank().begin(),
                    weights.rank().end());
}

}  // namespace qfz
