#include "qfz/mst.hpp"

#include <numeric>

namespace qfz {

SpanningSubgraph kruskal(const Graph& graph, const WeightMap& weights) {
  const std::size_t m = graph.edge_count();
  if (weights.size() != m) throw Error(ErrorCode::kSizeMismatch, "weights do not match graph");
  const auto rank = weights.rank();

  // Counting sort on rank keeps edge-index order inside each rank.
  std::vector<std::uint32_t> start(m + 1, 0);
  for (EdgeId e = 0; e < m; ++e) ++start[rank[e] + 1];
  std::partial_sum(start.begin(), start.end(), start.begin());
  std::vector<EdgeId> order(m);
  for (EdgeId e = 0; e < m; ++e) order[start[rank[e]]++] = e;

  DisjointSets sets(graph.vertex_count());
  std::vector<EdgeId> tree;
  tree.reserve(graph.vertex_count() - 1);
  for (EdgeId e : order) {
    if (sets.set_count() == 1) break;
    const Edge& edge = graph.edges()[e];
    if (sets.unite(edge.x, edge.y) != kNoVertex) tree.push_back(e);
  }
  if (sets.set_count() != 1) {
    throw Error(ErrorCode::kDisconnected, "minimum spanning tree requires a connected graph");
  }
  return SpanningSubgraph(graph, EdgeSet(m, std::move(tree)));
}

double total_weight(const SpanningSubgraph& subgraph, const WeightMap& weights) {
  double sum = 0.0;
  for (EdgeId e : subgraph.edges().indices()) sum += weights.raw(e);
  return sum;
}

bool check_mst_via_qfz(const Graph& graph, const WeightMap& weights,
                       const SpanningSubgraph& candidate) {
  if (&candidate.host() != &graph && !(candidate.host() == graph)) {
    throw Error(ErrorCode::kPrecondition, "candidate is not a subgraph of this graph");
  }
  if (!candidate.is_connected()) {
    throw Error(ErrorCode::kDisconnected, "candidate subgraph is not connected");
  }
  const Dendrogram reference = quasi_flat_zones(graph, weights);
  if (!hierarchy_equal(quasi_flat_zones(graph, weights, candidate.edges()), reference)) {
    return false;
  }
  // In a tree every edge is a bridge, so each deletion disconnects.
  if (candidate.is_spanning_tree()) return true;
  for (EdgeId e : candidate.edges().indices()) {
    const EdgeSet rest = candidate.edges().without(e);
    if (!is_connected(graph, rest)) continue;
    if (hierarchy_equal(quasi_flat_zones(graph, weights, rest), reference)) return false;
  }
  return true;
}

}  // namespace qfz
