#pragma once

#include "qfz/graph.hpp"
#include "qfz/hierarchy.hpp"

namespace qfz {

// Spanning subgraph (V, edges) of a host graph. The host must outlive it.
class SpanningSubgraph {
 public:
  SpanningSubgraph(const Graph& host, EdgeSet edges)
      : host_(&host), edges_(std::move(edges)) {
    if (!edges_.empty() && edges_.indices().back() >= host.edge_count()) {
      throw Error(ErrorCode::kInvalidEdgeIndex, "subgraph edge not in host graph");
    }
  }

  const Graph& host() const noexcept { return *host_; }
  const EdgeSet& edges() const noexcept { return edges_; }
  bool is_connected() const { return qfz::is_connected(*host_, edges_); }
  bool is_spanning_tree() const {
    return edges_.size() + 1 == host_->vertex_count() && is_connected();
  }

 private:
  const Graph* host_;
  EdgeSet edges_;
};

// Minimum spanning tree by Kruskal, ties broken by (rank, edge index).
SpanningSubgraph kruskal(const Graph& graph, const WeightMap& weights);

// Sum of raw weights over the subgraph's edges.
double total_weight(const SpanningSubgraph& subgraph, const WeightMap& weights);

// Decides MST membership without comparing weights: the candidate must have
// the same quasi-flat zones hierarchy as its host, and no single edge may be
// removable without disconnecting it or changing that hierarchy.
bool check_mst_via_qfz(const Graph& graph, const WeightMap& weights,
                       const SpanningSubgraph& candidate);

}  // namespace qfz
