#include "qfz/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace qfz::oracle {

namespace {

void guard(const Graph& graph, std::size_t max_vertices) {
  if (graph.vertex_count() > max_vertices || graph.edge_count() > kMaxEdges) {
    throw Error(ErrorCode::kSizeGuard, "graph too large for the naive oracle");
  }
}

// Region label = smallest vertex reached, by BFS over the kept edges.
Partition bfs_components(const Graph& graph, const std::vector<bool>& keep) {
  const std::size_t n = graph.vertex_count();
  std::vector<std::vector<VertexId>> adjacent(n);
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    if (!keep[e]) continue;
    adjacent[graph.edge(e).x].push_back(graph.edge(e).y);
    adjacent[graph.edge(e).y].push_back(graph.edge(e).x);
  }
  std::vector<std::uint32_t> label(n, kNoVertex);
  for (VertexId s = 0; s < n; ++s) {
    if (label[s] != kNoVertex) continue;
    std::deque<VertexId> queue{s};
    label[s] = s;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (VertexId w : adjacent[v]) {
        if (label[w] == kNoVertex) {
          label[w] = s;
          queue.push_back(w);
        }
      }
    }
  }
  return Partition::from_labels(label);
}

std::vector<Partition> qfz_of_levels(const Graph& graph, const std::vector<Level>& rank) {
  std::vector<Partition> out;
  for (Level lambda = 0; lambda <= graph.edge_count(); ++lambda) {
    std::vector<bool> keep(graph.edge_count());
    for (EdgeId e = 0; e < graph.edge_count(); ++e) keep[e] = rank[e] < lambda;
    out.push_back(bfs_components(graph, keep));
  }
  return out;
}

}  // namespace

std::vector<Partition> qfz_naive(const Graph& graph, const WeightMap& weights) {
  guard(graph, kMaxVertices);
  return qfz_of_levels(graph, std::vector<Level>(weights.rank().begin(), weights.rank().end()));
}

std::vector<Level> saliency_naive(const Graph& graph,
                                  const std::vector<Partition>& partitions) {
  std::vector<Level> out(graph.edge_count(), 0);
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    const Edge& edge = graph.edge(e);
    for (std::size_t lambda = partitions.size(); lambda-- > 0;) {
      const Partition& p = partitions[lambda];
      if (p.region_of(edge.x) != p.region_of(edge.y)) {
        out[e] = static_cast<Level>(lambda);
        break;
      }
    }
  }
  return out;
}

std::vector<SpanningTree> spanning_tree_enumerate(const Graph& graph,
                                                  const WeightMap& weights) {
  guard(graph, kMaxEnumerationVertices);
  const std::size_t n = graph.vertex_count();
  const std::size_t m = graph.edge_count();
  std::vector<SpanningTree> trees;
  if (n - 1 > m) return trees;
  // Lexicographic walk over all (n - 1)-subsets of edge indices.
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n - 1), true);
  do {
    if (bfs_components(graph, pick).region_count() != 1) continue;
    SpanningTree t;
    std::vector<double> raws;
    for (EdgeId e = 0; e < m; ++e) {
      if (!pick[e]) continue;
      t.edges.push_back(e);
      raws.push_back(weights.raw(e));
    }
    // Summing in sorted order gives equal multisets bit-identical totals.
    std::sort(raws.begin(), raws.end());
    for (double r : raws) t.weight += r;
    trees.push_back(std::move(t));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return trees;
}

std::vector<EdgeId> minimality_probe(const Graph& graph, const std::vector<Level>& saliency) {
  guard(graph, kMaxVertices);
  if (saliency.size() != graph.edge_count()) {
    throw Error(ErrorCode::kSizeMismatch, "one saliency value per edge expected");
  }
  const auto reference = qfz_of_levels(graph, saliency);
  if (saliency_naive(graph, reference) != saliency) {
    throw Error(ErrorCode::kPrecondition, "input is not a saliency map");
  }
  std::vector<EdgeId> violating;
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    if (saliency[e] == 0) continue;
    auto lowered = saliency;
    --lowered[e];
    if (qfz_of_levels(graph, lowered) == reference) violating.push_back(e);
  }
  return violating;
}

Fixture single_edge_fixture() {
  return {"single-edge", Graph::validated(2, {{0, 1}}), {0.0}};
}

Fixture path_fixture() {
  return {"path", Graph::validated(3, {{0, 1}, {1, 2}}), {0.0, 1.0}};
}

Fixture triangle_fixture() {
  return {"triangle", Graph::validated(3, {{0, 1}, {1, 2}, {0, 2}}), {0.0, 1.0, 2.0}};
}

Fixture four_cycle_fixture() {
  return {"four-cycle", Graph::validated(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}),
          {0.0, 2.0, 0.0, 3.0}};
}

}  // namespace qfz::oracle
