#include <algorithm>
#include <string>

#include "commands.hpp"
#include "qfz/hierarchy.hpp"
#include "qfz/mst.hpp"
#include "qfz/oracle.hpp"
#include "qfz/saliency.hpp"

namespace qfz::cli {

namespace {

// Decrement checks rebuild the hierarchy once per edge.
constexpr std::size_t kMaxDecrementEdges = 4096;

PropertyResult check(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok ? Outcome::kPass : Outcome::kFail, std::move(detail)};
}

PropertyResult skip(std::string name, std::string why) {
  return {std::move(name), Outcome::kSkip, std::move(why)};
}

}  // namespace

std::vector<PropertyResult> verify_properties(const Graph& graph, const WeightMap& weights) {
  std::vector<PropertyResult> results;
  const auto rank = weights.rank();
  const Dendrogram hierarchy = quasi_flat_zones(graph, weights);
  const SaliencyMap s = psi(graph, weights);
  const WeightMap s_weights = s.as_weights(graph);

  results.push_back(check("bijection: QFZ(psi(w)) = QFZ(w)",
                          hierarchy_equal(quasi_flat_zones(graph, s_weights), hierarchy)));
  results.push_back(check("opening: idempotent", psi(graph, s_weights) == s));
  results.push_back(check("opening: anti-extensive",
                          std::equal(s.values().begin(), s.values().end(), rank.begin(),
                                     [](Level a, Level b) { return a <= b; })));
  {
    // A comparable pair: lower every other nonzero rank by one.
    std::vector<Level> lower(rank.begin(), rank.end());
    for (std::size_t e = 0; e < lower.size(); e += 2) {
      if (lower[e] > 0) --lower[e];
    }
    const SaliencyMap low = psi(graph, WeightMap::from_levels(graph, lower));
    results.push_back(check("opening: increasing",
                            std::equal(low.values().begin(), low.values().end(),
                                       s.values().begin(),
                                       [](Level a, Level b) { return a <= b; })));
  }

  if (graph.edge_count() <= kMaxDecrementEdges) {
    std::size_t redundant = 0;
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
      if (s[e] == 0) continue;
      std::vector<Level> lowered(s.values().begin(), s.values().end());
      --lowered[e];
      const auto d = quasi_flat_zones(graph, WeightMap::from_levels(graph, std::move(lowered)));
      if (hierarchy_equal(d, hierarchy)) ++redundant;
    }
    results.push_back(check("minimality: every unit decrement changes QFZ", redundant == 0,
                            redundant ? std::to_string(redundant) + " redundant edges" : ""));
  } else {
    results.push_back(skip("minimality: every unit decrement changes QFZ", "graph too large"));
  }

  const bool small = graph.vertex_count() <= oracle::kMaxVertices &&
                     graph.edge_count() <= oracle::kMaxEdges;
  if (small) {
    const auto naive = oracle::qfz_naive(graph, weights);
    bool same = true;
    for (Level lambda = 0; lambda < naive.size(); ++lambda) {
      same = same && partition_at(hierarchy, lambda) == naive[lambda];
    }
    results.push_back(check("oracle: QFZ matches level-by-level BFS", same));
    const auto naive_s = oracle::saliency_naive(graph, naive);
    results.push_back(check("oracle: LCA saliency matches cut scan",
                            std::equal(naive_s.begin(), naive_s.end(), s.values().begin(),
                                       s.values().end())));
    const std::vector<Level> sv(s.values().begin(), s.values().end());
    results.push_back(check("oracle: minimality probe empty",
                            oracle::minimality_probe(graph, sv).empty()));
  } else {
    results.push_back(skip("oracle: QFZ matches level-by-level BFS", "graph too large"));
    results.push_back(skip("oracle: LCA saliency matches cut scan", "graph too large"));
    results.push_back(skip("oracle: minimality probe empty", "graph too large"));
  }

  const SpanningSubgraph tree = kruskal(graph, weights);
  results.push_back(check("mst: QFZ(MST) = QFZ(G)",
                          hierarchy_equal(quasi_flat_zones(graph, weights, tree.edges()),
                                          hierarchy)));
  results.push_back(check("mst: QFZ checker accepts Kruskal tree",
                          check_mst_via_qfz(graph, weights, tree)));
  if (graph.vertex_count() <= oracle::kMaxEnumerationVertices) {
    const auto trees = oracle::spanning_tree_enumerate(graph, weights);
    double best = trees.front().weight;
    for (const auto& t : trees) best = std::min(best, t.weight);
    std::size_t disagreements = 0;
    for (const auto& t : trees) {
      const SpanningSubgraph candidate(graph, EdgeSet(graph.edge_count(), t.edges));
      if (check_mst_via_qfz(graph, weights, candidate) != (t.weight == best)) ++disagreements;
    }
    results.push_back(check("mst: QFZ checker agrees with enumeration", disagreements == 0,
                            std::to_string(trees.size()) + " spanning trees"));
  } else {
    results.push_back(skip("mst: QFZ checker agrees with enumeration", "graph too large"));
  }
  return results;
}

}  // namespace qfz::cli
