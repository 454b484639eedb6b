#pragma once

#include <string>
#include <vector>

#include "qfz/graph.hpp"

// Deliberately naive reference implementations. They evaluate the
// definitions literally (breadth-first search per level, exhaustive
// enumeration) and share no code path with the union-find and LCA machinery
// they are used to check. Size guards throw instead of truncating.
namespace qfz::oracle {

inline constexpr std::size_t kMaxVertices = 32;
inline constexpr std::size_t kMaxEdges = 256;
inline constexpr std::size_t kMaxEnumerationVertices = 7;

// Components of (V, {u : rank(u) < lambda}) by BFS, for every lambda in
// {0, ..., |E|}. Regions are labeled by smallest vertex.
std::vector<Partition> qfz_naive(const Graph& graph, const WeightMap& weights);

// For each edge, the largest lambda whose partition separates its endpoints.
std::vector<Level> saliency_naive(const Graph& graph,
                                  const std::vector<Partition>& partitions);

struct SpanningTree {
  std::vector<EdgeId> edges;
  double weight = 0.0;
};
// Every (|V| - 1)-edge subset that connects V.
std::vector<SpanningTree> spanning_tree_enumerate(const Graph& graph,
                                                  const WeightMap& weights);

// Edges of a saliency map whose unit decrement leaves the hierarchy
// unchanged. Empty for a genuine saliency map. Throws kPrecondition when
// `saliency` is not a fixed point of the naive saliency operator.
std::vector<EdgeId> minimality_probe(const Graph& graph, const std::vector<Level>& saliency);

struct Fixture {
  std::string name;
  Graph graph;
  std::vector<double> raw;

  WeightMap weights() const { return interpret_weights(graph, raw); }
};
// Small named graphs used across the test suites.
Fixture single_edge_fixture();
Fixture path_fixture();      // 0-1-2, weights [0, 1]
Fixture triangle_fixture();  // edges 01, 12, 02, weights [0, 1, 2]
Fixture four_cycle_fixture();  // 01, 12, 23, 30, weights [0, 2, 0, 3]

}  // namespace qfz::oracle
