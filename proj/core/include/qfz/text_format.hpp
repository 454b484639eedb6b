#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qfz/graph.hpp"
#include "qfz/hierarchy.hpp"
#include "qfz/saliency.hpp"

// Plain-text formats. All writers are deterministic: LF newlines, single
// spaces, shortest round-trip decimal for weights.
//
//   graph:       "n m", then m lines "x y w" (edge index = line order)
//   saliency:    the graph format with the weight replaced by the saliency
//   dendrogram:  "n k", then k lines "id level child child ..." for the
//                internal nodes n .. n+k-1, children before parents
//   edge list:   one edge index per line, ascending
//
// Readers skip blank lines and '#' comments.
namespace qfz::text {

struct WeightedGraph {
  Graph graph;
  std::vector<double> weights;
};

WeightedGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& graph, std::span<const double> weights);

void write_saliency(std::ostream& out, const Graph& graph, const SaliencyMap& saliency);
// Reads a saliency file and checks that its edges match `graph`.
SaliencyMap read_saliency(std::istream& in, const Graph& graph);

void write_dendrogram(std::ostream& out, const Dendrogram& dendrogram);
// Level bound defaults to the root level when not given.
Dendrogram read_dendrogram(std::istream& in, Level level_bound = 0);

void write_edge_list(std::ostream& out, const EdgeSet& edges);
EdgeSet read_edge_list(std::istream& in, std::size_t host_edge_count);

std::string format_weight(double w);

}  // namespace qfz::text
