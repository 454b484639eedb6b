#pragma once

// Random inputs shared by the unit, acceptance and benchmark targets.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "qfz/graph.hpp"
#include "qfz/hierarchy.hpp"
#include "qfz/pixel_io.hpp"

namespace qfz::testing {

using Rng = std::mt19937_64;

// Connected graph: a random spanning tree plus each remaining pair with
// probability `density`. Vertex labels and edge order are shuffled.
inline Graph random_connected_graph(Rng& rng, std::size_t n, double density) {
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::set<std::pair<VertexId, VertexId>> pairs;
  auto add = [&](VertexId a, VertexId b) { pairs.insert({std::min(a, b), std::max(a, b)}); };
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    add(perm[i], perm[pick(rng)]);
  }
  std::bernoulli_distribution extra(density);
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      if (extra(rng)) add(a, b);
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) {
    if (std::bernoulli_distribution(0.5)(rng)) std::swap(a, b);
    edges.push_back({a, b});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return Graph::validated(n, std::move(edges));
}

// Raw weights drawn from a small pool so that ties are common.
inline std::vector<double> random_raw_weights(Rng& rng, std::size_t m) {
  const std::size_t distinct = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(m, 1))(rng);
  std::uniform_int_distribution<std::size_t> pick(0, distinct - 1);
  std::uniform_real_distribution<double> scale(0.5, 10.0);
  const double factor = scale(rng);
  std::vector<double> raw(m);
  for (auto& w : raw) w = static_cast<double>(pick(rng)) * factor;
  return raw;
}

// Levels in {0, ..., |E| - 1}, not necessarily dense.
inline std::vector<Level> random_levels(Rng& rng, std::size_t m) {
  if (m == 0) return {};
  std::uniform_int_distribution<Level> pick(0, static_cast<Level>(m - 1));
  std::vector<Level> out(m);
  for (auto& l : out) l = pick(rng);
  return out;
}

// Random canonical dendrogram over `leaves` leaves: repeatedly merges 2..4
// random roots, sometimes at the same level as the previous merge.
inline Dendrogram random_dendrogram(Rng& rng, std::size_t leaves) {
  std::vector<NodeId> parent(leaves, kNoNode);
  std::vector<Level> level(leaves, 0);
  std::vector<NodeId> roots(leaves);
  std::iota(roots.begin(), roots.end(), 0u);
  Level current = 0;
  std::bernoulli_distribution same_level(0.3);
  while (roots.size() > 1) {
    const std::size_t arity =
        std::min(roots.size(), std::uniform_int_distribution<std::size_t>(2, 4)(rng));
    if (current == 0 || !same_level(rng)) ++current;
    const auto node = static_cast<NodeId>(parent.size());
    parent.push_back(kNoNode);
    level.push_back(current);
    for (std::size_t k = 0; k < arity; ++k) {
      const std::size_t i = std::uniform_int_distribution<std::size_t>(0, roots.size() - 1)(rng);
      parent[roots[i]] = node;
      roots[i] = roots.back();
      roots.pop_back();
    }
    roots.push_back(node);
  }
  return Dendrogram::canonical(leaves, parent, level, current);
}

// Naive LCA by walking parent links.
inline NodeId naive_lca(const Dendrogram& d, NodeId a, NodeId b) {
  std::vector<bool> seen(d.node_count(), false);
  for (NodeId x = a; x != kNoNode; x = d.parent(x)) seen[x] = true;
  for (NodeId y = b; y != kNoNode; y = d.parent(y))
    if (seen[y]) return y;
  return kNoNode;
}

inline GrayImage random_image(Rng& rng, std::size_t width, std::size_t height,
                              std::uint16_t maxval = 255) {
  GrayImage image{width, height, maxval, std::vector<std::uint16_t>(width * height)};
  std::uniform_int_distribution<int> pick(0, maxval);
  for (auto& p : image.pixels) p = static_cast<std::uint16_t>(pick(rng));
  return image;
}

}  // namespace qfz::testing
