#include "qfz/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qfz {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSelfLoop: return "self-loop";
    case ErrorCode::kDuplicateEdge: return "duplicate edge";
    case ErrorCode::kVertexOutOfRange: return "vertex out of range";
    case ErrorCode::kDisconnected: return "disconnected";
    case ErrorCode::kEmptyGraph: return "empty graph";
    case ErrorCode::kInvalidWeight: return "invalid weight";
    case ErrorCode::kSizeMismatch: return "size mismatch";
    case ErrorCode::kLevelOutOfRange: return "level out of range";
    case ErrorCode::kInvalidEdgeIndex: return "invalid edge index";
    case ErrorCode::kMalformedInput: return "malformed input";
    case ErrorCode::kUnsupportedFormat: return "unsupported format";
    case ErrorCode::kSizeGuard: return "size guard exceeded";
    case ErrorCode::kPrecondition: return "precondition violated";
  }
  return "unknown";
}

namespace {

void check_edges(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw Error(ErrorCode::kEmptyGraph, "graph has no vertices");
  if (n > std::numeric_limits<VertexId>::max() - 1 ||
      edges.size() > std::numeric_limits<EdgeId>::max() - 1) {
    throw Error(ErrorCode::kSizeGuard, "graph too large for 32-bit ids");
  }
  // Bucket each edge under its smaller endpoint, then stamp neighbours.
  std::vector<std::uint32_t> offset(n + 1, 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [x, y] = edges[i];
    if (x >= n || y >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "edge " + std::to_string(i) + " has a vertex out of range");
    }
    if (x == y) {
      throw Error(ErrorCode::kSelfLoop,
                  "edge " + std::to_string(i) + " is a self-loop");
    }
    ++offset[std::min(x, y) + 1];
  }
  std::partial_sum(offset.begin(), offset.end(), offset.begin());
  std::vector<VertexId> bigger(edges.size());
  std::vector<std::uint32_t> fill(offset.begin(), offset.end() - 1);
  for (const auto& [x, y] : edges) bigger[fill[std::min(x, y)]++] = std::max(x, y);

  std::vector<VertexId> stamp(n, kNoVertex);
  for (VertexId u = 0; u < n; ++u) {
    for (auto k = offset[u]; k < offset[u + 1]; ++k) {
      if (stamp[bigger[k]] == u) {
        throw Error(ErrorCode::kDuplicateEdge,
                    "duplicate edge {" + std::to_string(u) + "," +
                        std::to_string(bigger[k]) + "}");
      }
      stamp[bigger[k]] = u;
    }
  }
}

}  // namespace

Graph Graph::unchecked_connectivity(std::size_t vertex_count,
                                    std::vector<Edge> edges) {
  check_edges(vertex_count, edges);
  return Graph(vertex_count, std::move(edges));
}

Graph Graph::validated(std::size_t vertex_count, std::vector<Edge> edges) {
  Graph g = unchecked_connectivity(vertex_count, std::move(edges));
  if (!is_connected(g, EdgeSet::all(g.edge_count()))) {
    throw Error(ErrorCode::kDisconnected, "graph is not connected");
  }
  return g;
}

Graph validate_graph(std::size_t vertex_count, std::vector<Edge> edges) {
  return Graph::validated(vertex_count, std::move(edges));
}

EdgeSet::EdgeSet(std::size_t edge_count, std::vector<EdgeId> indices)
    : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw Error(ErrorCode::kInvalidEdgeIndex, "duplicate edge index in set");
  }
  if (!indices_.empty() && indices_.back() >= edge_count) {
    throw Error(ErrorCode::kInvalidEdgeIndex,
                "edge index " + std::to_string(indices_.back()) +
                    " out of range");
  }
}

EdgeSet EdgeSet::all(std::size_t edge_count) {
  EdgeSet s;
  s.indices_.resize(edge_count);
  std::iota(s.indices_.begin(), s.indices_.end(), EdgeId{0});
  return s;
}

bool EdgeSet::contains(EdgeId e) const {
  return std::binary_search(indices_.begin(), indices_.end(), e);
}

EdgeSet EdgeSet::without(EdgeId e) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), e);
  if (it == indices_.end() || *it != e) {
    throw Error(ErrorCode::kInvalidEdgeIndex, "edge not in set");
  }
  EdgeSet s;
  s.indices_.reserve(indices_.size() - 1);
  s.indices_.insert(s.indices_.end(), indices_.begin(), it);
  s.indices_.insert(s.indices_.end(), it + 1, indices_.end());
  return s;
}

WeightMap normalize_weights(const Graph& graph, std::span<const double> raw) {
  const std::size_t m = graph.edge_count();
  if (raw.size() != m) {
    throw Error(ErrorCode::kSizeMismatch, "expected one weight per edge");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!std::isfinite(raw[i]) || raw[i] < 0.0) {
      throw Error(ErrorCode::kInvalidWeight,
                  "weight of edge " + std::to_string(i) +
                      " must be finite and nonnegative");
    }
  }
  std::vector<EdgeId> order(m);
  std::iota(order.begin(), order.end(), EdgeId{0});
  std::sort(order.begin(), order.end(),
            [&](EdgeId a, EdgeId b) { return raw[a] < raw[b]; });
  std::vector<Level> rank(m);
  Level next = 0;
  for (std::size_t k = 0; k < m; ++k) {
    if (k > 0 && raw[order[k]] != raw[order[k - 1]]) ++next;
    rank[order[k]] = next;
  }
  return WeightMap(std::vector<double>(raw.begin(), raw.end()),
                   std::move(rank));
}

WeightMap WeightMap::from_levels(const Graph& graph, std::vector<Level> levels) {
  const std::size_t m = graph.edge_count();
  if (levels.size() != m) {
    throw Error(ErrorCode::kSizeMismatch, "expected one level per edge");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (levels[i] >= m) {
      throw Error(ErrorCode::kInvalidWeight,
                  "level of edge " + std::to_string(i) + " exceeds |E| - 1");
    }
  }
  std::vector<double> raw(levels.begin(), levels.end());
  return WeightMap(std::move(raw), std::move(levels));
}

WeightMap interpret_weights(const Graph& graph, std::span<const double> raw) {
  const std::size_t m = graph.edge_count();
  const bool levels = raw.size() == m && std::all_of(raw.begin(), raw.end(), [&](double w) {
    return w >= 0.0 && w < static_cast<double>(m) && std::floor(w) == w;
  });
  if (!levels) return normalize_weights(graph, raw);
  return WeightMap::from_levels(graph, std::vector<Level>(raw.begin(), raw.end()));
}

Partition Partition::from_labels(std::span<const std::uint32_t> labels) {
  Partition p;
  p.labels_.resize(labels.size());
  std::vector<std::uint32_t> remap;
  const std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
  for (std::size_t v = 0; v < labels.size(); ++v) {
    const std::uint32_t l = labels[v];
    if (l >= remap.size()) remap.resize(std::size_t{l} + 1, unset);
    if (remap[l] == unset) remap[l] = static_cast<std::uint32_t>(p.region_count_++);
    p.labels_[v] = remap[l];
  }
  return p;
}

Partition Partition::singletons(std::size_t vertex_count) {
  Partition p;
  p.labels_.resize(vertex_count);
  std::iota(p.labels_.begin(), p.labels_.end(), 0u);
  p.region_count_ = vertex_count;
  return p;
}

Partition Partition::whole(std::size_t vertex_count) {
  Partition p;
  p.labels_.assign(vertex_count, 0);
  p.region_count_ = vertex_count == 0 ? 0 : 1;
  return p;
}

DisjointSets::DisjointSets(std::size_t size)
    : parent_(size), rank_(size, 0), set_count_(size) {
  std::iota(parent_.begin(), parent_.end(), 0u);
}

std::uint32_t DisjointSets::find(std::uint32_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

std::uint32_t DisjointSets::unite(std::uint32_t a, std::uint32_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return kNoVertex;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  --set_count_;
  return a;
}

Partition connected_components(const Graph& graph, const EdgeSet& edge_subset) {
  if (!edge_subset.empty() && edge_subset.indices().back() >= graph.edge_count()) {
    throw Error(ErrorCode::kInvalidEdgeIndex, "edge subset exceeds host graph");
  }
  const std::size_t n = graph.vertex_count();
  DisjointSets sets(n);
  for (EdgeId e : edge_subset.indices()) {
    const Edge& edge = graph.edges()[e];
    sets.unite(edge.x, edge.y);
  }
  std::vector<std::uint32_t> labels(n);
  for (VertexId v = 0; v < n; ++v) labels[v] = sets.find(v);
  return Partition::from_labels(labels);
}

bool is_connected(const Graph& graph, const EdgeSet& edge_subset) {
  DisjointSets sets(graph.vertex_count());
  for (EdgeId e : edge_subset.indices()) {
    const Edge& edge = graph.edge(e);
    sets.unite(edge.x, edge.y);
  }
  return sets.set_count() == 1;
}

bool refines(const Partition& fine, const Partition& coarse) {
  if (fine.vertex_count() != coarse.vertex_count()) {
    throw Error(ErrorCode::kSizeMismatch, "partitions over different vertex sets");
  }
  const std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> image(fine.region_count(), unset);
  for (VertexId v = 0; v < fine.vertex_count(); ++v) {
    auto& target = image[fine.region_of(v)];
    if (target == unset) {
      target = coarse.region_of(v);
    } else if (target != coarse.region_of(v)) {
      return false;
    }
  }
  return true;
}

EdgeSet cut(const Partition& partition, const Graph& graph) {
  if (partition.vertex_count() != graph.vertex_count()) {
    throw Error(ErrorCode::kSizeMismatch, "partition does not match graph");
  }
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    const Edge& edge = graph.edges()[e];
    if (partition.region_of(edge.x) != partition.region_of(edge.y)) out.push_back(e);
  }
  return EdgeSet(graph.edge_count(), std::move(out));
}

}  // namespace qfz
