#include <doctest.h>

#include "qfz/hierarchy.hpp"
#include "qfz/oracle.hpp"
#include "support/random_graphs.hpp"

using namespace qfz;

namespace {

Partition labels(std::vector<std::uint32_t> l) { return Partition::from_labels(l); }

std::vector<NodeId> kids(const Dendrogram& d, NodeId n) {
  return {d.children(n).begin(), d.children(n).end()};
}

}  // namespace

TEST_CASE("level_partition on the triangle fixture") {
  const auto f = oracle::triangle_fixture();
  const auto w = f.weights();
  // Oracle first: BFS over edges with rank < lambda.
  const auto naive = oracle::qfz_naive(f.graph, w);
  REQUIRE(naive[1] == labels({0, 0, 1}));
  REQUIRE(naive[3] == Partition::whole(3));

  CHECK(level_partition(f.graph, w, 0) == Partition::singletons(3));
  CHECK(level_partition(f.graph, w, 1) == labels({0, 0, 1}));
  CHECK(level_partition(f.graph, w, 3) == Partition::whole(3));
  CHECK_THROWS_AS(level_partition(f.graph, w, 4), Error);
  // Restricting to edge 12 only.
  CHECK(level_partition(f.graph, w, 3, EdgeSet(3, {1})) == labels({0, 1, 1}));
}

TEST_CASE("quasi_flat_zones on the single edge") {
  const auto f = oracle::single_edge_fixture();
  const Dendrogram d = quasi_flat_zones(f.graph, f.weights());
  CHECK(d.internal_count() == 1);
  CHECK(d.level(d.root()) == 1);
  CHECK(kids(d, d.root()) == std::vector<NodeId>{0, 1});
  CHECK(partition_at(d, 0) == Partition::singletons(2));
  CHECK(partition_at(d, 1) == Partition::whole(2));
}

TEST_CASE("quasi_flat_zones on the path fixture") {
  const auto f = oracle::path_fixture();
  const auto naive = oracle::qfz_naive(f.graph, f.weights());
  REQUIRE(naive == std::vector<Partition>{Partition::singletons(3), labels({0, 0, 1}),
                                          Partition::whole(3)});
  const Dendrogram d = quasi_flat_zones(f.graph, f.weights());
  REQUIRE(d.node_count() == 5);
  // Node 3 = {0,1} at level 1, root 4 at level 2 with children node 3 and leaf 2.
  CHECK(d.level(3) == 1);
  CHECK(kids(d, 3) == std::vector<NodeId>{0, 1});
  CHECK(d.level(4) == 2);
  CHECK(kids(d, 4) == std::vector<NodeId>{3, 2});
}

TEST_CASE("quasi_flat_zones on the four-cycle fixture") {
  const auto f = oracle::four_cycle_fixture();
  const auto naive = oracle::qfz_naive(f.graph, f.weights());
  REQUIRE(naive[1] == labels({0, 0, 1, 1}));
  REQUIRE(naive[2] == labels({0, 0, 1, 1}));
  REQUIRE(naive[3] == Partition::whole(4));

  const Dendrogram d = quasi_flat_zones(f.graph, f.weights());
  REQUIRE(d.internal_count() == 3);
  CHECK(d.level(4) == 1);
  CHECK(kids(d, 4) == std::vector<NodeId>{0, 1});
  CHECK(d.level(5) == 1);
  CHECK(kids(d, 5) == std::vector<NodeId>{2, 3});
  CHECK(d.level(6) == 3);
  CHECK(d.root() == 6);
  CHECK(partition_at(d, 2) == labels({0, 0, 1, 1}));
  CHECK(partition_at(d, 0) == Partition::singletons(4));
  CHECK(partition_at(d, 4) == Partition::whole(4));
  CHECK_THROWS_AS(partition_at(d, 5), Error);
}

TEST_CASE("quasi_flat_zones collapses equal-level merges") {
  // Star with all weights 0: one node of arity 4.
  const Graph g = Graph::validated(4, {{0, 1}, {0, 2}, {0, 3}});
  const Dendrogram d = quasi_flat_zones(g, WeightMap::from_levels(g, {0, 0, 0}));
  CHECK(d.internal_count() == 1);
  CHECK(kids(d, d.root()) == std::vector<NodeId>{0, 1, 2, 3});
}

TEST_CASE("quasi_flat_zones rejects disconnected subgraphs") {
  const auto f = oracle::triangle_fixture();
  try {
    quasi_flat_zones(f.graph, f.weights(), EdgeSet(3, {0}));
    FAIL("expected disconnection error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDisconnected);
  }
  // level_partition stays defined on the same subgraph.
  CHECK(level_partition(f.graph, f.weights(), 3, EdgeSet(3, {0})).region_count() == 2);
}

TEST_CASE("hierarchy_equal") {
  const auto f = oracle::four_cycle_fixture();
  const Dendrogram d = quasi_flat_zones(f.graph, f.weights());
  CHECK(hierarchy_equal(d, d));
  std::vector<double> doubled(f.raw);
  for (auto& w : doubled) w *= 2;
  CHECK(hierarchy_equal(quasi_flat_zones(f.graph, normalize_weights(f.graph, doubled)),
                        quasi_flat_zones(f.graph, normalize_weights(f.graph, f.raw))));
  const auto path = oracle::path_fixture();
  const auto edge = oracle::single_edge_fixture();
  CHECK_THROWS_AS(hierarchy_equal(quasi_flat_zones(path.graph, path.weights()),
                                  quasi_flat_zones(edge.graph, edge.weights())),
                  Error);
}

TEST_CASE("Dendrogram::canonical removes unary and same-level chains") {
  // leaves 0,1,2; node 3 unary over 0 (level 1); node 4 = {3,1} level 2;
  // node 5 = {4} level 2 (same-level unary); node 6 = {5, 2} level 4.
  const std::vector<NodeId> parent{3, 4, 6, 4, 5, 6, kNoNode};
  const std::vector<Level> level{0, 0, 0, 1, 2, 2, 4};
  const Dendrogram d = Dendrogram::canonical(3, parent, level, 4);
  REQUIRE(d.internal_count() == 2);
  CHECK(d.level(3) == 2);
  CHECK(kids(d, 3) == std::vector<NodeId>{0, 1});
  CHECK(d.level(4) == 4);
  CHECK(kids(d, 4) == std::vector<NodeId>{3, 2});

  CHECK_THROWS_AS(Dendrogram::canonical(2, std::vector<NodeId>{2, 2, kNoNode},
                                        std::vector<Level>{0, 1, 1}, 1),
                  Error);  // leaf with level 1
  CHECK_THROWS_AS(Dendrogram::canonical(2, std::vector<NodeId>{kNoNode, kNoNode},
                                        std::vector<Level>{0, 0}, 1),
                  Error);  // two roots
}

TEST_CASE("dendrogram_from_partitions inverts partition_at") {
  const auto f = oracle::four_cycle_fixture();
  const Dendrogram d = quasi_flat_zones(f.graph, f.weights());
  const auto parts = HierarchyView(d).partitions();
  CHECK(parts.size() == 5);
  CHECK(dendrogram_from_partitions(parts) == d);
  const std::vector<Partition> broken{Partition::singletons(3), labels({0, 0, 1}),
                                      labels({0, 1, 1}), Partition::whole(3)};
  CHECK_THROWS_AS(dendrogram_from_partitions(broken), Error);
}

TEST_CASE("property: nesting, completeness and oracle equivalence") {
  testing::Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const Graph g = testing::random_connected_graph(rng, n, 0.4);
    const auto w = normalize_weights(g, testing::random_raw_weights(rng, g.edge_count()));
    const Dendrogram d = quasi_flat_zones(g, w);
    const auto naive = oracle::qfz_naive(g, w);
    const auto m = static_cast<Level>(g.edge_count());
    CHECK(partition_at(d, 0) == Partition::singletons(n));
    CHECK(partition_at(d, m) == Partition::whole(n));
    for (Level lambda = 0; lambda <= m; ++lambda) {
      const auto p = partition_at(d, lambda);
      CHECK(p == naive[lambda]);
      CHECK(p == level_partition(g, w, lambda));
      if (lambda > 0) CHECK(refines(partition_at(d, lambda - 1), p));
    }
    // Canonical-form soundness.
    CHECK(dendrogram_from_partitions(HierarchyView(d).partitions()) == d);
    // Structure invariants.
    for (NodeId v = static_cast<NodeId>(n); v < d.node_count(); ++v) {
      const auto c = d.children(v);
      CHECK(c.size() >= 2);
      for (std::size_t k = 0; k < c.size(); ++k) {
        CHECK(d.level(c[k]) < d.level(v));
        CHECK(d.parent(c[k]) == v);
        if (k > 0) CHECK(d.min_leaf(c[k - 1]) < d.min_leaf(c[k]));
      }
    }
  }
}

TEST_CASE("property: hierarchy depends only on weight order") {
  testing::Rng rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_connected_graph(rng, 2 + rng() % 14, 0.3);
    const auto raw = testing::random_raw_weights(rng, g.edge_count());
    std::vector<double> transformed(raw);
    for (auto& x : transformed) x = std::exp(x / 4.0) + 3.0;  // strictly increasing
    const Dendrogram base = quasi_flat_zones(g, normalize_weights(g, raw));
    CHECK(hierarchy_equal(base, quasi_flat_zones(g, normalize_weights(g, transformed))));
    const auto w = normalize_weights(g, raw);
    const std::vector<double> ranks(w.rank().begin(), w.rank().end());
    CHECK(hierarchy_equal(base, quasi_flat_zones(g, normalize_weights(g, ranks))));
  }
}
