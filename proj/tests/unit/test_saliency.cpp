#include <doctest.h>

#include "qfz/oracle.hpp"
#include "qfz/saliency.hpp"
#include "support/random_graphs.hpp"

using namespace qfz;

namespace {

std::vector<Level> values(const SaliencyMap& s) { return {s.values().begin(), s.values().end()}; }

std::vector<Level> naive_psi(const Graph& g, const WeightMap& w) {
  return oracle::saliency_naive(g, oracle::qfz_naive(g, w));
}

bool leq(std::span<const Level> a, std::span<const Level> b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](Level x, Level y) { return x <= y; });
}

}  // namespace

TEST_CASE("saliency_of_hierarchy on the fixtures") {
  const auto edge = oracle::single_edge_fixture();
  CHECK(values(saliency_of_hierarchy(quasi_flat_zones(edge.graph, edge.weights()), edge.graph)) ==
        std::vector<Level>{0});

  const auto path = oracle::path_fixture();
  REQUIRE(naive_psi(path.graph, path.weights()) == std::vector<Level>{0, 1});
  CHECK(values(saliency_of_hierarchy(quasi_flat_zones(path.graph, path.weights()), path.graph)) ==
        std::vector<Level>{0, 1});

  const auto cycle = oracle::four_cycle_fixture();
  REQUIRE(naive_psi(cycle.graph, cycle.weights()) == std::vector<Level>{0, 2, 0, 2});
  CHECK(values(saliency_of_hierarchy(quasi_flat_zones(cycle.graph, cycle.weights()),
                                     cycle.graph)) == std::vector<Level>{0, 2, 0, 2});

  CHECK_THROWS_AS(saliency_of_hierarchy(quasi_flat_zones(edge.graph, edge.weights()), path.graph),
                  Error);
}

TEST_CASE("psi on the fixtures") {
  const auto tri = oracle::triangle_fixture();
  REQUIRE(naive_psi(tri.graph, tri.weights()) == std::vector<Level>{0, 1, 1});
  CHECK(values(psi(tri.graph, tri.weights())) == std::vector<Level>{0, 1, 1});

  const auto cycle = oracle::four_cycle_fixture();
  const SaliencyMap s = psi(cycle.graph, cycle.weights());
  CHECK(values(s) == std::vector<Level>{0, 2, 0, 2});
  CHECK(psi(cycle.graph, s.as_weights(cycle.graph)) == s);
}

TEST_CASE("is_saliency_map") {
  const auto path = oracle::path_fixture();
  REQUIRE(naive_psi(path.graph, path.weights()) == std::vector<Level>{0, 1});
  CHECK(is_saliency_map(path.graph, path.weights()));
  const auto tri = oracle::triangle_fixture();
  CHECK_FALSE(is_saliency_map(tri.graph, tri.weights()));
  const auto edge = oracle::single_edge_fixture();
  CHECK(is_saliency_map(edge.graph, edge.weights()));
  // Raw weights are judged through their ranks.
  const auto cycle = oracle::four_cycle_fixture();
  CHECK(is_saliency_map(cycle.graph, normalize_weights(cycle.graph, std::vector<double>{1.5, 7, 1.5, 7})));
}

TEST_CASE("raw_values re-expresses ranks through the original weights") {
  const auto tri = oracle::triangle_fixture();
  const auto w = normalize_weights(tri.graph, std::vector<double>{0.5, 4.0, 9.0});
  const SaliencyMap s = psi(tri.graph, w);
  CHECK(s.raw_values(w) == std::vector<double>{0.5, 4.0, 4.0});
}

TEST_CASE("property: bijection, opening and cut-scan agreement") {
  testing::Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const Graph g = testing::random_connected_graph(rng, n, 0.45);
    const auto w = (trial % 2 == 0)
                       ? normalize_weights(g, testing::random_raw_weights(rng, g.edge_count()))
                       : WeightMap::from_levels(g, testing::random_levels(rng, g.edge_count()));
    const Dendrogram h = quasi_flat_zones(g, w);
    const SaliencyMap s = psi(g, w);
    const WeightMap sw = s.as_weights(g);

    CHECK(values(s) == naive_psi(g, w));
    CHECK(hierarchy_equal(quasi_flat_zones(g, sw), h));
    CHECK(psi(g, sw) == s);
    CHECK(is_saliency_map(g, sw));
    CHECK(leq(s.values(), w.rank()));

    // Comparable pair w' <= w.
    std::vector<Level> lower(w.rank().begin(), w.rank().end());
    for (auto& x : lower) x = x == 0 ? 0 : static_cast<Level>(rng() % (x + 1));
    CHECK(leq(psi(g, WeightMap::from_levels(g, lower)).values(), s.values()));

    // Saliency of an arbitrary hierarchy built from its partitions.
    CHECK(saliency_of_hierarchy(dendrogram_from_partitions(oracle::qfz_naive(g, w)), g) == s);
  }
}

TEST_CASE("property: unit decrements of a saliency map change the hierarchy") {
  testing::Rng rng(42);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = testing::random_connected_graph(rng, 2 + rng() % 9, 0.4);
    const auto w = normalize_weights(g, testing::random_raw_weights(rng, g.edge_count()));
    const SaliencyMap s = psi(g, w);
    const Dendrogram h = quasi_flat_zones(g, s.as_weights(g));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (s[e] == 0) continue;
      std::vector<Level> lowered(s.values().begin(), s.values().end());
      --lowered[e];
      CHECK_FALSE(hierarchy_equal(quasi_flat_zones(g, WeightMap::from_levels(g, lowered)), h));
    }
  }
}
