#include <benchmark/benchmark.h>

#include "qfz/lca.hpp"
#include "qfz/pixel_io.hpp"
#include "qfz/saliency.hpp"
#include "support/random_graphs.hpp"

using namespace qfz;

namespace {

PixelGraph grid(std::size_t side) {
  testing::Rng rng(side);
  return image_to_graph(testing::random_image(rng, side, side), 4);
}

void BM_QuasiFlatZones(benchmark::State& state) {
  const PixelGraph pg = grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(quasi_flat_zones(pg.graph, pg.weights));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pg.graph.edge_count()));
}
BENCHMARK(BM_QuasiFlatZones)->RangeMultiplier(2)->Range(128, 1024)->Unit(benchmark::kMillisecond);

// End to end: rank normalization, hierarchy, LCA index and one query per edge.
void BM_PsiGrid(benchmark::State& state) {
  const PixelGraph pg = grid(static_cast<std::size_t>(state.range(0)));
  const std::vector<double> raw(pg.weights.raw().begin(), pg.weights.raw().end());
  for (auto _ : state) benchmark::DoNotOptimize(psi(pg.graph, normalize_weights(pg.graph, raw)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pg.graph.vertex_count()));
}
BENCHMARK(BM_PsiGrid)->Arg(512)->Arg(1024)->Arg(2048)->Unit(benchmark::kMillisecond);

void BM_LcaBuild(benchmark::State& state) {
  testing::Rng rng(3);
  const Dendrogram d = testing::random_dendrogram(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(LcaIndex(d));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(d.node_count()));
}
BENCHMARK(BM_LcaBuild)->RangeMultiplier(10)->Range(1000, 1000000);

// Uniformly random leaf pairs, so large indexes pay full memory latency.
void BM_LcaRandomQuery(benchmark::State& state) {
  testing::Rng rng(4);
  const auto leaves = static_cast<std::size_t>(state.range(0));
  const Dendrogram d = testing::random_dendrogram(rng, leaves);
  const LcaIndex index(d);
  std::vector<std::pair<NodeId, NodeId>> queries(1 << 20);
  for (auto& [a, b] : queries) {
    a = static_cast<NodeId>(rng() % leaves);
    b = static_cast<NodeId>(rng() % leaves);
  }
  std::size_t q = 0;
  for (auto _ : state) {
    const auto& [a, b] = queries[q++ & ((1 << 20) - 1)];
    benchmark::DoNotOptimize(index.lca(a, b));
  }
  state.counters["nodes"] = static_cast<double>(d.node_count());
}
BENCHMARK(BM_LcaRandomQuery)->RangeMultiplier(10)->Range(1000, 1000000);

// Neighbouring leaves, the access pattern of saliency on a pixel grid.
void BM_LcaLocalQuery(benchmark::State& state) {
  testing::Rng rng(5);
  const auto leaves = static_cast<std::size_t>(state.range(0));
  const Dendrogram d = testing::random_dendrogram(rng, leaves);
  const LcaIndex index(d);
  NodeId a = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(index.lca(a, a + 1 == leaves ? 0 : a + 1));
    a = a + 1 == leaves ? 0 : a + 1;
  }
  state.counters["nodes"] = static_cast<double>(d.node_count());
}
BENCHMARK(BM_LcaLocalQuery)->RangeMultiplier(10)->Range(1000, 1000000);

}  // namespace
BENCHMARK_MAIN();
