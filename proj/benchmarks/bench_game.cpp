#include <benchmark/benchmark.h>

#include "majority/engine.hpp"
#include "majority/generators.hpp"

using namespace majority;

namespace {

template <Scalar T>
BasicDigraph<T> game_graph(int n, bool directed) {
  Rng rng(100 + n);
  RandomGraphOptions o;
  o.n = n;
  o.edge_probability = 0.4;
  return directed ? random_multi_component<T>(rng, o) : random_undirected<T>(rng, o);
}

template <Scalar T>
void BM_UndirectedGame(benchmark::State& state) {
  auto g = game_graph<T>(static_cast<int>(state.range(0)), false);
  const std::vector<T> lambda(g.num_vertices(), T(1));
  for (auto _ : state) {
    GreedyLister<T> lister;
    UndirectedPainter<T> painter{UndirectedView<T>(g)};
    benchmark::DoNotOptimize(play_game(g, lambda, lister, painter));
  }
}

template <Scalar T>
void BM_DirectedGame(benchmark::State& state) {
  auto g = game_graph<T>(static_cast<int>(state.range(0)), true);
  const std::vector<T> lambda(g.num_vertices(), T(2));
  for (auto _ : state) {
    RandomListerOptions o;
    RandomLister<T> lister(o);
    GeneralPainter<T> painter(g);
    benchmark::DoNotOptimize(play_game(g, lambda, lister, painter));
  }
}

void BM_GeneralPainterSetup(benchmark::State& state) {
  auto g = game_graph<double>(static_cast<int>(state.range(0)), true);
  for (auto _ : state) benchmark::DoNotOptimize(GeneralPainter<double>(g));
}

}  // namespace

BENCHMARK_TEMPLATE(BM_UndirectedGame, double)->DenseRange(4, 16, 4);
BENCHMARK_TEMPLATE(BM_UndirectedGame, Rational)->DenseRange(4, 12, 4);
BENCHMARK_TEMPLATE(BM_DirectedGame, double)->DenseRange(4, 16, 4);
BENCHMARK_TEMPLATE(BM_DirectedGame, Rational)->DenseRange(4, 12, 4);
BENCHMARK(BM_GeneralPainterSetup)->RangeMultiplier(2)->Range(8, 64);
