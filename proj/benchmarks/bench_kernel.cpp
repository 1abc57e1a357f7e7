#include <benchmark/benchmark.h>

#include <numeric>

#include "majority/generators.hpp"
#include "majority/kernel.hpp"
#include "majority/spectral.hpp"

using namespace majority;

namespace {

template <Scalar T>
struct KernelInput {
  BasicDigraph<T> g;
  VertexSet x;
  RankFunction<T> rank;
};

template <Scalar T>
KernelInput<T> kernel_input(int n) {
  Rng rng(n);
  RandomGraphOptions o;
  o.n = n;
  o.edge_probability = 0.5;
  KernelInput<T> in{random_undirected<T>(rng, o), {}, {}};
  in.x.resize(n);
  std::iota(in.x.begin(), in.x.end(), 0);
  for (int v = 0; v < n; ++v) in.rank.emplace(v, from_ratio<T>(uniform_int(rng, 0, 40), 4));
  return in;
}

template <Scalar T>
void BM_SelectKernel(benchmark::State& state) {
  auto in = kernel_input<T>(static_cast<int>(state.range(0)));
  UndirectedView<T> view(in.g);
  for (auto _ : state) benchmark::DoNotOptimize(select_kernel(view, in.x, in.rank));
}

template <Scalar T>
void BM_LocalSearchKernel(benchmark::State& state) {
  auto in = kernel_input<T>(static_cast<int>(state.range(0)));
  UndirectedView<T> view(in.g);
  for (auto _ : state) benchmark::DoNotOptimize(local_search_kernel(view, in.x, in.rank));
}

void BM_LeftEigenvector(benchmark::State& state) {
  Rng rng(7);
  RandomGraphOptions o;
  o.n = static_cast<int>(state.range(0));
  auto g = normalize_out_weights(random_strongly_connected<double>(rng, o));
  for (auto _ : state) benchmark::DoNotOptimize(left_eigenvector(g));
}

}  // namespace

BENCHMARK_TEMPLATE(BM_SelectKernel, double)->DenseRange(8, 20, 4);
BENCHMARK_TEMPLATE(BM_SelectKernel, Rational)->DenseRange(8, 16, 4);
BENCHMARK_TEMPLATE(BM_LocalSearchKernel, double)->RangeMultiplier(2)->Range(16, 256);
BENCHMARK_TEMPLATE(BM_LocalSearchKernel, Rational)->RangeMultiplier(2)->Range(16, 64);
BENCHMARK(BM_LeftEigenvector)->RangeMultiplier(2)->Range(8, 128);
