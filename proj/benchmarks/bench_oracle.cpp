#include <benchmark/benchmark.h>

#include "majority/generators.hpp"
#include "majority/oracle.hpp"

using namespace majority;

namespace {

void BM_SolveKappaCycle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto sym = static_cast<Symmetry>(state.range(1));
  auto g = directed_cycle<Rational>(n);
  const std::vector<Rational> tau(n, Rational(1, 2));
  const std::vector<int> kappa(n, 3);
  KappaSolveOptions o;
  o.symmetry = sym;
  o.record_strategy = false;
  for (auto _ : state) benchmark::DoNotOptimize(solve_kappa_game(g, tau, kappa, o));
}

void BM_ColorabilityComplete(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto g = complete_graph<Rational>(n);
  const std::vector<Rational> tau(n, Rational(1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(is_majority_colorable(g, tau, 2));
}

void BM_IsomorphismClasses(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(digraphs_up_to_isomorphism<double>(static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_SolveKappaCycle)
    ->ArgsProduct({{3, 4, 5}, {static_cast<int>(Symmetry::kNone), static_cast<int>(Symmetry::kCyclic)}})
    ->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ColorabilityComplete)->DenseRange(4, 10, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_IsomorphismClasses)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
