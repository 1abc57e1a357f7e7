#pragma once

// Named graphs and the uniform random models used by the verification harness.
// Random weights are integers in [min_weight, max_weight].

#include <random>

#include "majority/graph.hpp"

namespace majority {

using Rng = std::mt19937_64;

// Undirected K_k with unit weights.
template <Scalar T>
BasicDigraph<T> complete_graph(int k);

// 0 -> 1 -> ... -> n-1 -> 0 with unit weights.
template <Scalar T>
BasicDigraph<T> directed_cycle(int n);

// Orientation of K_{2k-1} where v points to v+1, ..., v+k-1 (mod 2k-1); every
// out-degree is k-1.
template <Scalar T>
BasicDigraph<T> regular_tournament(int k);

struct RandomGraphOptions {
  int n = 8;
  double edge_probability = 0.4;
  int min_weight = 1;
  int max_weight = 10;
};

// Each unordered pair independently becomes an edge with a random weight.
template <Scalar T>
BasicDigraph<T> random_undirected(Rng& rng, const RandomGraphOptions& options);

// Each ordered pair independently becomes an edge.
template <Scalar T>
BasicDigraph<T> random_digraph(Rng& rng, const RandomGraphOptions& options);

// A random Hamiltonian cycle plus independent extra edges; strongly connected
// for n >= 2.
template <Scalar T>
BasicDigraph<T> random_strongly_connected(Rng& rng, const RandomGraphOptions& options);

// Random digraph with at least two strongly connected components (n >= 2):
// vertices are split into blocks, each block strongly connected, with extra
// edges only from earlier to later blocks.
template <Scalar T>
BasicDigraph<T> random_multi_component(Rng& rng, const RandomGraphOptions& options);

int uniform_int(Rng& rng, int lo, int hi);
bool coin(Rng& rng, double p);

}  // namespace majority
