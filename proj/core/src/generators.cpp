#include "majority/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace majority {

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

namespace {

template <Scalar T>
T random_weight(Rng& rng, const RandomGraphOptions& options) {
  return from_ratio<T>(uniform_int(rng, options.min_weight, options.max_weight));
}

}  // namespace

template <Scalar T>
BasicDigraph<T> complete_graph(int k) {
  std::vector<Edge<T>> edges;
  for (int v = 0; v < k; ++v) {
    for (int w = 0; w < k; ++w) {
      if (v != w) edges.push_back({v, w, T(1)});
    }
  }
  return BasicDigraph<T>(k, std::move(edges));
}

template <Scalar T>
BasicDigraph<T> directed_cycle(int n) {
  std::vector<Edge<T>> edges;
  if (n >= 2) {
    for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n, T(1)});
  }
  return BasicDigraph<T>(n, std::move(edges));
}

template <Scalar T>
BasicDigraph<T> regular_tournament(int k) {
  const int n = 2 * k - 1;
  std::vector<Edge<T>> edges;
  for (int v = 0; v < n; ++v) {
    for (int step = 1; step <= k - 1; ++step) edges.push_back({v, (v + step) % n, T(1)});
  }
  return BasicDigraph<T>(n, std::move(edges));
}

template <Scalar T>
BasicDigraph<T> random_undirected(Rng& rng, const RandomGraphOptions& options) {
  std::vector<Edge<T>> edges;
  for (int v = 0; v < options.n; ++v) {
    for (int w = v + 1; w < options.n; ++w) {
      if (coin(rng, options.edge_probability)) {
        edges.push_back({v, w, random_weight<T>(rng, options)});
      }
    }
  }
  return build_undirected<T>(options.n, edges);
}

template <Scalar T>
BasicDigraph<T> random_digraph(Rng& rng, const RandomGraphOptions& options) {
  std::vector<Edge<T>> edges;
  for (int v = 0; v < options.n; ++v) {
    for (int w = 0; w < options.n; ++w) {
      if (v != w && coin(rng, options.edge_probability)) {
        edges.push_back({v, w, random_weight<T>(rng, options)});
      }
    }
  }
  return BasicDigraph<T>(options.n, std::move(edges));
}

namespace {

// Strongly connected block on `members` plus random extra edges among them.
template <Scalar T>
void add_strong_block(Rng& rng, const RandomGraphOptions& options, std::vector<int> members,
                      std::set<std::pair<int, int>>& used, std::vector<Edge<T>>& edges) {
  std::shuffle(members.begin(), members.end(), rng);
  const auto m = members.size();
  if (m >= 2) {
    for (std::size_t i = 0; i < m; ++i) {
      int a = members[i], b = members[(i + 1) % m];
      if (used.insert({a, b}).second) edges.push_back({a, b, random_weight<T>(rng, options)});
    }
  }
  for (int a : members) {
    for (int b : members) {
      if (a != b && !used.count({a, b}) && coin(rng, options.edge_probability)) {
        used.insert({a, b});
        edges.push_back({a, b, random_weight<T>(rng, options)});
      }
    }
  }
}

}  // namespace

template <Scalar T>
BasicDigraph<T> random_strongly_connected(Rng& rng, const RandomGraphOptions& options) {
  std::vector<int> all(options.n);
  std::iota(all.begin(), all.end(), 0);
  std::set<std::pair<int, int>> used;
  std::vector<Edge<T>> edges;
  add_strong_block<T>(rng, options, all, used, edges);
  return BasicDigraph<T>(options.n, std::move(edges));
}

template <Scalar T>
BasicDigraph<T> random_multi_component(Rng& rng, const RandomGraphOptions& options) {
  const int n = options.n;
  if (n < 2) return random_digraph<T>(rng, options);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const int blocks = uniform_int(rng, 2, n);
  // Cut points splitting `order` into `blocks` non-empty runs.
  std::vector<int> cuts(n - 1);
  std::iota(cuts.begin(), cuts.end(), 1);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(blocks - 1);
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(n);
  std::vector<int> block_of(n);
  std::set<std::pair<int, int>> used;
  std::vector<Edge<T>> edges;
  int start = 0;
  for (int b = 0; b < blocks; ++b) {
    std::vector<int> members(order.begin() + start, order.begin() + cuts[b]);
    for (int v : members) block_of[v] = b;
    add_strong_block<T>(rng, options, members, used, edges);
    start = cuts[b];
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (block_of[a] < block_of[b] && coin(rng, options.edge_probability)) {
        edges.push_back({a, b, random_weight<T>(rng, options)});
      }
    }
  }
  return BasicDigraph<T>(n, std::move(edges));
}

#define MAJORITY_INSTANTIATE_GENERATORS(T)                                                \
  template BasicDigraph<T> complete_graph<T>(int);                                        \
  template BasicDigraph<T> directed_cycle<T>(int);                                        \
  template BasicDigraph<T> regular_tournament<T>(int);                                    \
  template BasicDigraph<T> random_undirected<T>(Rng&, const RandomGraphOptions&);         \
  template BasicDigraph<T> random_digraph<T>(Rng&, const RandomGraphOptions&);            \
  template BasicDigraph<T> random_strongly_connected<T>(Rng&, const RandomGraphOptions&); \
  template BasicDigraph<T> random_multi_component<T>(Rng&, const RandomGraphOptions&);

MAJORITY_INSTANTIATE_GENERATORS(double)
MAJORITY_INSTANTIATE_GENERATORS(Rational)

}  // namespace majority
