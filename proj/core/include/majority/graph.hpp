#pragma once

// Positively-edge-weighted simple digraphs. Undirected graphs are symmetric
// digraphs wrapped in UndirectedView.

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "majority/numeric.hpp"

namespace majority {

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<int>;

// Per-vertex values (tolerances, ranks) on an explicit domain.
template <Scalar T>
using VertexMap = std::map<int, T>;

template <Scalar T>
struct Edge {
  int from = 0;
  int to = 0;
  T weight{};

  friend bool operator==(const Edge&, const Edge&) = default;
};

template <Scalar T>
struct Arc {
  int to = 0;
  T weight{};
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A vertex without outgoing edges where one is required.
class SinkVertexError : public GraphError {
 public:
  explicit SinkVertexError(int vertex);
  int vertex() const { return vertex_; }

 private:
  int vertex_;
};

template <Scalar T>
class BasicDigraph {
 public:
  BasicDigraph() = default;

  // Validates: weights positive and finite, no self-loops, no duplicate
  // ordered pair, endpoints in [0, n). Throws GraphError.
  BasicDigraph(int n, std::vector<Edge<T>> edges);

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  // Edges sorted by (from, to).
  const std::vector<Edge<T>>& edges() const { return edges_; }

  // Outgoing arcs of v sorted by target.
  std::span<const Arc<T>> out_arcs(int v) const;

  std::optional<T> weight(int from, int to) const;
  bool has_edge(int from, int to) const { return weight(from, to).has_value(); }

  friend bool operator==(const BasicDigraph& a, const BasicDigraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge<T>> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Arc<T>> arcs_;
};

using WeightedDigraph = BasicDigraph<double>;
using RationalDigraph = BasicDigraph<Rational>;

template <Scalar T>
BasicDigraph<T> build_digraph(int n, std::vector<Edge<T>> edges) {
  return BasicDigraph<T>(n, std::move(edges));
}

// Each {u, v, w} becomes the two directed edges u->v and v->u of weight w.
template <Scalar T>
BasicDigraph<T> build_undirected(int n, const std::vector<Edge<T>>& edges);

// Sum of outgoing weights; zero for a sink.
template <Scalar T>
T out_weight(const BasicDigraph<T>& g, int v);

// Sum of weights from v into the vertices flagged in `mask`.
template <Scalar T>
T weight_into(const BasicDigraph<T>& g, int v, const std::vector<char>& mask);

template <Scalar T>
bool is_symmetric(const BasicDigraph<T>& g);

// Rescales every vertex's outgoing weights to sum to one. Throws
// SinkVertexError naming the first vertex without outgoing edges.
template <Scalar T>
BasicDigraph<T> normalize_out_weights(const BasicDigraph<T>& g);

// A digraph known to satisfy w(vw) == w(wv) on every edge.
template <Scalar T>
class UndirectedView {
 public:
  // Throws GraphError if g is not symmetric.
  explicit UndirectedView(BasicDigraph<T> g);

  const BasicDigraph<T>& graph() const { return graph_; }
  int num_vertices() const { return graph_.num_vertices(); }

 private:
  BasicDigraph<T> graph_;
};

// Strongly connected components in a topological order of the component DAG.
// Among valid orders, the one that repeatedly emits the available component
// with the smallest vertex is chosen, so output is reproducible.
struct Condensation {
  std::vector<VertexSet> components;
  std::vector<int> component_of;

  std::size_t size() const { return components.size(); }
  bool strongly_connected() const { return components.size() <= 1; }
};

template <Scalar T>
Condensation condensation(const BasicDigraph<T>& g);

template <Scalar T>
struct InducedSubgraph {
  BasicDigraph<T> graph;
  // Local id -> original id, ascending.
  std::vector<int> to_original;
  // Original id -> local id, or -1 outside the subset.
  std::vector<int> to_local;
};

// D[W]: the vertices of W (relabelled in ascending order) with every edge
// whose endpoints both lie in W.
template <Scalar T>
InducedSubgraph<T> induced_subgraph(const BasicDigraph<T>& g, const VertexSet& subset);

// Converts weights between arithmetic modes. Rational -> double rounds.
template <Scalar To, Scalar From>
BasicDigraph<To> convert_graph(const BasicDigraph<From>& g) {
  std::vector<Edge<To>> edges;
  edges.reserve(g.num_edges());
  for (const auto& e : g.edges()) {
    if constexpr (std::same_as<To, From>) {
      edges.push_back({e.from, e.to, e.weight});
    } else if constexpr (kIsExact<To>) {
      edges.push_back({e.from, e.to, Rational(e.weight)});
    } else {
      edges.push_back({e.from, e.to, to_double(e.weight)});
    }
  }
  return BasicDigraph<To>(g.num_vertices(), std::move(edges));
}

// Sorts and deduplicates; throws GraphError on an id outside [0, n).
VertexSet make_vertex_set(std::vector<int> vertices, int n);

}  // namespace majority
