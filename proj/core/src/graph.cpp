#include "majority/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

namespace majority {

SinkVertexError::SinkVertexError(int vertex)
    : GraphError("vertex " + std::to_string(vertex) + " has no outgoing edges"),
      vertex_(vertex) {}

template <Scalar T>
BasicDigraph<T>::BasicDigraph(int n, std::vector<Edge<T>> edges) : n_(n) {
  if (n < 0) throw GraphError("vertex count must be non-negative");
  for (const auto& e : edges) {
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n) {
      throw GraphError("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                       " has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (e.from == e.to) {
      throw GraphError("self-loop at vertex " + std::to_string(e.from));
    }
    if (!is_finite(e.weight) || !(e.weight > T(0))) {
      throw GraphError("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                       " has non-positive or non-finite weight " +
                       format_scalar(e.weight));
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge<T>& a, const Edge<T>& b) {
    return std::pair(a.from, a.to) < std::pair(b.from, b.to);
  });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].from == edges[i - 1].from && edges[i].to == edges[i - 1].to) {
      throw GraphError("duplicate edge " + std::to_string(edges[i].from) + "->" +
                       std::to_string(edges[i].to));
    }
  }
  edges_ = std::move(edges);
  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& e : edges_) ++offsets_[static_cast<std::size_t>(e.from) + 1];
  for (int v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
  arcs_.reserve(edges_.size());
  for (const auto& e : edges_) arcs_.push_back({e.to, e.weight});
}

template <Scalar T>
std::span<const Arc<T>> BasicDigraph<T>::out_arcs(int v) const {
  return std::span<const Arc<T>>(arcs_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]);
}

template <Scalar T>
std::optional<T> BasicDigraph<T>::weight(int from, int to) const {
  auto arcs = out_arcs(from);
  auto it = std::lower_bound(arcs.begin(), arcs.end(), to,
                             [](const Arc<T>& a, int target) { return a.to < target; });
  if (it == arcs.end() || it->to != to) return std::nullopt;
  return it->weight;
}

template <Scalar T>
BasicDigraph<T> build_undirected(int n, const std::vector<Edge<T>>& edges) {
  std::vector<Edge<T>> both;
  both.reserve(edges.size() * 2);
  for (const auto& e : edges) {
    both.push_back(e);
    both.push_back({e.to, e.from, e.weight});
  }
  return BasicDigraph<T>(n, std::move(both));
}

template <Scalar T>
T out_weight(const BasicDigraph<T>& g, int v) {
  T total(0);
  for (const auto& arc : g.out_arcs(v)) total += arc.weight;
  return total;
}

template <Scalar T>
T weight_into(const BasicDigraph<T>& g, int v, const std::vector<char>& mask) {
  T total(0);
  for (const auto& arc : g.out_arcs(v)) {
    if (mask[arc.to]) total += arc.weight;
  }
  return total;
}

template <Scalar T>
bool is_symmetric(const BasicDigraph<T>& g) {
  for (const auto& e : g.edges()) {
    auto back = g.weight(e.to, e.from);
    if (!back || *back != e.weight) return false;
  }
  return true;
}

template <Scalar T>
BasicDigraph<T> normalize_out_weights(const BasicDigraph<T>& g) {
  std::vector<T> totals(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    totals[v] = out_weight(g, v);
    if (g.out_arcs(v).empty()) throw SinkVertexError(v);
  }
  std::vector<Edge<T>> edges;
  edges.reserve(g.num_edges());
  for (const auto& e : g.edges()) {
    edges.push_back({e.from, e.to, T(e.weight / totals[e.from])});
  }
  return BasicDigraph<T>(g.num_vertices(), std::move(edges));
}

template <Scalar T>
UndirectedView<T>::UndirectedView(BasicDigraph<T> g) : graph_(std::move(g)) {
  if (!is_symmetric(graph_)) throw GraphError("graph is not symmetric");
}

template <Scalar T>
Condensation condensation(const BasicDigraph<T>& g) {
  const int n = g.num_vertices();
  // Iterative Tarjan.
  std::vector<int> index(n, -1), low(n, 0), scc_id(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  std::vector<std::pair<int, std::size_t>> call;  // (vertex, next arc position)
  int next_index = 0;
  int num_scc = 0;
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      auto arcs = g.out_arcs(v);
      if (pos < arcs.size()) {
        int w = arcs[pos++].to;
        if (index[w] < 0) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          scc_id[w] = num_scc;
        } while (w != v);
        ++num_scc;
      }
      int finished = v;
      call.pop_back();
      if (!call.empty()) {
        int parent = call.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }

  std::vector<VertexSet> members(num_scc);
  for (int v = 0; v < n; ++v) members[scc_id[v]].push_back(v);
  std::vector<std::vector<int>> succ(num_scc);
  std::vector<int> indegree(num_scc, 0);
  for (const auto& e : g.edges()) {
    int a = scc_id[e.from], b = scc_id[e.to];
    if (a != b) succ[a].push_back(b);
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int b : s) ++indegree[b];
  }
  // Kahn's algorithm keyed by the smallest member vertex.
  using Item = std::pair<int, int>;  // (min vertex, scc id)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
  for (int c = 0; c < num_scc; ++c) {
    if (indegree[c] == 0) ready.push({members[c].front(), c});
  }
  Condensation result;
  result.component_of.assign(n, -1);
  while (!ready.empty()) {
    int c = ready.top().second;
    ready.pop();
    int position = static_cast<int>(result.components.size());
    for (int v : members[c]) result.component_of[v] = position;
    result.components.push_back(members[c]);
    for (int b : succ[c]) {
      if (--indegree[b] == 0) ready.push({members[b].front(), b});
    }
  }
  return result;
}

template <Scalar T>
InducedSubgraph<T> induced_subgraph(const BasicDigraph<T>& g, const VertexSet& subset) {
  InducedSubgraph<T> result;
  result.to_local.assign(g.num_vertices(), -1);
  for (int v : subset) {
    if (v < 0 || v >= g.num_vertices()) {
      throw GraphError("induced_subgraph: vertex " + std::to_string(v) + " out of range");
    }
    if (result.to_local[v] >= 0) continue;
    result.to_local[v] = 0;
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (result.to_local[v] >= 0) {
      result.to_local[v] = static_cast<int>(result.to_original.size());
      result.to_original.push_back(v);
    }
  }
  std::vector<Edge<T>> edges;
  for (const auto& e : g.edges()) {
    int a = result.to_local[e.from], b = result.to_local[e.to];
    if (a >= 0 && b >= 0) edges.push_back({a, b, e.weight});
  }
  result.graph = BasicDigraph<T>(static_cast<int>(result.to_original.size()), std::move(edges));
  return result;
}

VertexSet make_vertex_set(std::vector<int> vertices, int n) {
  for (int v : vertices) {
    if (v < 0 || v >= n) {
      throw GraphError("vertex " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
    }
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

#define MAJORITY_INSTANTIATE_GRAPH(T)                                                   \
  template class BasicDigraph<T>;                                                       \
  template class UndirectedView<T>;                                                     \
  template BasicDigraph<T> build_undirected<T>(int, const std::vector<Edge<T>>&);       \
  template T out_weight<T>(const BasicDigraph<T>&, int);                                \
  template T weight_into<T>(const BasicDigraph<T>&, int, const std::vector<char>&);     \
  template bool is_symmetric<T>(const BasicDigraph<T>&);                                \
  template BasicDigraph<T> normalize_out_weights<T>(const BasicDigraph<T>&);            \
  template Condensation condensation<T>(const BasicDigraph<T>&);                        \
  template InducedSubgraph<T> induced_subgraph<T>(const BasicDigraph<T>&, const VertexSet&);

MAJORITY_INSTANTIATE_GRAPH(double)
MAJORITY_INSTANTIATE_GRAPH(Rational)

}  // namespace majority
