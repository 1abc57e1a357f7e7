#include "majority/spectral.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

namespace majority {

template <Scalar T>
StochasticMatrix<T>::StochasticMatrix(const BasicDigraph<T>& normalized, double row_tolerance)
    : n_(normalized.num_vertices()),
      entries_(static_cast<std::size_t>(n_) * n_, T(0)) {
  for (const auto& e : normalized.edges()) {
    entries_[static_cast<std::size_t>(e.from) * n_ + e.to] = e.weight;
  }
  for (int v = 0; v < n_; ++v) {
    T row = out_weight(normalized, v);
    bool ok;
    if constexpr (kIsExact<T>) {
      ok = row == T(1);
    } else {
      ok = std::abs(row - 1.0) <= row_tolerance;
    }
    if (!ok) {
      throw SpectralError("row " + std::to_string(v) + " sums to " + format_scalar(row) +
                          ", expected 1");
    }
  }
}

template <Scalar T>
LeftEigenvector<T> left_eigenvector(const BasicDigraph<T>& normalized, double tol) {
  const int n = normalized.num_vertices();
  if (n == 0) throw SpectralError("left_eigenvector: empty graph");
  if (!condensation(normalized).strongly_connected()) {
    throw SpectralError("left_eigenvector: graph is not strongly connected");
  }
  StochasticMatrix<T> t(normalized);

  // Augmented system A x = b, A = T^t - I with the last row set to all ones.
  const int cols = n + 1;
  std::vector<T> a(static_cast<std::size_t>(n) * cols, T(0));
  auto at = [&](int r, int c) -> T& { return a[static_cast<std::size_t>(r) * cols + c]; };
  for (int r = 0; r < n - 1; ++r) {
    for (int c = 0; c < n; ++c) at(r, c) = t(c, r);
    at(r, r) -= T(1);
  }
  for (int c = 0; c < n; ++c) at(n - 1, c) = T(1);
  at(n - 1, n) = T(1);

  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (abs_value(at(r, col)) > abs_value(at(pivot, col))) pivot = r;
    }
    if (at(pivot, col) == T(0)) throw SpectralError("left_eigenvector: singular system");
    if (pivot != col) {
      for (int c = 0; c < cols; ++c) std::swap(at(pivot, c), at(col, c));
    }
    for (int r = col + 1; r < n; ++r) {
      if (at(r, col) == T(0)) continue;
      T factor = at(r, col) / at(col, col);
      for (int c = col; c < cols; ++c) at(r, c) -= factor * at(col, c);
    }
  }
  LeftEigenvector<T> result;
  result.x.assign(n, T(0));
  for (int r = n - 1; r >= 0; --r) {
    T sum = at(r, n);
    for (int c = r + 1; c < n; ++c) sum -= at(r, c) * result.x[c];
    result.x[r] = sum / at(r, r);
  }

  double residual = 0.0;
  for (int v = 0; v < n; ++v) {
    T lhs(0);
    for (int w = 0; w < n; ++w) lhs += result.x[w] * t(w, v);
    residual = std::max(residual, to_double(abs_value(T(lhs - result.x[v]))));
  }
  result.residual = residual;
  for (int v = 0; v < n; ++v) {
    if (!(result.x[v] > T(0))) {
      throw SpectralError("left_eigenvector: non-positive entry at vertex " + std::to_string(v));
    }
  }
  if (residual > tol) {
    throw SpectralError("left_eigenvector: residual " + format_scalar(residual) +
                        " exceeds tolerance " + format_scalar(tol));
  }
  return result;
}

template <Scalar T>
UndirectedView<T> symmetrized_graph(const BasicDigraph<T>& normalized, const LeftEigenvector<T>& x) {
  if (static_cast<int>(x.x.size()) != normalized.num_vertices()) {
    throw SpectralError("symmetrized_graph: eigenvector size mismatch");
  }
  std::map<std::pair<int, int>, T> pair_weight;
  for (const auto& e : normalized.edges()) {
    auto key = std::minmax(e.from, e.to);
    auto [it, inserted] = pair_weight.try_emplace(key, T(0));
    it->second += x.x[e.from] * e.weight;
  }
  std::vector<Edge<T>> edges;
  edges.reserve(pair_weight.size() * 2);
  for (const auto& [key, w] : pair_weight) {
    edges.push_back({key.first, key.second, w});
    edges.push_back({key.second, key.first, w});
  }
  return UndirectedView<T>(BasicDigraph<T>(normalized.num_vertices(), std::move(edges)));
}

template <Scalar T>
SpectralTransfer<T> spectral_transfer(const BasicDigraph<T>& g, double tol) {
  auto normalized = normalize_out_weights(g);
  auto x = left_eigenvector(normalized, tol);
  auto symmetric = symmetrized_graph(normalized, x);
  return {std::move(normalized), std::move(x), std::move(symmetric)};
}

#define MAJORITY_INSTANTIATE_SPECTRAL(T)                                                    \
  template class StochasticMatrix<T>;                                                       \
  template LeftEigenvector<T> left_eigenvector<T>(const BasicDigraph<T>&, double);          \
  template UndirectedView<T> symmetrized_graph<T>(const BasicDigraph<T>&,                   \
                                                  const LeftEigenvector<T>&);               \
  template SpectralTransfer<T> spectral_transfer<T>(const BasicDigraph<T>&, double);

MAJORITY_INSTANTIATE_SPECTRAL(double)
MAJORITY_INSTANTIATE_SPECTRAL(Rational)

}  // namespace majority
