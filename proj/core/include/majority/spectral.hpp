#pragma once

// Stationary left eigenvector of a row-stochastic weighted digraph and the
// undirected symmetrization it induces:
//
//   w_G(vw) = w_G(wv) = x_v T_vw + x_w T_wv,
//
// under which the total weight incident to v is exactly 2 x_v.

#include <vector>

#include "majority/graph.hpp"

namespace majority {

class SpectralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense row-major view T_vw = w(vw) of an out-normalized digraph.
template <Scalar T>
class StochasticMatrix {
 public:
  // Throws SpectralError when some row does not sum to one (within
  // row_tolerance for doubles, exactly for rationals).
  explicit StochasticMatrix(const BasicDigraph<T>& normalized, double row_tolerance = 1e-12);

  int size() const { return n_; }
  const T& operator()(int v, int w) const { return entries_[static_cast<std::size_t>(v) * n_ + w]; }

 private:
  int n_ = 0;
  std::vector<T> entries_;
};

template <Scalar T>
struct LeftEigenvector {
  std::vector<T> x;  // positive, sums to one
  double residual = 0.0;  // max_v |(xT)_v - x_v|
};

// Solves (T^t - I) x = 0 with one equation replaced by sum(x) = 1, using
// Gaussian elimination with partial pivoting. Throws SpectralError if g is not
// strongly connected, not normalized, the solution is not positive, or the
// residual exceeds tol.
template <Scalar T>
LeftEigenvector<T> left_eigenvector(const BasicDigraph<T>& normalized, double tol = 1e-10);

// Symmetric graph on the same vertices; an undirected edge vw exists iff vw or
// wv is an edge of g.
template <Scalar T>
UndirectedView<T> symmetrized_graph(const BasicDigraph<T>& normalized, const LeftEigenvector<T>& x);

// Everything the strongly connected Painter needs, computed once.
template <Scalar T>
struct SpectralTransfer {
  BasicDigraph<T> normalized;
  LeftEigenvector<T> eigenvector;
  UndirectedView<T> symmetric;
};

template <Scalar T>
SpectralTransfer<T> spectral_transfer(const BasicDigraph<T>& g, double tol = 1e-10);

}  // namespace majority
