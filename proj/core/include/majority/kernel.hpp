#pragma once

// Kernel selection on undirected weighted graphs: given a presented set X and
// ranks rho on X, find Y within X such that for every v in X
//
//   v in Y  <=>  rho(v) >= sum of w(vw) over neighbours w in Y.
//
// Such a Y maximizes the potential
//
//   cost(Y) = sum_{v in Y} (2 rho(v) - Xtotal(v)) + sum_{v in Y, w in X\Y} w(vw)
//
// (ties broken toward larger |Y|), where Xtotal(v) is the weight from v into X.

#include <cstdint>
#include <functional>
#include <vector>

#include "majority/graph.hpp"

namespace majority {

template <Scalar T>
using RankFunction = VertexMap<T>;

template <Scalar T>
struct KernelCertificate {
  VertexSet selected;
  T cost{};
  // For every v in X: weight from v into X, and into the selected set.
  VertexMap<T> total_in_presented;
  VertexMap<T> weight_to_selected;

  // Weight from v into X \ Y.
  T weight_to_unselected(int v) const {
    return T(total_in_presented.at(v) - weight_to_selected.at(v));
  }
};

template <Scalar T>
struct KernelViolation {
  int vertex = 0;
  bool selected = false;  // true: in Y but rank < weight; false: outside Y but rank >= weight
  T rank{};
  T weight_to_selected{};
};

template <Scalar T>
struct KernelCheck {
  bool ok = true;
  std::vector<KernelViolation<T>> violations;
};

enum class KernelMethod {
  kAuto,        // exhaustive up to exhaustive_limit, local search beyond
  kExhaustive,  // exact maximizer of (cost, |Y|)
  kLocalSearch  // flip search from the empty set
};

struct KernelOptions {
  KernelMethod method = KernelMethod::kAuto;
  int exhaustive_limit = 20;
  // Accepted local-search moves before giving up (only reachable through
  // floating-point cycling).
  std::int64_t max_moves = 50'000'000;
};

// One accepted local-search move, reported after it is applied.
template <Scalar T>
struct KernelStep {
  int vertex = 0;
  bool added = false;
  T cost{};
  std::size_t size = 0;
};

template <Scalar T>
using KernelObserver = std::function<void(const KernelStep<T>&)>;

// Throws std::invalid_argument unless selected is a subset of presented.
template <Scalar T>
T cost_of(const UndirectedView<T>& g, const VertexSet& presented, const RankFunction<T>& rank,
          const VertexSet& selected);

template <Scalar T>
KernelCheck<T> kernel_condition_holds(const UndirectedView<T>& g, const VertexSet& presented,
                                      const RankFunction<T>& rank, const VertexSet& selected);

// Always returns a set satisfying the kernel condition (in the arithmetic of T).
// Exhaustive mode returns the lexicographic maximizer of (cost, |Y|), ties
// going to the smallest membership bitmask over X in ascending order.
template <Scalar T>
KernelCertificate<T> select_kernel(const UndirectedView<T>& g, const VertexSet& presented,
                                   const RankFunction<T>& rank, const KernelOptions& options = {});

// Local search: scan X in ascending order, removing v in Y with rho(v) < weight
// and adding v outside Y with rho(v) >= weight, until a scan makes no move.
template <Scalar T>
VertexSet local_search_kernel(const UndirectedView<T>& g, const VertexSet& presented,
                              const RankFunction<T>& rank, const VertexSet& start = {},
                              const KernelObserver<T>& observer = {},
                              std::int64_t max_moves = 50'000'000);

// All condition-satisfying subsets, in increasing bitmask order. Throws
// std::invalid_argument when |X| exceeds max_size.
template <Scalar T>
std::vector<VertexSet> brute_force_kernels(const UndirectedView<T>& g, const VertexSet& presented,
                                           const RankFunction<T>& rank, int max_size = 20);

}  // namespace majority
