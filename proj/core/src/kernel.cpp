#include "majority/kernel.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace majority {
namespace {

// X relabelled as 0..m-1 with adjacency restricted to X.
template <Scalar T>
struct LocalProblem {
  std::vector<int> vertices;
  std::vector<T> rank;
  std::vector<std::vector<Arc<T>>> adjacency;
  std::vector<T> total;
};

template <Scalar T>
LocalProblem<T> localize(const UndirectedView<T>& g, const VertexSet& presented,
                         const RankFunction<T>& rank) {
  const int n = g.num_vertices();
  std::vector<int> local(n, -1);
  LocalProblem<T> p;
  for (int v : presented) {
    if (v < 0 || v >= n) throw std::invalid_argument("kernel: vertex out of range");
    if (local[v] >= 0) throw std::invalid_argument("kernel: duplicate vertex in X");
    auto it = rank.find(v);
    if (it == rank.end()) {
      throw std::invalid_argument("kernel: no rank for vertex " + std::to_string(v));
    }
    local[v] = static_cast<int>(p.vertices.size());
    p.vertices.push_back(v);
    p.rank.push_back(it->second);
  }
  const auto m = p.vertices.size();
  p.adjacency.resize(m);
  p.total.assign(m, T(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& arc : g.graph().out_arcs(p.vertices[i])) {
      if (local[arc.to] >= 0) {
        p.adjacency[i].push_back({local[arc.to], arc.weight});
        p.total[i] += arc.weight;
      }
    }
  }
  return p;
}

template <Scalar T>
T weight_to(const LocalProblem<T>& p, std::size_t i, const std::vector<char>& in) {
  T sum(0);
  for (const auto& arc : p.adjacency[i]) {
    if (in[arc.to]) sum += arc.weight;
  }
  return sum;
}

template <Scalar T>
T local_cost(const LocalProblem<T>& p, const std::vector<char>& in) {
  T cost(0);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (!in[i]) continue;
    cost += 2 * p.rank[i] - p.total[i];
    for (const auto& arc : p.adjacency[i]) {
      if (!in[arc.to]) cost += arc.weight;
    }
  }
  return cost;
}

template <Scalar T>
void run_local_search(const LocalProblem<T>& p, std::vector<char>& in,
                      const KernelObserver<T>& observer, std::int64_t max_moves) {
  const auto m = p.vertices.size();
  std::size_t size = 0;
  for (char c : in) size += c ? 1 : 0;
  T cost = observer ? local_cost(p, in) : T(0);
  std::int64_t moves = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < m; ++i) {
      T weight = weight_to(p, i, in);
      bool flip = in[i] ? p.rank[i] < weight : p.rank[i] >= weight;
      if (!flip) continue;
      if (++moves > max_moves) {
        throw std::runtime_error("local_search_kernel: move budget exhausted");
      }
      changed = true;
      in[i] = !in[i];
      size = in[i] ? size + 1 : size - 1;
      if (observer) {
        // Adding v changes cost by 2(rho - weight); removing by the negation.
        T delta = 2 * (p.rank[i] - weight);
        cost += in[i] ? delta : T(-delta);
        observer({p.vertices[i], static_cast<bool>(in[i]), cost, size});
      }
    }
  }
}

template <Scalar T>
std::vector<char> exhaustive_maximizer(const LocalProblem<T>& p) {
  const auto m = p.vertices.size();
  std::vector<char> in(m, 0), best_in(m, 0);
  std::vector<T> weight(m, T(0));  // weight from i into the current set
  T cost(0), best_cost(0);
  std::size_t size = 0, best_size = 0;
  std::uint64_t mask = 0, best_mask = 0;
  const std::uint64_t count = std::uint64_t{1} << m;
  // Gray-code walk; step k flips the lowest set bit of k.
  for (std::uint64_t k = 1; k < count; ++k) {
    const int i = __builtin_ctzll(k);
    T delta = 2 * (p.rank[i] - weight[i]);
    if (in[i]) {
      cost -= delta;
      in[i] = 0;
      --size;
    } else {
      cost += delta;
      in[i] = 1;
      ++size;
    }
    mask ^= std::uint64_t{1} << i;
    for (const auto& arc : p.adjacency[i]) {
      if (in[i]) {
        weight[arc.to] += arc.weight;
      } else {
        weight[arc.to] -= arc.weight;
      }
    }
    bool better = cost > best_cost || (cost == best_cost && size > best_size) ||
                  (cost == best_cost && size == best_size && mask < best_mask);
    if (better) {
      best_cost = cost;
      best_size = size;
      best_mask = mask;
      best_in = in;
    }
  }
  return best_in;
}

template <Scalar T>
KernelCertificate<T> certify(const LocalProblem<T>& p, const std::vector<char>& in) {
  KernelCertificate<T> cert;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (in[i]) cert.selected.push_back(p.vertices[i]);
    cert.total_in_presented[p.vertices[i]] = p.total[i];
    cert.weight_to_selected[p.vertices[i]] = weight_to(p, i, in);
  }
  cert.cost = local_cost(p, in);
  return cert;
}

template <Scalar T>
std::vector<char> membership(const LocalProblem<T>& p, const VertexSet& subset) {
  std::vector<char> in(p.vertices.size(), 0);
  for (int v : subset) {
    bool found = false;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      if (p.vertices[i] == v) {
        in[i] = 1;
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::invalid_argument("kernel: vertex " + std::to_string(v) +
                                  " of Y is not in X");
    }
  }
  return in;
}

}  // namespace

template <Scalar T>
T cost_of(const UndirectedView<T>& g, const VertexSet& presented, const RankFunction<T>& rank,
          const VertexSet& selected) {
  auto p = localize(g, presented, rank);
  return local_cost(p, membership(p, selected));
}

template <Scalar T>
KernelCheck<T> kernel_condition_holds(const UndirectedView<T>& g, const VertexSet& presented,
                                      const RankFunction<T>& rank, const VertexSet& selected) {
  auto p = localize(g, presented, rank);
  auto in = membership(p, selected);
  KernelCheck<T> check;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    T weight = weight_to(p, i, in);
    bool dominated = p.rank[i] >= weight;
    if (static_cast<bool>(in[i]) != dominated) {
      check.ok = false;
      check.violations.push_back({p.vertices[i], static_cast<bool>(in[i]), p.rank[i], weight});
    }
  }
  return check;
}

template <Scalar T>
KernelCertificate<T> select_kernel(const UndirectedView<T>& g, const VertexSet& presented,
                                   const RankFunction<T>& rank, const KernelOptions& options) {
  auto p = localize(g, presented, rank);
  const auto m = static_cast<int>(p.vertices.size());
  bool exhaustive = options.method == KernelMethod::kExhaustive ||
                    (options.method == KernelMethod::kAuto && m <= options.exhaustive_limit);
  if (exhaustive && m > 62) {
    throw std::invalid_argument("select_kernel: exhaustive search limited to 62 vertices");
  }
  std::vector<char> in = exhaustive ? exhaustive_maximizer(p) : std::vector<char>(m, 0);
  // With exact arithmetic the maximizer is already a fixed point; with doubles
  // this repairs decisions flipped by rounding in near-tied costs.
  run_local_search(p, in, KernelObserver<T>{}, options.max_moves);
  return certify(p, in);
}

template <Scalar T>
VertexSet local_search_kernel(const UndirectedView<T>& g, const VertexSet& presented,
                              const RankFunction<T>& rank, const VertexSet& start,
                              const KernelObserver<T>& observer, std::int64_t max_moves) {
  auto p = localize(g, presented, rank);
  auto in = membership(p, start);
  run_local_search(p, in, observer, max_moves);
  VertexSet result;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (in[i]) result.push_back(p.vertices[i]);
  }
  return result;
}

template <Scalar T>
std::vector<VertexSet> brute_force_kernels(const UndirectedView<T>& g, const VertexSet& presented,
                                           const RankFunction<T>& rank, int max_size) {
  if (static_cast<int>(presented.size()) > max_size) {
    throw std::invalid_argument("brute_force_kernels: |X| = " +
                                std::to_string(presented.size()) + " exceeds bound " +
                                std::to_string(max_size));
  }
  auto p = localize(g, presented, rank);
  const auto m = p.vertices.size();
  std::vector<std::uint64_t> masks;
  std::vector<char> in(m, 0);
  std::vector<T> weight(m, T(0));
  std::uint64_t mask = 0;
  auto satisfied = [&] {
    for (std::size_t i = 0; i < m; ++i) {
      if (static_cast<bool>(in[i]) != (p.rank[i] >= weight[i])) return false;
    }
    return true;
  };
  if (satisfied()) masks.push_back(mask);
  // Gray-code walk keeping each vertex's weight into the current subset.
  for (std::uint64_t k = 1; k < (std::uint64_t{1} << m); ++k) {
    const int i = __builtin_ctzll(k);
    in[i] = !in[i];
    mask ^= std::uint64_t{1} << i;
    for (const auto& arc : p.adjacency[i]) {
      if (in[i]) {
        weight[arc.to] += arc.weight;
      } else {
        weight[arc.to] -= arc.weight;
      }
    }
    if (satisfied()) masks.push_back(mask);
  }
  std::sort(masks.begin(), masks.end());
  std::vector<VertexSet> found;
  for (std::uint64_t bits : masks) {
    VertexSet y;
    for (std::size_t i = 0; i < m; ++i) {
      if ((bits >> i) & 1) y.push_back(p.vertices[i]);
    }
    found.push_back(std::move(y));
  }
  return found;
}

#define MAJORITY_INSTANTIATE_KERNEL(T)                                                       \
  template T cost_of<T>(const UndirectedView<T>&, const VertexSet&, const RankFunction<T>&, \
                        const VertexSet&);                                                  \
  template KernelCheck<T> kernel_condition_holds<T>(const UndirectedView<T>&,               \
                                                    const VertexSet&, const RankFunction<T>&, \
                                                    const VertexSet&);                      \
  template KernelCertificate<T> select_kernel<T>(const UndirectedView<T>&, const VertexSet&, \
                                                 const RankFunction<T>&, const KernelOptions&); \
  template VertexSet local_search_kernel<T>(const UndirectedView<T>&, const VertexSet&,     \
                                            const RankFunction<T>&, const VertexSet&,       \
                                            const KernelObserver<T>&, std::int64_t);        \
  template std::vector<VertexSet> brute_force_kernels<T>(                                   \
      const UndirectedView<T>&, const VertexSet&, const RankFunction<T>&, int);

MAJORITY_INSTANTIATE_KERNEL(double)
MAJORITY_INSTANTIATE_KERNEL(Rational)

}  // namespace majority
