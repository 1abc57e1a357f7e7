#include "majority/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace majority {

std::vector<std::optional<int>> as_partial_coloring(const std::vector<int>& coloring) {
  return {coloring.begin(), coloring.end()};
}

namespace {

// Odometer over per-vertex choice lists; `accept` sees each full assignment.
ColoringSolveResult enumerate_colorings(const std::vector<std::vector<int>>& choices,
                                        std::uint64_t max_assignments,
                                        const std::function<bool(const std::vector<int>&)>& accept) {
  double total = 1.0;
  for (const auto& c : choices) total *= static_cast<double>(c.size());
  if (total > static_cast<double>(max_assignments)) {
    throw OracleLimitError("coloring search space " + std::to_string(total) +
                           " exceeds the bound " + std::to_string(max_assignments));
  }
  ColoringSolveResult result;
  const auto n = choices.size();
  for (const auto& c : choices) {
    if (c.empty()) return result;
  }
  std::vector<std::size_t> digit(n, 0);
  std::vector<int> coloring(n);
  while (true) {
    for (std::size_t v = 0; v < n; ++v) coloring[v] = choices[v][digit[v]];
    ++result.examined;
    if (accept(coloring)) {
      result.colorable = true;
      result.coloring = coloring;
      return result;
    }
    std::size_t v = 0;
    while (v < n && ++digit[v] == choices[v].size()) digit[v++] = 0;
    if (v == n) return result;
  }
}

template <Scalar T>
bool within_limits(const BasicDigraph<T>& g, const std::vector<int>& coloring,
                   const std::function<T(int, int)>& allowance) {
  for (int v = 0; v < g.num_vertices(); ++v) {
    T mono(0);
    for (const auto& arc : g.out_arcs(v)) {
      if (coloring[arc.to] == coloring[v]) mono += arc.weight;
    }
    if (!(mono <= allowance(v, coloring[v]))) return false;
  }
  return true;
}

template <Scalar T>
std::vector<std::vector<int>> list_choices(const BasicDigraph<T>& g, const ListAssignment<T>& lists) {
  if (lists.num_vertices() != g.num_vertices()) {
    throw std::invalid_argument("list assignment does not match the graph");
  }
  std::vector<std::vector<int>> choices(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    for (const auto& e : lists.list(v)) choices[v].push_back(e.color);
  }
  return choices;
}

}  // namespace

template <Scalar T>
ColoringSolveResult is_majority_colorable(const BasicDigraph<T>& g, const std::vector<T>& tolerance,
                                          int k, std::uint64_t max_assignments) {
  if (static_cast<int>(tolerance.size()) != g.num_vertices()) {
    throw std::invalid_argument("is_majority_colorable: one tolerance per vertex required");
  }
  if (k < 1) {
    ColoringSolveResult empty;
    empty.colorable = g.num_vertices() == 0;
    if (empty.colorable) empty.coloring = std::vector<int>{};
    return empty;
  }
  std::vector<int> palette(k);
  std::iota(palette.begin(), palette.end(), 1);
  std::vector<std::vector<int>> choices(g.num_vertices(), palette);
  std::vector<T> limit;
  for (int v = 0; v < g.num_vertices(); ++v) limit.push_back(tolerance[v] * out_weight(g, v));
  return enumerate_colorings(choices, max_assignments, [&](const std::vector<int>& c) {
    return within_limits<T>(g, c, [&](int v, int) { return limit[v]; });
  });
}

template <Scalar T>
ColoringSolveResult is_colorable_from_lists(const BasicDigraph<T>& g, const ListAssignment<T>& lists,
                                            const std::vector<T>& tolerance,
                                            std::uint64_t max_assignments) {
  if (static_cast<int>(tolerance.size()) != g.num_vertices()) {
    throw std::invalid_argument("is_colorable_from_lists: one tolerance per vertex required");
  }
  std::vector<T> limit;
  for (int v = 0; v < g.num_vertices(); ++v) limit.push_back(tolerance[v] * out_weight(g, v));
  return enumerate_colorings(list_choices(g, lists), max_assignments,
                             [&](const std::vector<int>& c) {
                               return within_limits<T>(g, c, [&](int v, int) { return limit[v]; });
                             });
}

template <Scalar T>
ColoringSolveResult is_colorable_from_ranked_lists(const BasicDigraph<T>& g,
                                                   const ListAssignment<T>& lists,
                                                   std::uint64_t max_assignments) {
  if (!lists.ranked()) throw std::invalid_argument("is_colorable_from_ranked_lists: no ranks");
  return enumerate_colorings(list_choices(g, lists), max_assignments,
                             [&](const std::vector<int>& c) {
                               return within_limits<T>(g, c, [&](int v, int color) {
                                 return *lists.rank(v, color);
                               });
                             });
}

// ---------------------------------------------------------------------------
// kappa game

std::pair<KappaStatus, std::vector<int>> canonicalize_status(const KappaStatus& status,
                                                             Symmetry symmetry) {
  const int n = static_cast<int>(status.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  if (symmetry == Symmetry::kFull) {
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int a, int b) { return status[a] < status[b]; });
  } else if (symmetry == Symmetry::kCyclic && n > 0) {
    int best = 0;
    auto rotated_less = [&](int r, int s) {
      for (int i = 0; i < n; ++i) {
        int a = status[(i + r) % n], b = status[(i + s) % n];
        if (a != b) return a < b;
      }
      return false;
    };
    for (int r = 1; r < n; ++r) {
      if (rotated_less(r, best)) best = r;
    }
    for (int i = 0; i < n; ++i) perm[i] = (i + best) % n;
  }
  KappaStatus canonical(n);
  for (int i = 0; i < n; ++i) canonical[i] = status[perm[i]];
  return {canonical, perm};
}

namespace {

template <Scalar T>
bool is_automorphism(const BasicDigraph<T>& g, const std::vector<int>& perm) {
  for (const auto& e : g.edges()) {
    auto w = g.weight(perm[e.from], perm[e.to]);
    if (!w || *w != e.weight) return false;
  }
  return true;
}

template <Scalar T>
void verify_symmetry(const BasicDigraph<T>& g, const std::vector<T>& tolerance,
                     const std::vector<int>& kappa, Symmetry symmetry) {
  const int n = g.num_vertices();
  if (symmetry == Symmetry::kNone || n <= 1) return;
  for (int v = 1; v < n; ++v) {
    if (tolerance[v] != tolerance[0] || kappa[v] != kappa[0]) {
      throw std::invalid_argument("symmetry requires uniform tau and kappa");
    }
  }
  std::vector<int> rotation(n);
  for (int v = 0; v < n; ++v) rotation[v] = (v + 1) % n;
  bool ok = is_automorphism(g, rotation);
  if (symmetry == Symmetry::kFull && ok) {
    std::vector<int> swap01(n);
    std::iota(swap01.begin(), swap01.end(), 0);
    std::swap(swap01[0], swap01[1]);
    ok = is_automorphism(g, swap01);
  }
  if (!ok) throw std::invalid_argument("graph is not invariant under the claimed symmetry");
}

// Valid Painter answers: for every v in Y, weight into Y <= tau(v) * out(v).
template <Scalar T>
std::vector<char> valid_answers(const BasicDigraph<T>& g, const std::vector<T>& tolerance) {
  const int n = g.num_vertices();
  std::vector<T> limit;
  for (int v = 0; v < n; ++v) limit.push_back(tolerance[v] * out_weight(g, v));
  std::vector<char> valid(std::size_t{1} << n, 0);
  for (std::uint32_t y = 0; y < (1u << n); ++y) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (!((y >> v) & 1)) continue;
      T mono(0);
      for (const auto& arc : g.out_arcs(v)) {
        if ((y >> arc.to) & 1) mono += arc.weight;
      }
      ok = mono <= limit[v];
    }
    valid[y] = ok;
  }
  return valid;
}

VertexSet mask_to_set(std::uint32_t mask) {
  VertexSet s;
  for (int v = 0; mask; ++v, mask >>= 1) {
    if (mask & 1) s.push_back(v);
  }
  return s;
}

std::uint32_t set_to_mask(const VertexSet& s) {
  std::uint32_t m = 0;
  for (int v : s) m |= 1u << v;
  return m;
}

enum class Outcome { kPainter, kLister, kOpen };

// Applies presentation X and answer Y to a status.
Outcome advance(KappaStatus& status, std::uint32_t presented, std::uint32_t answer) {
  bool exhausted = false, all_colored = true;
  for (int v = 0; v < static_cast<int>(status.size()); ++v) {
    if ((answer >> v) & 1) {
      status[v] = -1;
    } else if ((presented >> v) & 1) {
      if (--status[v] == 0) exhausted = true;
    }
    if (status[v] >= 0) all_colored = false;
  }
  if (all_colored) return Outcome::kPainter;
  return exhausted ? Outcome::kLister : Outcome::kOpen;
}

std::uint32_t uncolored_mask(const KappaStatus& status) {
  std::uint32_t m = 0;
  for (int v = 0; v < static_cast<int>(status.size()); ++v) {
    if (status[v] >= 0) m |= 1u << v;
  }
  return m;
}

class KappaSolver {
 public:
  KappaSolver(std::vector<char> valid, int max_kappa, const KappaSolveOptions& options)
      : valid_(std::move(valid)), base_(max_kappa + 2), options_(options) {}

  // True iff Lister wins from canonical status s.
  bool lister_wins(const KappaStatus& s) {
    const std::uint64_t key = encode(s);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (memo_.size() >= options_.max_states) {
      throw OracleLimitError("kappa solver: state bound " + std::to_string(options_.max_states) +
                             " exceeded");
    }
    const std::uint32_t open = uncolored_mask(s);
    bool wins = false;
    for (std::uint32_t x = open; x && !wins; x = (x - 1) & open) {
      bool escaped = false;
      for (std::uint32_t y = x;; y = (y - 1) & x) {
        if (valid_[y]) {
          KappaStatus next = s;
          Outcome o = advance(next, x, y);
          bool painter_survives =
              o == Outcome::kPainter ||
              (o == Outcome::kOpen &&
               !lister_wins(canonicalize_status(next, options_.symmetry).first));
          if (painter_survives) {
            escaped = true;
            if (options_.record_strategy) answers_[{s, mask_to_set(x)}] = mask_to_set(y);
            break;
          }
        }
        if (y == 0) break;
      }
      if (!escaped) {
        wins = true;
        if (options_.record_strategy) moves_[s] = mask_to_set(x);
      }
    }
    memo_.emplace(key, wins);
    return wins;
  }

  std::uint64_t states() const { return memo_.size(); }

  void export_strategy(KappaSolveResult& result) {
    if (result.winner == Winner::kLister) {
      for (auto& [s, x] : moves_) result.lister_strategy.emplace(s, x);
    } else {
      for (auto& [key, y] : answers_) {
        if (!memo_.at(encode(key.first))) result.painter_strategy.emplace(key, y);
      }
    }
  }

 private:
  std::uint64_t encode(const KappaStatus& s) const {
    std::uint64_t key = 0;
    for (int r : s) key = key * base_ + static_cast<std::uint64_t>(r + 1);
    return key;
  }

  std::vector<char> valid_;
  std::uint64_t base_;
  KappaSolveOptions options_;
  std::unordered_map<std::uint64_t, bool> memo_;
  std::map<KappaStatus, VertexSet> moves_;
  std::map<std::pair<KappaStatus, VertexSet>, VertexSet> answers_;
};

template <Scalar T>
void check_kappa_inputs(const BasicDigraph<T>& g, const std::vector<T>& tolerance,
                        const std::vector<int>& kappa, int max_vertices) {
  const int n = g.num_vertices();
  if (n > max_vertices || n > 20) {
    throw OracleLimitError("kappa solver: " + std::to_string(n) + " vertices exceeds the bound " +
                           std::to_string(std::min(max_vertices, 20)));
  }
  if (static_cast<int>(tolerance.size()) != n || static_cast<int>(kappa.size()) != n) {
    throw std::invalid_argument("kappa solver: tau and kappa need one entry per vertex");
  }
  for (int v = 0; v < n; ++v) {
    if (kappa[v] < 1) throw std::invalid_argument("kappa solver: kappa must be >= 1");
  }
}

}  // namespace

template <Scalar T>
KappaSolveResult solve_kappa_game(const BasicDigraph<T>& g, const std::vector<T>& tolerance,
                                  const std::vector<int>& kappa, const KappaSolveOptions& options) {
  check_kappa_inputs(g, tolerance, kappa, options.max_vertices);
  verify_symmetry(g, tolerance, kappa, options.symmetry);
  const int max_kappa = kappa.empty() ? 1 : *std::max_element(kappa.begin(), kappa.end());
  KappaSolver solver(valid_answers(g, tolerance), max_kappa, options);
  KappaSolveResult result;
  result.symmetry = options.symmetry;
  result.initial = canonicalize_status(KappaStatus(kappa.begin(), kappa.end()), options.symmetry).first;
  if (g.num_vertices() == 0) {
    result.winner = Winner::kPainter;
    return result;
  }
  result.winner = solver.lister_wins(result.initial) ? Winner::kLister : Winner::kPainter;
  result.states = solver.states();
  if (options.record_strategy) solver.export_strategy(result);
  return result;
}

namespace {

// Maps a canonical-frame set to actual vertices (perm[i] is the actual vertex
// at canonical position i) and back.
std::uint32_t from_canonical(const VertexSet& s, const std::vector<int>& perm) {
  std::uint32_t m = 0;
  for (int i : s) m |= 1u << perm[i];
  return m;
}

VertexSet to_canonical(std::uint32_t actual, const std::vector<int>& perm) {
  VertexSet s;
  for (int i = 0; i < static_cast<int>(perm.size()); ++i) {
    if ((actual >> perm[i]) & 1) s.push_back(i);
  }
  return s;
}

}  // namespace

template <Scalar T>
bool check_kappa_witness(const BasicDigraph<T>& g, const std::vector<T>& tolerance,
                         const std::vector<int>& kappa, const KappaSolveResult& result) {
  check_kappa_inputs(g, tolerance, kappa, 20);
  const auto valid = valid_answers(g, tolerance);
  const Symmetry sym = result.symmetry;
  std::function<bool(const KappaStatus&)> lister_holds = [&](const KappaStatus& s) {
    auto [canon, perm] = canonicalize_status(s, sym);
    auto it = result.lister_strategy.find(canon);
    if (it == result.lister_strategy.end()) return false;
    const std::uint32_t x = from_canonical(it->second, perm);
    if (x == 0 || (x & ~uncolored_mask(s))) return false;
    for (std::uint32_t y = x;; y = (y - 1) & x) {
      if (valid[y]) {
        KappaStatus next = s;
        Outcome o = advance(next, x, y);
        if (o == Outcome::kPainter || (o == Outcome::kOpen && !lister_holds(next))) return false;
      }
      if (y == 0) break;
    }
    return true;
  };
  std::function<bool(const KappaStatus&)> painter_holds = [&](const KappaStatus& s) {
    auto [canon, perm] = canonicalize_status(s, sym);
    const std::uint32_t open = uncolored_mask(s);
    for (std::uint32_t x = open; x; x = (x - 1) & open) {
      auto it = result.painter_strategy.find({canon, to_canonical(x, perm)});
      if (it == result.painter_strategy.end()) return false;
      const std::uint32_t y = from_canonical(it->second, perm);
      if ((y & ~x) || !valid[y]) return false;
      KappaStatus next = s;
      Outcome o = advance(next, x, y);
      if (o == Outcome::kLister || (o == Outcome::kOpen && !painter_holds(next))) return false;
    }
    return true;
  };
  KappaStatus start(kappa.begin(), kappa.end());
  if (g.num_vertices() == 0) return result.winner == Winner::kPainter;
  return result.winner == Winner::kLister ? lister_holds(start) : painter_holds(start);
}

// ---------------------------------------------------------------------------
// strategy searches

template <Scalar T>
std::optional<std::vector<RoundRecord<T>>> find_lister_win_against(
    const BasicDigraph<T>& g, const KappaGame<T>& game, const PainterStrategy<T>& painter,
    const StrategySearchOptions& options) {
  const int n = g.num_vertices();
  if (n > 20) throw OracleLimitError("find_lister_win_against: more than 20 vertices");
  std::set<KappaStatus> safe;
  std::uint64_t nodes = 0;
  std::function<std::optional<std::vector<RoundRecord<T>>>(const KappaStatus&,
                                                           const PainterStrategy<T>&, int)>
      search = [&](const KappaStatus& s, const PainterStrategy<T>& current,
                   int round) -> std::optional<std::vector<RoundRecord<T>>> {
    if (options.memoize_states && safe.count(s)) return std::nullopt;
    const std::uint32_t open = uncolored_mask(s);
    for (std::uint32_t x = open; x; x = (x - 1) & open) {
      if (++nodes > options.max_nodes) {
        throw OracleLimitError("find_lister_win_against: node bound exceeded");
      }
      ListerMove<T> move;
      for (int v = 0; v < n; ++v) {
        if ((x >> v) & 1) move.tolerance.emplace(v, game.tolerance[v]);
      }
      auto branch = current.clone();
      VertexSet painted = branch->respond(move);
      std::sort(painted.begin(), painted.end());
      auto report = validate_painter_response(g, move, painted);
      if (!report.ok) {
        throw GameError(current.name() + " painter answered illegally: " + report.describe());
      }
      KappaStatus next = s;
      Outcome o = advance(next, x, set_to_mask(painted));
      RoundRecord<T> record{round, move, painted};
      if (o == Outcome::kPainter) continue;
      if (o == Outcome::kLister) return std::vector<RoundRecord<T>>{record};
      if (auto rest = search(next, *branch, round + 1)) {
        rest->insert(rest->begin(), record);
        return rest;
      }
    }
    if (options.memoize_states) safe.insert(s);
    return std::nullopt;
  };
  if (n == 0) return std::nullopt;
  return search(KappaStatus(game.kappa.begin(), game.kappa.end()), painter, 1);
}

template <Scalar T>
ForcedWinResult lister_forces_win(const BasicDigraph<T>& g, const std::vector<T>& lambda,
                                  const Lister<T>& lister, std::uint64_t max_nodes) {
  const int n = g.num_vertices();
  if (n > 20) throw OracleLimitError("lister_forces_win: more than 20 vertices");
  ForcedWinResult result;
  std::uint64_t nodes = 0;
  std::function<bool(const GameState<T>&, Lister<T>&)> forced = [&](const GameState<T>& state,
                                                                     Lister<T>& source) {
    std::optional<ListerMove<T>> move;
    for (int skips = 0; !move; ++skips) {
      auto raw = source.next_move(state);
      if (!raw || skips > 10'000) return false;  // Lister ran dry: Painter is never beaten
      move = filter_move(*raw, state);
    }
    const std::uint32_t x = set_to_mask(move->vertices());
    for (std::uint32_t y = x;; y = (y - 1) & x) {
      if (++nodes > max_nodes) throw OracleLimitError("lister_forces_win: node bound exceeded");
      VertexSet painted = mask_to_set(y);
      if (validate_painter_response(g, *move, painted).ok) {
        GameState<T> next = state;
        next.apply(*move, painted);
        if (next.painter_won()) return false;
        if (next.lister_winner_vertex()) {
          ++result.leaves;
        } else {
          auto child = source.clone();
          if (!forced(next, *child)) return false;
        }
      }
      if (y == 0) break;
    }
    return true;
  };
  GameState<T> start(g, lambda);
  if (start.painter_won()) {
    result.forced = false;
    return result;
  }
  auto source = lister.clone();
  result.forced = forced(start, *source);
  return result;
}

template <Scalar T>
std::vector<BasicDigraph<T>> digraphs_up_to_isomorphism(int n) {
  if (n < 0 || n > 4) throw OracleLimitError("digraphs_up_to_isomorphism: n must be in [0, 4]");
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b) pairs.push_back({a, b});
    }
  }
  std::vector<int> index(n * n, -1);
  for (std::size_t i = 0; i < pairs.size(); ++i) index[pairs[i].first * n + pairs[i].second] = static_cast<int>(i);
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::vector<BasicDigraph<T>> result;
  const std::uint32_t count = 1u << pairs.size();
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    bool canonical = true;
    for (const auto& perm : perms) {
      std::uint32_t image = 0;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((mask >> i) & 1) image |= 1u << index[perm[pairs[i].first] * n + perm[pairs[i].second]];
      }
      if (image < mask) {
        canonical = false;
        break;
      }
    }
    if (!canonical) continue;
    std::vector<Edge<T>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1) edges.push_back({pairs[i].first, pairs[i].second, T(1)});
    }
    result.emplace_back(n, std::move(edges));
  }
  return result;
}

#define MAJORITY_INSTANTIATE_ORACLE(T)                                                       \
  template ColoringSolveResult is_majority_colorable<T>(const BasicDigraph<T>&,              \
                                                        const std::vector<T>&, int,          \
                                                        std::uint64_t);                      \
  template ColoringSolveResult is_colorable_from_lists<T>(                                   \
      const BasicDigraph<T>&, const ListAssignment<T>&, const std::vector<T>&, std::uint64_t); \
  template ColoringSolveResult is_colorable_from_ranked_lists<T>(                            \
      const BasicDigraph<T>&, const ListAssignment<T>&, std::uint64_t);                      \
  template KappaSolveResult solve_kappa_game<T>(const BasicDigraph<T>&, const std::vector<T>&, \
                                                const std::vector<int>&,                     \
                                                const KappaSolveOptions&);                   \
  template bool check_kappa_witness<T>(const BasicDigraph<T>&, const std::vector<T>&,        \
                                       const std::vector<int>&, const KappaSolveResult&);    \
  template std::optional<std::vector<RoundRecord<T>>> find_lister_win_against<T>(           \
      const BasicDigraph<T>&, const KappaGame<T>&, const PainterStrategy<T>&,                \
      const StrategySearchOptions&);                                                         \
  template ForcedWinResult lister_forces_win<T>(const BasicDigraph<T>&, const std::vector<T>&, \
                                                const Lister<T>&, std::uint64_t);            \
  template std::vector<BasicDigraph<T>> digraphs_up_to_isomorphism<T>(int);

MAJORITY_INSTANTIATE_ORACLE(double)
MAJORITY_INSTANTIATE_ORACLE(Rational)

}  // namespace majority
