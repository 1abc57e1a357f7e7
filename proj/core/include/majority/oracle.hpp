#pragma once

// Brute-force ground truth for tiny instances: colorability, list
// colorability, exact solution of the tau-majority kappa-painting game, and
// exhaustive checks of concrete Lister and Painter strategies.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "majority/engine.hpp"

namespace majority {

class OracleLimitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Colors are 1-based.
struct ColoringSolveResult {
  bool colorable = false;
  std::optional<std::vector<int>> coloring;
  std::uint64_t examined = 0;
};

std::vector<std::optional<int>> as_partial_coloring(const std::vector<int>& coloring);

// Exhaustive over k^n colorings. Throws OracleLimitError above max_assignments.
template <Scalar T>
ColoringSolveResult is_majority_colorable(const BasicDigraph<T>& g, const std::vector<T>& tolerance,
                                          int k, std::uint64_t max_assignments = 50'000'000);

// Exhaustive over the product of the lists. With uniform tolerances the limit
// for v is tau(v) * out_weight(v); ranked lists use the rank of the chosen
// color as an absolute limit instead (and ignore `tolerance`).
template <Scalar T>
ColoringSolveResult is_colorable_from_lists(const BasicDigraph<T>& g, const ListAssignment<T>& lists,
                                            const std::vector<T>& tolerance,
                                            std::uint64_t max_assignments = 50'000'000);

template <Scalar T>
ColoringSolveResult is_colorable_from_ranked_lists(const BasicDigraph<T>& g,
                                                   const ListAssignment<T>& lists,
                                                   std::uint64_t max_assignments = 50'000'000);

// Automorphisms the kappa-game solver may quotient by. The solver verifies the
// claim (graph, tau and kappa invariant under the generators) and throws
// std::invalid_argument if it does not hold.
enum class Symmetry {
  kNone,
  kFull,   // every vertex permutation (uniform cliques)
  kCyclic  // rotations v -> v+1 mod n (directed cycles, circulant tournaments)
};

// Per-vertex status: -1 colored, otherwise presentations still available.
using KappaStatus = std::vector<int>;

struct KappaSolveOptions {
  int max_vertices = 6;
  std::uint64_t max_states = 5'000'000;
  Symmetry symmetry = Symmetry::kNone;
  bool record_strategy = true;
};

// Strategies are stored in the canonical frame of each state (identity frame
// without symmetry). Moves and answers are vertex sets in that frame.
struct KappaSolveResult {
  Winner winner = Winner::kPainter;
  KappaStatus initial;
  Symmetry symmetry = Symmetry::kNone;
  // Lister wins: a winning presentation at each Lister-winning state reached.
  std::map<KappaStatus, VertexSet> lister_strategy;
  // Painter wins: a saving answer to every presentation at each
  // Painter-winning state reached.
  std::map<std::pair<KappaStatus, VertexSet>, VertexSet> painter_strategy;
  std::uint64_t states = 0;
};

// Memoized minimax over Lister presentations and valid Painter answers.
template <Scalar T>
KappaSolveResult solve_kappa_game(const BasicDigraph<T>& g, const std::vector<T>& tolerance,
                                  const std::vector<int>& kappa, const KappaSolveOptions& options = {});

// Replays the witness against every opposing choice; true iff it achieves the
// claimed winner.
template <Scalar T>
bool check_kappa_witness(const BasicDigraph<T>& g, const std::vector<T>& tolerance,
                         const std::vector<int>& kappa, const KappaSolveResult& result);

// Canonical form of a status under a symmetry: canonical[i] = status[perm[i]].
std::pair<KappaStatus, std::vector<int>> canonicalize_status(const KappaStatus& status,
                                                             Symmetry symmetry);

struct StrategySearchOptions {
  // Treat the Painter's answer as a function of the game state alone, which
  // lets states reached along different histories share one result. Holds for
  // every strategy in painter.hpp.
  bool memoize_states = true;
  std::uint64_t max_nodes = 50'000'000;
};

// Searches all Lister plays of the kappa game against a fixed Painter. Returns
// a winning sequence for Lister, or nullopt when the Painter survives all of
// them. Throws GameError if the Painter ever answers illegally.
template <Scalar T>
std::optional<std::vector<RoundRecord<T>>> find_lister_win_against(
    const BasicDigraph<T>& g, const KappaGame<T>& game, const PainterStrategy<T>& painter,
    const StrategySearchOptions& options = {});

struct ForcedWinResult {
  bool forced = true;
  std::uint64_t leaves = 0;
};

// True when `lister` wins the ranked lambda-game against every sequence of
// valid Painter answers (exhaustive over all valid subsets each round).
template <Scalar T>
ForcedWinResult lister_forces_win(const BasicDigraph<T>& g, const std::vector<T>& lambda,
                                  const Lister<T>& lister, std::uint64_t max_nodes = 50'000'000);

// All unweighted digraphs on n vertices up to isomorphism (one representative
// per class, unit weights), by brute-force canonical labelling. n <= 4.
template <Scalar T>
std::vector<BasicDigraph<T>> digraphs_up_to_isomorphism(int n);

}  // namespace majority
