#pragma once

// Referee for the ranked-majority lambda-painting game.
//
// Each round: ask the Lister for a move, filter it, hand it to the Painter,
// validate the answer against
//
//   sum_{w in Y, vw in E} w(vw) <= tau(v) * sum_{vw in E} w(vw)   for v in Y,
//
// color Y, add the presented tolerances to `spent`, then check Painter's win
// (everything colored) before Lister's (an uncolored v with spent >= lambda).

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "majority/lister.hpp"
#include "majority/painter.hpp"

namespace majority {

enum class Winner { kPainter, kLister };

std::string_view winner_name(Winner winner);

template <Scalar T>
struct RoundRecord {
  int round = 0;
  ListerMove<T> move;  // after filtering
  VertexSet painted;

  friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

template <Scalar T>
struct GameTrace {
  std::vector<RoundRecord<T>> rounds;
  Winner winner = Winner::kPainter;
  // Smallest uncolored vertex whose budget ran out when Lister wins.
  std::optional<int> exhausted_vertex;
  // Round that colored each vertex; empty for vertices left uncolored.
  std::vector<std::optional<int>> coloring;

  friend bool operator==(const GameTrace&, const GameTrace&) = default;
};

template <Scalar T>
struct EngineOptions {
  // Overrides the default cap 10 * n * max_v ceil(lambda(v) / min presented
  // positive tolerance).
  std::optional<std::int64_t> round_cap;
  // Consecutive skipped (empty after filtering) moves tolerated.
  int max_skips = 10'000;
  // Called after every admitted round.
  std::function<void(const RoundRecord<T>&, const GameState<T>&)> on_round;
};

template <Scalar T>
struct ResponseViolation {
  int vertex = 0;
  bool outside_presented = false;
  T monochromatic_weight{};
  T allowance{};
};

template <Scalar T>
struct ResponseReport {
  bool ok = true;
  std::vector<ResponseViolation<T>> violations;

  std::string describe() const;
};

template <Scalar T>
ResponseReport<T> validate_painter_response(const BasicDigraph<T>& g, const ListerMove<T>& move,
                                            const VertexSet& painted);

// Throws std::invalid_argument if lambda has the wrong size or a non-positive
// entry, and GameError on an invalid Painter answer, too many skips, an
// exceeded round cap, or a Lister that runs dry before the game is decided.
template <Scalar T>
GameTrace<T> play_game(const BasicDigraph<T>& g, std::vector<T> lambda, Lister<T>& lister,
                       PainterStrategy<T>& painter, const EngineOptions<T>& options = {});

// The tau-majority kappa-painting game as a ranked game. lambda(v) is the sum
// of kappa(v) copies of tau(v), accumulated in the order the referee adds
// tolerances, so kappa presentations reach lambda exactly in either arithmetic.
template <Scalar T>
struct KappaGame {
  std::vector<T> lambda;
  std::vector<T> tolerance;
  std::vector<int> kappa;

  // Forces every presented tolerance to tau(v).
  std::unique_ptr<Lister<T>> wrap(std::unique_ptr<Lister<T>> lister) const;
};

// Throws std::invalid_argument on tau(v) <= 0, kappa(v) < 1, or size mismatch.
template <Scalar T>
KappaGame<T> kappa_game(const BasicDigraph<T>& g, std::vector<T> tolerance, std::vector<int> kappa);

enum class ColorSource {
  kRound,     // the round that colored the vertex
  kListColor  // the list color carried by that round's move
};

template <Scalar T>
std::vector<std::optional<int>> coloring_from_trace(const GameTrace<T>& trace,
                                                    ColorSource source = ColorSource::kRound);

template <Scalar T>
struct ColoringViolation {
  int vertex = 0;
  T monochromatic_weight{};
  T allowance{};
};

template <Scalar T>
struct ColoringReport {
  bool ok = true;
  std::vector<int> uncolored;
  std::vector<ColoringViolation<T>> violations;
};

// Checks sum_{c(w) = c(v)} w(vw) <= allowance(v, c(v)) at every vertex, where
// the allowance is an absolute weight (a rank).
template <Scalar T>
ColoringReport<T> verify_coloring_ranked(const BasicDigraph<T>& g,
                                         const std::vector<std::optional<int>>& coloring,
                                         const std::function<T(int, int)>& allowance);

// Uniform tolerance per vertex: allowance tau(v) * out_weight(v).
template <Scalar T>
ColoringReport<T> verify_coloring(const BasicDigraph<T>& g,
                                  const std::vector<std::optional<int>>& coloring,
                                  const std::vector<T>& tolerance);

// Per-round tolerances: each vertex is held to the tolerance presented in the
// round that colored it. Uses round colors.
template <Scalar T>
ColoringReport<T> verify_trace_coloring(const BasicDigraph<T>& g, const GameTrace<T>& trace);

// Re-referees a recorded trace: every move must be filtered, every answer
// valid, and the winner and coloring must follow. Throws GameError otherwise.
template <Scalar T>
GameTrace<T> replay_trace(const BasicDigraph<T>& g, const std::vector<T>& lambda,
                          const GameTrace<T>& trace);

}  // namespace majority
