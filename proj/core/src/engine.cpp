#include "majority/engine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace majority {

// ---------------------------------------------------------------------------
// GameState

template <Scalar T>
GameState<T>::GameState(const BasicDigraph<T>& graph, std::vector<T> lambda)
    : graph_(&graph),
      lambda_(std::move(lambda)),
      spent_(graph.num_vertices(), T(0)),
      color_(graph.num_vertices()) {
  if (static_cast<int>(lambda_.size()) != graph.num_vertices()) {
    throw std::invalid_argument("lambda must have one entry per vertex");
  }
  for (std::size_t v = 0; v < lambda_.size(); ++v) {
    if (!is_finite(lambda_[v]) || !(lambda_[v] > T(0))) {
      throw std::invalid_argument("lambda(" + std::to_string(v) + ") must be positive");
    }
  }
}

template <Scalar T>
VertexSet GameState<T>::uncolored() const {
  VertexSet result;
  for (int v = 0; v < num_vertices(); ++v) {
    if (!is_colored(v)) result.push_back(v);
  }
  return result;
}

template <Scalar T>
std::optional<int> GameState<T>::lister_winner_vertex() const {
  for (int v = 0; v < num_vertices(); ++v) {
    if (!is_colored(v) && spent_[v] >= lambda_[v]) return v;
  }
  return std::nullopt;
}

template <Scalar T>
void GameState<T>::apply(const ListerMove<T>& move, const VertexSet& painted) {
  ++round_;
  for (const auto& [v, t] : move.tolerance) spent_[v] += t;
  for (int v : painted) {
    if (!color_[v]) {
      color_[v] = round_;
      ++colored_count_;
    }
  }
}

// ---------------------------------------------------------------------------

std::string_view winner_name(Winner winner) {
  return winner == Winner::kPainter ? "painter" : "lister";
}

template <Scalar T>
std::string ResponseReport<T>::describe() const {
  std::ostringstream out;
  for (const auto& v : violations) {
    if (v.outside_presented) {
      out << "vertex " << v.vertex << " painted but not presented; ";
    } else {
      out << "vertex " << v.vertex << ": monochromatic weight "
          << format_scalar(v.monochromatic_weight) << " exceeds allowance "
          << format_scalar(v.allowance) << "; ";
    }
  }
  return out.str();
}

template <Scalar T>
ResponseReport<T> validate_painter_response(const BasicDigraph<T>& g, const ListerMove<T>& move,
                                            const VertexSet& painted) {
  ResponseReport<T> report;
  std::vector<char> in(g.num_vertices(), 0);
  for (int v : painted) {
    if (v < 0 || v >= g.num_vertices() || !move.tolerance.count(v)) {
      report.ok = false;
      report.violations.push_back({v, true, T(0), T(0)});
      continue;
    }
    in[v] = 1;
  }
  for (int v : painted) {
    if (v < 0 || v >= g.num_vertices() || !in[v]) continue;
    T mono = weight_into(g, v, in);
    T allowance = move.tolerance.at(v) * out_weight(g, v);
    if (!(mono <= allowance)) {
      report.ok = false;
      report.violations.push_back({v, false, mono, allowance});
    }
  }
  return report;
}

namespace {

template <Scalar T>
std::int64_t default_round_cap(const std::vector<T>& lambda, const std::optional<T>& min_tau) {
  const auto n = static_cast<std::int64_t>(lambda.size());
  double factor = 1.0;
  if (min_tau) {
    for (const auto& l : lambda) {
      factor = std::max(factor, std::ceil(to_double(l) / to_double(*min_tau)));
    }
  }
  double cap = 10.0 * static_cast<double>(std::max<std::int64_t>(n, 1)) * factor;
  return cap > 1e15 ? static_cast<std::int64_t>(1e15) : static_cast<std::int64_t>(cap);
}

template <Scalar T>
void finish(GameTrace<T>& trace, const GameState<T>& state) {
  trace.coloring = state.colors();
}

}  // namespace

template <Scalar T>
GameTrace<T> play_game(const BasicDigraph<T>& g, std::vector<T> lambda, Lister<T>& lister,
                       PainterStrategy<T>& painter, const EngineOptions<T>& options) {
  GameState<T> state(g, std::move(lambda));
  GameTrace<T> trace;
  if (state.painter_won()) {
    trace.winner = Winner::kPainter;
    finish(trace, state);
    return trace;
  }
  std::optional<T> min_tau;
  int skips = 0;
  while (true) {
    auto raw = lister.next_move(state);
    if (!raw) throw GameError("Lister source ran out of moves before the game was decided");
    auto move = filter_move(*raw, state);
    if (!move) {
      if (++skips > options.max_skips) {
        throw GameError("Lister skipped more than " + std::to_string(options.max_skips) +
                        " consecutive moves");
      }
      continue;
    }
    skips = 0;
    for (const auto& [v, t] : move->tolerance) {
      if (t > T(0) && (!min_tau || t < *min_tau)) min_tau = t;
    }
    const std::int64_t cap = options.round_cap ? *options.round_cap
                                               : default_round_cap(state.lambda(), min_tau);
    if (state.round() + 1 > cap) {
      throw GameError("round cap " + std::to_string(cap) + " exceeded");
    }
    VertexSet painted = painter.respond(*move);
    std::sort(painted.begin(), painted.end());
    auto report = validate_painter_response(g, *move, painted);
    if (!report.ok) {
      throw GameError("invalid Painter response in round " + std::to_string(state.round() + 1) +
                      ": " + report.describe());
    }
    state.apply(*move, painted);
    trace.rounds.push_back({state.round(), *move, painted});
    if (options.on_round) options.on_round(trace.rounds.back(), state);
    if (state.painter_won()) {
      trace.winner = Winner::kPainter;
      break;
    }
    if (auto v = state.lister_winner_vertex()) {
      trace.winner = Winner::kLister;
      trace.exhausted_vertex = v;
      break;
    }
  }
  finish(trace, state);
  return trace;
}

// ---------------------------------------------------------------------------
// kappa game

template <Scalar T>
std::unique_ptr<Lister<T>> KappaGame<T>::wrap(std::unique_ptr<Lister<T>> lister) const {
  return std::make_unique<ConstantToleranceLister<T>>(std::move(lister), tolerance);
}

template <Scalar T>
KappaGame<T> kappa_game(const BasicDigraph<T>& g, std::vector<T> tolerance, std::vector<int> kappa) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  if (tolerance.size() != n || kappa.size() != n) {
    throw std::invalid_argument("kappa_game: tau and kappa need one entry per vertex");
  }
  KappaGame<T> game;
  for (std::size_t v = 0; v < n; ++v) {
    if (!(tolerance[v] > T(0))) {
      throw std::invalid_argument("kappa_game: tau(" + std::to_string(v) + ") must be positive");
    }
    if (kappa[v] < 1) {
      throw std::invalid_argument("kappa_game: kappa(" + std::to_string(v) + ") must be >= 1");
    }
    T lambda(0);
    for (int i = 0; i < kappa[v]; ++i) lambda += tolerance[v];
    game.lambda.push_back(lambda);
  }
  game.tolerance = std::move(tolerance);
  game.kappa = std::move(kappa);
  return game;
}

// ---------------------------------------------------------------------------
// colorings

template <Scalar T>
std::vector<std::optional<int>> coloring_from_trace(const GameTrace<T>& trace, ColorSource source) {
  std::vector<std::optional<int>> coloring(trace.coloring.size());
  for (const auto& record : trace.rounds) {
    for (int v : record.painted) {
      if (source == ColorSource::kRound) {
        coloring[v] = record.round;
      } else {
        if (!record.move.color) {
          throw std::invalid_argument("coloring_from_trace: round " +
                                      std::to_string(record.round) + " carries no list color");
        }
        coloring[v] = record.move.color;
      }
    }
  }
  return coloring;
}

template <Scalar T>
ColoringReport<T> verify_coloring_ranked(const BasicDigraph<T>& g,
                                         const std::vector<std::optional<int>>& coloring,
                                         const std::function<T(int, int)>& allowance) {
  if (static_cast<int>(coloring.size()) != g.num_vertices()) {
    throw std::invalid_argument("verify_coloring: coloring size does not match the graph");
  }
  ColoringReport<T> report;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!coloring[v]) {
      report.ok = false;
      report.uncolored.push_back(v);
      continue;
    }
    T mono(0);
    for (const auto& arc : g.out_arcs(v)) {
      if (coloring[arc.to] == coloring[v]) mono += arc.weight;
    }
    T limit = allowance(v, *coloring[v]);
    if (!(mono <= limit)) {
      report.ok = false;
      report.violations.push_back({v, mono, limit});
    }
  }
  return report;
}

template <Scalar T>
ColoringReport<T> verify_coloring(const BasicDigraph<T>& g,
                                  const std::vector<std::optional<int>>& coloring,
                                  const std::vector<T>& tolerance) {
  if (static_cast<int>(tolerance.size()) != g.num_vertices()) {
    throw std::invalid_argument("verify_coloring: one tolerance per vertex required");
  }
  return verify_coloring_ranked<T>(g, coloring, [&](int v, int) {
    return T(tolerance[v] * out_weight(g, v));
  });
}

template <Scalar T>
ColoringReport<T> verify_trace_coloring(const BasicDigraph<T>& g, const GameTrace<T>& trace) {
  std::vector<std::optional<T>> presented(g.num_vertices());
  for (const auto& record : trace.rounds) {
    for (int v : record.painted) presented[v] = record.move.tolerance.at(v);
  }
  auto coloring = coloring_from_trace(trace, ColorSource::kRound);
  return verify_coloring_ranked<T>(g, coloring, [&](int v, int) {
    return T(*presented[v] * out_weight(g, v));
  });
}

namespace {

// Replays the recorded moves and answers in order.
template <Scalar T>
class ScriptedLister final : public Lister<T> {
 public:
  explicit ScriptedLister(const std::vector<RoundRecord<T>>& rounds) : rounds_(&rounds) {}
  std::optional<ListerMove<T>> next_move(const GameState<T>&) override {
    if (next_ >= rounds_->size()) return std::nullopt;
    return (*rounds_)[next_++].move;
  }
  std::unique_ptr<Lister<T>> clone() const override { return std::make_unique<ScriptedLister>(*this); }
  std::string name() const override { return "scripted"; }

 private:
  const std::vector<RoundRecord<T>>* rounds_;
  std::size_t next_ = 0;
};

template <Scalar T>
class ScriptedPainter final : public PainterStrategy<T> {
 public:
  explicit ScriptedPainter(const std::vector<RoundRecord<T>>& rounds) : rounds_(&rounds) {}
  VertexSet respond(const ListerMove<T>& move) override {
    const auto& record = (*rounds_)[next_++];
    if (!(record.move == move)) throw GameError("replay: recorded move was altered by filtering");
    return record.painted;
  }
  std::unique_ptr<PainterStrategy<T>> clone() const override {
    return std::make_unique<ScriptedPainter>(*this);
  }
  std::string name() const override { return "scripted"; }

 private:
  const std::vector<RoundRecord<T>>* rounds_;
  std::size_t next_ = 0;
};

}  // namespace

template <Scalar T>
GameTrace<T> replay_trace(const BasicDigraph<T>& g, const std::vector<T>& lambda,
                          const GameTrace<T>& trace) {
  ScriptedLister<T> lister(trace.rounds);
  ScriptedPainter<T> painter(trace.rounds);
  EngineOptions<T> options;
  options.max_skips = 0;
  options.round_cap = static_cast<std::int64_t>(trace.rounds.size());
  GameTrace<T> replayed = play_game(g, lambda, lister, painter, options);
  if (replayed.rounds.size() != trace.rounds.size()) {
    throw GameError("replay: game ended after " + std::to_string(replayed.rounds.size()) +
                    " rounds, trace records " + std::to_string(trace.rounds.size()));
  }
  if (replayed.winner != trace.winner || replayed.coloring != trace.coloring) {
    throw GameError("replay: winner or coloring differs from the trace");
  }
  return replayed;
}

#define MAJORITY_INSTANTIATE_ENGINE(T)                                                      \
  template class GameState<T>;                                                              \
  template struct ResponseReport<T>;                                                        \
  template struct KappaGame<T>;                                                             \
  template ResponseReport<T> validate_painter_response<T>(const BasicDigraph<T>&,           \
                                                          const ListerMove<T>&,             \
                                                          const VertexSet&);                \
  template GameTrace<T> play_game<T>(const BasicDigraph<T>&, std::vector<T>, Lister<T>&,    \
                                     PainterStrategy<T>&, const EngineOptions<T>&);         \
  template KappaGame<T> kappa_game<T>(const BasicDigraph<T>&, std::vector<T>,               \
                                      std::vector<int>);                                    \
  template std::vector<std::optional<int>> coloring_from_trace<T>(const GameTrace<T>&,      \
                                                                  ColorSource);             \
  template ColoringReport<T> verify_coloring_ranked<T>(                                     \
      const BasicDigraph<T>&, const std::vector<std::optional<int>>&,                       \
      const std::function<T(int, int)>&);                                                   \
  template ColoringReport<T> verify_coloring<T>(const BasicDigraph<T>&,                     \
                                                const std::vector<std::optional<int>>&,     \
                                                const std::vector<T>&);                     \
  template ColoringReport<T> verify_trace_coloring<T>(const BasicDigraph<T>&,               \
                                                      const GameTrace<T>&);                 \
  template GameTrace<T> replay_trace<T>(const BasicDigraph<T>&, const std::vector<T>&,      \
                                        const GameTrace<T>&);

MAJORITY_INSTANTIATE_ENGINE(double)
MAJORITY_INSTANTIATE_ENGINE(Rational)

}  // namespace majority
