#pragma once

// Types shared by the referee, the Lister sources and the Painter strategies.

#include <optional>
#include <stdexcept>
#include <vector>

#include "majority/graph.hpp"

namespace majority {

// A rule violation or malformed input detected by the referee.
class GameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A presented set with its tolerances: X is the key set of `tolerance`.
// `color` optionally names the list color the round stands for (list-driven
// Listers); the referee never interprets it.
template <Scalar T>
struct ListerMove {
  VertexMap<T> tolerance;
  std::optional<int> color;

  VertexSet vertices() const {
    VertexSet xs;
    xs.reserve(tolerance.size());
    for (const auto& [v, t] : tolerance) xs.push_back(v);
    return xs;
  }
  bool empty() const { return tolerance.empty(); }

  friend bool operator==(const ListerMove&, const ListerMove&) = default;
};

// Referee-side game state. `color[v]` is the 1-based round that colored v.
template <Scalar T>
class GameState {
 public:
  GameState(const BasicDigraph<T>& graph, std::vector<T> lambda);

  const BasicDigraph<T>& graph() const { return *graph_; }
  int num_vertices() const { return graph_->num_vertices(); }
  int round() const { return round_; }

  const std::vector<T>& lambda() const { return lambda_; }
  const std::vector<T>& spent() const { return spent_; }
  const std::vector<std::optional<int>>& colors() const { return color_; }

  bool is_colored(int v) const { return color_[v].has_value(); }
  T remaining(int v) const { return T(lambda_[v] - spent_[v]); }
  VertexSet uncolored() const;
  int num_colored() const { return colored_count_; }

  bool painter_won() const { return colored_count_ == num_vertices(); }
  // Smallest uncolored vertex with spent >= lambda, if any.
  std::optional<int> lister_winner_vertex() const;

  // Records an admitted move and Painter's answer: colors Y with the next round
  // index and adds every presented tolerance to `spent`.
  void apply(const ListerMove<T>& move, const VertexSet& painted);

 private:
  const BasicDigraph<T>* graph_;
  std::vector<T> lambda_;
  std::vector<T> spent_;
  std::vector<std::optional<int>> color_;
  int round_ = 0;
  int colored_count_ = 0;
};

}  // namespace majority
