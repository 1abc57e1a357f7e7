#pragma once

// Lister move sources. A source produces raw moves; the referee filters them
// (colored and negative-tolerance vertices removed, empty moves skipped)
// before Painter sees them.

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "majority/game_state.hpp"
#include "majority/generators.hpp"

namespace majority {

template <Scalar T>
class Lister {
 public:
  virtual ~Lister() = default;

  // Next raw move, or nullopt once the source has nothing left to present.
  virtual std::optional<ListerMove<T>> next_move(const GameState<T>& state) = 0;
  // Throws std::logic_error for sources that cannot be copied (interactive).
  virtual std::unique_ptr<Lister> clone() const = 0;
  virtual std::string name() const = 0;
};

// Drops colored vertices and negative tolerances; nullopt means "skip".
// Throws GameError on a vertex outside the graph.
template <Scalar T>
std::optional<ListerMove<T>> filter_move(const ListerMove<T>& raw, const GameState<T>& state);

template <Scalar T>
struct ListEntry {
  int color = 1;
  std::optional<T> rank;
};

// Per-vertex color lists, optionally with a rank per listed color.
template <Scalar T>
class ListAssignment {
 public:
  // Throws std::invalid_argument on an empty list, a color < 1, a repeated
  // color, or ranks given for some entries but not others.
  explicit ListAssignment(std::vector<std::vector<ListEntry<T>>> lists);

  int num_vertices() const { return static_cast<int>(lists_.size()); }
  const std::vector<ListEntry<T>>& list(int v) const { return lists_[v]; }
  bool contains(int v, int color) const;
  std::optional<T> rank(int v, int color) const;
  bool ranked() const { return ranked_; }
  int max_color() const { return max_color_; }

 private:
  std::vector<std::vector<ListEntry<T>>> lists_;  // sorted by color
  bool ranked_ = false;
  int max_color_ = 0;
};

// Round i presents the uncolored vertices whose list contains color i, each
// with its fixed tolerance. Emits exactly max_color moves (some possibly
// empty, which the referee skips).
template <Scalar T>
class ListLister final : public Lister<T> {
 public:
  ListLister(ListAssignment<T> lists, std::vector<T> tolerance);

  std::optional<ListerMove<T>> next_move(const GameState<T>& state) override;
  std::unique_ptr<Lister<T>> clone() const override;
  std::string name() const override { return "list"; }

 private:
  ListAssignment<T> lists_;
  std::vector<T> tolerance_;
  int next_color_ = 1;
};

// As ListLister with color-dependent tolerances r_i(v) / out_weight(v). A sink
// (out-weight zero) is presented with tolerance r_i(v) / 1: its constraint is
// vacuous, so only the sign matters.
template <Scalar T>
class RankedListLister final : public Lister<T> {
 public:
  // Throws std::invalid_argument if the lists carry no ranks.
  RankedListLister(ListAssignment<T> lists, const BasicDigraph<T>& graph);

  std::optional<ListerMove<T>> next_move(const GameState<T>& state) override;
  std::unique_ptr<Lister<T>> clone() const override;
  std::string name() const override { return "ranked"; }

 private:
  ListAssignment<T> lists_;
  std::vector<T> out_weight_;
  int next_color_ = 1;
};

// Presents every uncolored vertex with tolerance 1/k for a fixed number of
// rounds: k-1 on K_k, 2k-2 on the (k-1)-out-regular orientation of K_{2k-1}.
template <Scalar T>
class CliqueLowerBoundLister final : public Lister<T> {
 public:
  CliqueLowerBoundLister(int k, int rounds);
  static CliqueLowerBoundLister for_clique(int k) { return {k, k - 1}; }
  static CliqueLowerBoundLister for_regular_tournament(int k) { return {k, 2 * k - 2}; }

  std::optional<ListerMove<T>> next_move(const GameState<T>& state) override;
  std::unique_ptr<Lister<T>> clone() const override;
  std::string name() const override { return "clique"; }

 private:
  int k_;
  int rounds_;
  int emitted_ = 0;
};

struct RandomListerOptions {
  std::uint64_t seed = 1;
  // Tolerances are drawn from lo + (hi - lo) * j / resolution, j uniform in
  // [0, resolution], then capped at the remaining budget.
  std::string tolerance_lo = "1/20";
  std::string tolerance_hi = "1/2";
  int resolution = 1000;
};

// Each uncolored vertex joins with probability 1/2; one is forced if none did.
template <Scalar T>
class RandomLister final : public Lister<T> {
 public:
  explicit RandomLister(const RandomListerOptions& options);

  std::optional<ListerMove<T>> next_move(const GameState<T>& state) override;
  std::unique_ptr<Lister<T>> clone() const override;
  std::string name() const override { return "random"; }

 private:
  Rng rng_;
  T lo_;
  T hi_;
  int resolution_;
};

// Presents the uncolored vertices of largest remaining budget, each with half
// of its remaining budget. Stops when no budget remains.
template <Scalar T>
class GreedyLister final : public Lister<T> {
 public:
  std::optional<ListerMove<T>> next_move(const GameState<T>& state) override;
  std::unique_ptr<Lister<T>> clone() const override;
  std::string name() const override { return "greedy"; }
};

// Replaces every presented tolerance by the fixed tau(v): turns any Lister
// into a player of the tau-majority kappa-painting game.
template <Scalar T>
class ConstantToleranceLister final : public Lister<T> {
 public:
  ConstantToleranceLister(std::unique_ptr<Lister<T>> inner, std::vector<T> tolerance);

  std::optional<ListerMove<T>> next_move(const GameState<T>& state) override;
  std::unique_ptr<Lister<T>> clone() const override;
  std::string name() const override { return "constant(" + inner_->name() + ")"; }

 private:
  std::unique_ptr<Lister<T>> inner_;
  std::vector<T> tolerance_;
};

// Reads moves from a human:
//   present <v>:<tau> [<v>:<tau> ...]
//   state | help | quit
template <Scalar T>
class InteractiveLister final : public Lister<T> {
 public:
  InteractiveLister(std::istream& in, std::ostream& out);

  std::optional<ListerMove<T>> next_move(const GameState<T>& state) override;
  std::unique_ptr<Lister<T>> clone() const override;
  std::string name() const override { return "interactive"; }

 private:
  std::istream* in_;
  std::ostream* out_;
};

// Prints colors, budgets and spent tolerance, one vertex per line.
template <Scalar T>
void print_game_state(std::ostream& out, const GameState<T>& state);

// Parses "v:t v:t ..." into a move; throws std::invalid_argument.
template <Scalar T>
ListerMove<T> parse_move(std::string_view text);

}  // namespace majority
