#include "majority/lister.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace majority {

template <Scalar T>
std::optional<ListerMove<T>> filter_move(const ListerMove<T>& raw, const GameState<T>& state) {
  ListerMove<T> move;
  move.color = raw.color;
  for (const auto& [v, t] : raw.tolerance) {
    if (v < 0 || v >= state.num_vertices()) {
      throw GameError("Lister presented vertex " + std::to_string(v) + " outside the graph");
    }
    if (state.is_colored(v) || t < T(0)) continue;
    move.tolerance.emplace(v, t);
  }
  if (move.empty()) return std::nullopt;
  return move;
}

// ---------------------------------------------------------------------------
// ListAssignment

template <Scalar T>
ListAssignment<T>::ListAssignment(std::vector<std::vector<ListEntry<T>>> lists)
    : lists_(std::move(lists)) {
  bool any_rank = false, any_plain = false;
  for (std::size_t v = 0; v < lists_.size(); ++v) {
    auto& list = lists_[v];
    if (list.empty()) {
      throw std::invalid_argument("list of vertex " + std::to_string(v) + " is empty");
    }
    std::sort(list.begin(), list.end(),
              [](const ListEntry<T>& a, const ListEntry<T>& b) { return a.color < b.color; });
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i].color < 1) {
        throw std::invalid_argument("colors must be positive integers (vertex " +
                                    std::to_string(v) + ")");
      }
      if (i > 0 && list[i].color == list[i - 1].color) {
        throw std::invalid_argument("color " + std::to_string(list[i].color) +
                                    " repeated in the list of vertex " + std::to_string(v));
      }
      (list[i].rank ? any_rank : any_plain) = true;
      max_color_ = std::max(max_color_, list[i].color);
    }
  }
  if (any_rank && any_plain) {
    throw std::invalid_argument("ranks must be given for every list entry or for none");
  }
  ranked_ = any_rank;
}

template <Scalar T>
bool ListAssignment<T>::contains(int v, int color) const {
  const auto& list = lists_[v];
  return std::any_of(list.begin(), list.end(), [&](const auto& e) { return e.color == color; });
}

template <Scalar T>
std::optional<T> ListAssignment<T>::rank(int v, int color) const {
  for (const auto& e : lists_[v]) {
    if (e.color == color) return e.rank;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// ListLister

template <Scalar T>
ListLister<T>::ListLister(ListAssignment<T> lists, std::vector<T> tolerance)
    : lists_(std::move(lists)), tolerance_(std::move(tolerance)) {
  if (static_cast<int>(tolerance_.size()) != lists_.num_vertices()) {
    throw std::invalid_argument("list lister: one tolerance per vertex required");
  }
}

template <Scalar T>
std::optional<ListerMove<T>> ListLister<T>::next_move(const GameState<T>& state) {
  if (next_color_ > lists_.max_color()) return std::nullopt;
  if (state.num_vertices() != lists_.num_vertices()) {
    throw GameError("list lister: list assignment does not match the graph");
  }
  ListerMove<T> move;
  move.color = next_color_;
  for (int v = 0; v < lists_.num_vertices(); ++v) {
    if (!state.is_colored(v) && lists_.contains(v, next_color_)) {
      move.tolerance.emplace(v, tolerance_[v]);
    }
  }
  ++next_color_;
  return move;
}

template <Scalar T>
std::unique_ptr<Lister<T>> ListLister<T>::clone() const {
  return std::make_unique<ListLister>(*this);
}

// ---------------------------------------------------------------------------
// RankedListLister

template <Scalar T>
RankedListLister<T>::RankedListLister(ListAssignment<T> lists, const BasicDigraph<T>& graph)
    : lists_(std::move(lists)) {
  if (!lists_.ranked()) throw std::invalid_argument("ranked lister: lists carry no ranks");
  if (lists_.num_vertices() != graph.num_vertices()) {
    throw std::invalid_argument("ranked lister: list assignment does not match the graph");
  }
  for (int v = 0; v < graph.num_vertices(); ++v) out_weight_.push_back(out_weight(graph, v));
}

template <Scalar T>
std::optional<ListerMove<T>> RankedListLister<T>::next_move(const GameState<T>& state) {
  if (next_color_ > lists_.max_color()) return std::nullopt;
  ListerMove<T> move;
  move.color = next_color_;
  for (int v = 0; v < lists_.num_vertices(); ++v) {
    if (state.is_colored(v)) continue;
    if (auto r = lists_.rank(v, next_color_)) {
      T denominator = out_weight_[v] > T(0) ? out_weight_[v] : T(1);
      move.tolerance.emplace(v, T(*r / denominator));
    }
  }
  ++next_color_;
  return move;
}

template <Scalar T>
std::unique_ptr<Lister<T>> RankedListLister<T>::clone() const {
  return std::make_unique<RankedListLister>(*this);
}

// ---------------------------------------------------------------------------
// CliqueLowerBoundLister

template <Scalar T>
CliqueLowerBoundLister<T>::CliqueLowerBoundLister(int k, int rounds) : k_(k), rounds_(rounds) {
  if (k < 1) throw std::invalid_argument("clique lister: k must be positive");
}

template <Scalar T>
std::optional<ListerMove<T>> CliqueLowerBoundLister<T>::next_move(const GameState<T>& state) {
  if (emitted_ >= rounds_) return std::nullopt;
  ++emitted_;
  ListerMove<T> move;
  const T tau = from_ratio<T>(1, k_);
  for (int v : state.uncolored()) move.tolerance.emplace(v, tau);
  return move;
}

template <Scalar T>
std::unique_ptr<Lister<T>> CliqueLowerBoundLister<T>::clone() const {
  return std::make_unique<CliqueLowerBoundLister>(*this);
}

// ---------------------------------------------------------------------------
// RandomLister

template <Scalar T>
RandomLister<T>::RandomLister(const RandomListerOptions& options)
    : rng_(options.seed),
      lo_(parse_scalar<T>(options.tolerance_lo)),
      hi_(parse_scalar<T>(options.tolerance_hi)),
      resolution_(options.resolution) {
  if (!(lo_ >= T(0)) || hi_ < lo_ || resolution_ < 1) {
    throw std::invalid_argument("random lister: need 0 <= lo <= hi and resolution >= 1");
  }
}

template <Scalar T>
std::optional<ListerMove<T>> RandomLister<T>::next_move(const GameState<T>& state) {
  VertexSet live;
  for (int v : state.uncolored()) {
    if (state.remaining(v) > T(0)) live.push_back(v);
  }
  if (live.empty()) return std::nullopt;
  VertexSet chosen;
  for (int v : live) {
    if (coin(rng_, 0.5)) chosen.push_back(v);
  }
  if (chosen.empty()) {
    chosen.push_back(live[uniform_int(rng_, 0, static_cast<int>(live.size()) - 1)]);
  }
  ListerMove<T> move;
  for (int v : chosen) {
    const int j = uniform_int(rng_, 0, resolution_);
    T tau = lo_ + (hi_ - lo_) * from_ratio<T>(j, resolution_);
    T remaining = state.remaining(v);
    move.tolerance.emplace(v, tau < remaining ? tau : remaining);
  }
  return move;
}

template <Scalar T>
std::unique_ptr<Lister<T>> RandomLister<T>::clone() const {
  return std::make_unique<RandomLister>(*this);
}

// ---------------------------------------------------------------------------
// GreedyLister

template <Scalar T>
std::optional<ListerMove<T>> GreedyLister<T>::next_move(const GameState<T>& state) {
  std::optional<T> best;
  for (int v : state.uncolored()) {
    T r = state.remaining(v);
    if (!best || r > *best) best = r;
  }
  if (!best || !(*best > T(0))) return std::nullopt;
  ListerMove<T> move;
  for (int v : state.uncolored()) {
    if (state.remaining(v) == *best) move.tolerance.emplace(v, T(*best / 2));
  }
  return move;
}

template <Scalar T>
std::unique_ptr<Lister<T>> GreedyLister<T>::clone() const {
  return std::make_unique<GreedyLister>(*this);
}

// ---------------------------------------------------------------------------
// ConstantToleranceLister

template <Scalar T>
ConstantToleranceLister<T>::ConstantToleranceLister(std::unique_ptr<Lister<T>> inner,
                                                    std::vector<T> tolerance)
    : inner_(std::move(inner)), tolerance_(std::move(tolerance)) {}

template <Scalar T>
std::optional<ListerMove<T>> ConstantToleranceLister<T>::next_move(const GameState<T>& state) {
  auto raw = inner_->next_move(state);
  if (!raw) return raw;
  for (auto& [v, t] : raw->tolerance) {
    if (v >= 0 && v < static_cast<int>(tolerance_.size())) t = tolerance_[v];
  }
  return raw;
}

template <Scalar T>
std::unique_ptr<Lister<T>> ConstantToleranceLister<T>::clone() const {
  return std::make_unique<ConstantToleranceLister>(inner_->clone(), tolerance_);
}

// ---------------------------------------------------------------------------
// InteractiveLister

template <Scalar T>
void print_game_state(std::ostream& out, const GameState<T>& state) {
  out << "round " << state.round() + 1 << " | colored " << state.num_colored() << "/"
      << state.num_vertices() << "\n";
  for (int v = 0; v < state.num_vertices(); ++v) {
    out << "  v" << v << ": ";
    if (state.is_colored(v)) {
      out << "color " << *state.colors()[v];
    } else {
      out << "uncolored";
    }
    out << "  spent " << format_scalar(state.spent()[v]) << " / lambda "
        << format_scalar(state.lambda()[v]) << "\n";
  }
}

template <Scalar T>
ListerMove<T> parse_move(std::string_view text) {
  ListerMove<T> move;
  std::istringstream tokens{std::string(text)};
  std::string token;
  while (tokens >> token) {
    auto colon = token.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("expected <vertex>:<tolerance>, got '" + token + "'");
    }
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(token.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad vertex in '" + token + "'");
    }
    if (!move.tolerance.emplace(v, parse_scalar<T>(token.substr(colon + 1))).second) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " listed twice");
    }
  }
  return move;
}

template <Scalar T>
InteractiveLister<T>::InteractiveLister(std::istream& in, std::ostream& out)
    : in_(&in), out_(&out) {}

template <Scalar T>
std::optional<ListerMove<T>> InteractiveLister<T>::next_move(const GameState<T>& state) {
  print_game_state(*out_, state);
  std::string line;
  while (true) {
    *out_ << "lister> " << std::flush;
    if (!std::getline(*in_, line)) return std::nullopt;
    std::istringstream words(line);
    std::string command;
    words >> command;
    if (command.empty()) continue;
    if (command == "quit" || command == "exit") return std::nullopt;
    if (command == "state") {
      print_game_state(*out_, state);
      continue;
    }
    if (command == "help") {
      *out_ << "  present <v>:<tau> [<v>:<tau> ...]   e.g. present 0:1/2 1:0.25\n"
               "  state                               show colors and budgets\n"
               "  quit                                stop presenting\n";
      continue;
    }
    if (command != "present") {
      *out_ << "  unknown command '" << command << "' (try help)\n";
      continue;
    }
    std::string rest;
    std::getline(words, rest);
    try {
      auto move = parse_move<T>(rest);
      for (int v : move.vertices()) {
        if (v < 0 || v >= state.num_vertices()) {
          throw std::invalid_argument("no vertex " + std::to_string(v));
        }
      }
      return move;
    } catch (const std::invalid_argument& e) {
      *out_ << "  " << e.what() << "\n";
    }
  }
}

template <Scalar T>
std::unique_ptr<Lister<T>> InteractiveLister<T>::clone() const {
  throw std::logic_error("interactive lister cannot be cloned");
}

#define MAJORITY_INSTANTIATE_LISTER(T)                                                     \
  template std::optional<ListerMove<T>> filter_move<T>(const ListerMove<T>&,               \
                                                       const GameState<T>&);               \
  template class ListAssignment<T>;                                                        \
  template class ListLister<T>;                                                            \
  template class RankedListLister<T>;                                                      \
  template class CliqueLowerBoundLister<T>;                                                \
  template class RandomLister<T>;                                                          \
  template class GreedyLister<T>;                                                          \
  template class ConstantToleranceLister<T>;                                               \
  template class InteractiveLister<T>;                                                     \
  template void print_game_state<T>(std::ostream&, const GameState<T>&);                   \
  template ListerMove<T> parse_move<T>(std::string_view);

MAJORITY_INSTANTIATE_LISTER(double)
MAJORITY_INSTANTIATE_LISTER(Rational)

}  // namespace majority
