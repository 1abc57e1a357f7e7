#include "majority/painter.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace majority {
namespace {

template <Scalar T>
void check_filtered(const ListerMove<T>& move, const std::vector<char>& colored,
                    std::string_view who) {
  const int n = static_cast<int>(colored.size());
  for (const auto& [v, t] : move.tolerance) {
    if (v < 0 || v >= n) {
      throw std::logic_error(std::string(who) + " painter: vertex " + std::to_string(v) +
                             " out of range");
    }
    if (colored[v]) {
      throw std::logic_error(std::string(who) + " painter: vertex " + std::to_string(v) +
                             " is already colored");
    }
    if (t < T(0)) {
      throw std::logic_error(std::string(who) + " painter: negative tolerance at vertex " +
                             std::to_string(v));
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// UndirectedPainter

template <Scalar T>
UndirectedPainter<T>::UndirectedPainter(UndirectedView<T> graph, KernelOptions options)
    : graph_(std::move(graph)),
      options_(options),
      colored_(graph_.num_vertices(), 0) {
  total_weight_.reserve(graph_.num_vertices());
  for (int v = 0; v < graph_.num_vertices(); ++v) {
    total_weight_.push_back(out_weight(graph_.graph(), v));
  }
}

template <Scalar T>
VertexSet UndirectedPainter<T>::respond(const ListerMove<T>& move) {
  check_filtered(move, colored_, "undirected");
  last_ranks_.clear();
  for (const auto& [v, t] : move.tolerance) last_ranks_[v] = t * total_weight_[v];
  last_certificate_ = select_kernel(graph_, move.vertices(), last_ranks_, options_);
  for (int v : last_certificate_.selected) colored_[v] = 1;
  return last_certificate_.selected;
}

template <Scalar T>
std::unique_ptr<PainterStrategy<T>> UndirectedPainter<T>::clone() const {
  return std::make_unique<UndirectedPainter>(*this);
}

// ---------------------------------------------------------------------------
// SccPainter

namespace {

template <Scalar T>
const BasicDigraph<T>& require_strongly_connected(const BasicDigraph<T>& g) {
  if (g.num_vertices() < 2 || !condensation(g).strongly_connected()) {
    throw std::invalid_argument(
        "scc painter: graph must be strongly connected with at least two vertices");
  }
  return g;
}

}  // namespace

template <Scalar T>
SccPainter<T>::SccPainter(const BasicDigraph<T>& graph, KernelOptions options,
                          double eigen_tolerance)
    : transfer_(spectral_transfer(require_strongly_connected(graph), eigen_tolerance)),
      inner_(transfer_.symmetric, options) {}

template <Scalar T>
VertexSet SccPainter<T>::respond(const ListerMove<T>& move) {
  // The side game runs with half the tolerance on the symmetrization, where
  // v's incident weight is 2 x_v; its kernel ranks are therefore tau(v) x_v.
  ListerMove<T> side;
  side.color = move.color;
  for (const auto& [v, t] : move.tolerance) side.tolerance[v] = t / 2;
  return inner_.respond(side);
}

template <Scalar T>
std::unique_ptr<PainterStrategy<T>> SccPainter<T>::clone() const {
  return std::make_unique<SccPainter>(*this);
}

// ---------------------------------------------------------------------------
// EdgelessPainter

template <Scalar T>
EdgelessPainter<T>::EdgelessPainter(const BasicDigraph<T>& graph)
    : colored_(graph.num_vertices(), 0) {
  if (graph.num_edges() != 0) throw std::invalid_argument("edgeless painter: graph has edges");
}

template <Scalar T>
VertexSet EdgelessPainter<T>::respond(const ListerMove<T>& move) {
  check_filtered(move, colored_, "edgeless");
  VertexSet painted;
  for (const auto& [v, t] : move.tolerance) {
    if (t >= T(0)) {
      painted.push_back(v);
      colored_[v] = 1;
    }
  }
  return painted;
}

template <Scalar T>
std::unique_ptr<PainterStrategy<T>> EdgelessPainter<T>::clone() const {
  return std::make_unique<EdgelessPainter>(*this);
}

// ---------------------------------------------------------------------------
// GeneralPainter

template <Scalar T>
GeneralPainter<T>::GeneralPainter(const BasicDigraph<T>& graph, KernelOptions options,
                                  double eigen_tolerance)
    : graph_(graph),
      condensation_(condensation(graph)),
      colored_(graph.num_vertices(), 0) {
  for (int v = 0; v < graph_.num_vertices(); ++v) total_weight_.push_back(out_weight(graph_, v));
  for (const auto& members : condensation_.components) {
    Part part{induced_subgraph(graph_, members), nullptr};
    if (part.sub.graph.num_edges() == 0) {
      part.strategy = std::make_unique<EdgelessPainter<T>>(part.sub.graph);
    } else {
      part.strategy = std::make_unique<SccPainter<T>>(part.sub.graph, options, eigen_tolerance);
    }
    parts_.push_back(std::move(part));
  }
}

template <Scalar T>
GeneralPainter<T>::GeneralPainter(const GeneralPainter& other)
    : PainterStrategy<T>(other),
      graph_(other.graph_),
      condensation_(other.condensation_),
      total_weight_(other.total_weight_),
      colored_(other.colored_),
      last_reductions_(other.last_reductions_) {
  for (const auto& part : other.parts_) parts_.push_back({part.sub, part.strategy->clone()});
}

template <Scalar T>
VertexSet GeneralPainter<T>::respond(const ListerMove<T>& move) {
  check_filtered(move, colored_, "general");
  last_reductions_.clear();
  const int num_parts = static_cast<int>(parts_.size());
  std::vector<std::vector<int>> presented(num_parts);
  for (const auto& [v, t] : move.tolerance) presented[condensation_.component_of[v]].push_back(v);

  std::vector<char> selected(graph_.num_vertices(), 0);
  // Sink components first: every edge leaving a component points to one that
  // has already answered this round.
  for (int c = num_parts - 1; c >= 0; --c) {
    if (presented[c].empty()) continue;
    Part& part = parts_[c];
    ListerMove<T> inner;
    inner.color = move.color;
    for (int v : presented[c]) {
      RankReduction<T> r;
      r.vertex = v;
      r.component = c;
      r.tolerance = move.tolerance.at(v);
      r.total_weight = total_weight_[v];
      r.weight_to_selected = T(0);
      r.internal_weight = T(0);
      for (const auto& arc : graph_.out_arcs(v)) {
        if (condensation_.component_of[arc.to] == c) {
          r.internal_weight += arc.weight;
        } else if (selected[arc.to]) {
          r.weight_to_selected += arc.weight;
        }
      }
      r.rank = r.tolerance * r.total_weight - r.weight_to_selected;
      if (r.rank >= T(0)) {
        T inner_tolerance;
        if (r.internal_weight == r.total_weight) {
          inner_tolerance = r.tolerance;  // no edges leave the component
        } else if (r.internal_weight > T(0)) {
          inner_tolerance = r.rank / r.internal_weight;
        } else {
          // No internal edges: only the sign matters to the edgeless strategy.
          inner_tolerance = r.rank;
        }
        r.inner_tolerance = inner_tolerance;
        inner.tolerance[part.sub.to_local[v]] = inner_tolerance;
      }
      last_reductions_.push_back(std::move(r));
    }
    if (inner.empty()) continue;
    for (int local : part.strategy->respond(inner)) selected[part.sub.to_original[local]] = 1;
  }
  VertexSet painted;
  for (int v = 0; v < graph_.num_vertices(); ++v) {
    if (selected[v]) {
      painted.push_back(v);
      colored_[v] = 1;
    }
  }
  return painted;
}

template <Scalar T>
std::unique_ptr<PainterStrategy<T>> GeneralPainter<T>::clone() const {
  return std::make_unique<GeneralPainter>(*this);
}

// ---------------------------------------------------------------------------

PainterKind parse_painter_kind(std::string_view name) {
  if (name == "undirected") return PainterKind::kUndirected;
  if (name == "scc") return PainterKind::kScc;
  if (name == "general") return PainterKind::kGeneral;
  if (name == "edgeless") return PainterKind::kEdgeless;
  throw std::invalid_argument("unknown painter '" + std::string(name) +
                              "' (expected undirected, scc, general or edgeless)");
}

std::string_view painter_kind_name(PainterKind kind) {
  switch (kind) {
    case PainterKind::kUndirected: return "undirected";
    case PainterKind::kScc: return "scc";
    case PainterKind::kGeneral: return "general";
    case PainterKind::kEdgeless: return "edgeless";
  }
  return "?";
}

template <Scalar T>
std::unique_ptr<PainterStrategy<T>> make_painter(PainterKind kind, const BasicDigraph<T>& graph,
                                                 KernelOptions options) {
  switch (kind) {
    case PainterKind::kUndirected:
      return std::make_unique<UndirectedPainter<T>>(UndirectedView<T>(graph), options);
    case PainterKind::kScc:
      return std::make_unique<SccPainter<T>>(graph, options);
    case PainterKind::kGeneral:
      return std::make_unique<GeneralPainter<T>>(graph, options);
    case PainterKind::kEdgeless:
      return std::make_unique<EdgelessPainter<T>>(graph);
  }
  throw std::invalid_argument("make_painter: unknown kind");
}

#define MAJORITY_INSTANTIATE_PAINTER(T)                                                    \
  template class UndirectedPainter<T>;                                                     \
  template class SccPainter<T>;                                                            \
  template class EdgelessPainter<T>;                                                       \
  template class GeneralPainter<T>;                                                        \
  template std::unique_ptr<PainterStrategy<T>> make_painter<T>(PainterKind,                \
                                                               const BasicDigraph<T>&,     \
                                                               KernelOptions);

MAJORITY_INSTANTIATE_PAINTER(double)
MAJORITY_INSTANTIATE_PAINTER(Rational)

}  // namespace majority
