#pragma once

// Painter strategies for the ranked-majority painting game.
//
//   UndirectedPainter  ranks rho(v) = tau(v) * out_weight(v) and answers with a
//                      kernel; wins with budget 1 on undirected graphs.
//   SccPainter         halves the tolerances and replays the move against an
//                      UndirectedPainter on the spectral symmetrization; wins
//                      with budget 2 on strongly connected digraphs.
//   EdgelessPainter    colors every presented vertex with tolerance >= 0.
//   GeneralPainter     one inner strategy per strongly connected component,
//                      answered sink-first with ranks reduced by the weight
//                      already sent to selected vertices downstream; wins
//                      with budget 2 on any digraph.
//
// Every strategy expects filtered moves (uncolored vertices, tolerances >= 0).

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "majority/game_state.hpp"
#include "majority/kernel.hpp"
#include "majority/spectral.hpp"

namespace majority {

template <Scalar T>
class PainterStrategy {
 public:
  virtual ~PainterStrategy() = default;

  virtual VertexSet respond(const ListerMove<T>& move) = 0;
  virtual std::unique_ptr<PainterStrategy> clone() const = 0;
  virtual std::string name() const = 0;
};

template <Scalar T>
class UndirectedPainter final : public PainterStrategy<T> {
 public:
  explicit UndirectedPainter(UndirectedView<T> graph, KernelOptions options = {});

  VertexSet respond(const ListerMove<T>& move) override;
  std::unique_ptr<PainterStrategy<T>> clone() const override;
  std::string name() const override { return "undirected"; }

  const UndirectedView<T>& graph() const { return graph_; }
  // Ranks and kernel certificate of the most recent round.
  const RankFunction<T>& last_ranks() const { return last_ranks_; }
  const KernelCertificate<T>& last_certificate() const { return last_certificate_; }

 private:
  UndirectedView<T> graph_;
  KernelOptions options_;
  std::vector<T> total_weight_;
  std::vector<char> colored_;
  RankFunction<T> last_ranks_;
  KernelCertificate<T> last_certificate_;
};

template <Scalar T>
class SccPainter final : public PainterStrategy<T> {
 public:
  // Throws std::invalid_argument unless g is strongly connected with at least
  // two vertices; propagates SpectralError.
  explicit SccPainter(const BasicDigraph<T>& graph, KernelOptions options = {},
                      double eigen_tolerance = 1e-10);

  VertexSet respond(const ListerMove<T>& move) override;
  std::unique_ptr<PainterStrategy<T>> clone() const override;
  std::string name() const override { return "scc"; }

  const SpectralTransfer<T>& transfer() const { return transfer_; }
  const UndirectedPainter<T>& side_game() const { return inner_; }

 private:
  SpectralTransfer<T> transfer_;
  UndirectedPainter<T> inner_;
};

template <Scalar T>
class EdgelessPainter final : public PainterStrategy<T> {
 public:
  // Throws std::invalid_argument if g has an edge.
  explicit EdgelessPainter(const BasicDigraph<T>& graph);

  VertexSet respond(const ListerMove<T>& move) override;
  std::unique_ptr<PainterStrategy<T>> clone() const override;
  std::string name() const override { return "edgeless"; }

 private:
  std::vector<char> colored_;
};

// Per-vertex bookkeeping of one rank reduction step.
template <Scalar T>
struct RankReduction {
  int vertex = 0;
  int component = 0;
  T tolerance{};             // tau_i(v) presented in the real game
  T total_weight{};          // sum over all out-edges
  T weight_to_selected{};    // into vertices already selected downstream
  T internal_weight{};       // into v's own component
  T rank{};                  // tau * total - weight_to_selected
  std::optional<T> inner_tolerance;  // empty when the vertex was dropped
};

template <Scalar T>
class GeneralPainter final : public PainterStrategy<T> {
 public:
  explicit GeneralPainter(const BasicDigraph<T>& graph, KernelOptions options = {},
                          double eigen_tolerance = 1e-10);
  GeneralPainter(const GeneralPainter& other);
  GeneralPainter& operator=(const GeneralPainter&) = delete;

  VertexSet respond(const ListerMove<T>& move) override;
  std::unique_ptr<PainterStrategy<T>> clone() const override;
  std::string name() const override { return "general"; }

  const Condensation& components() const { return condensation_; }
  const PainterStrategy<T>& component_strategy(int c) const { return *parts_[c].strategy; }
  const std::vector<RankReduction<T>>& last_reductions() const { return last_reductions_; }

 private:
  struct Part {
    InducedSubgraph<T> sub;
    std::unique_ptr<PainterStrategy<T>> strategy;
  };

  BasicDigraph<T> graph_;
  Condensation condensation_;
  std::vector<Part> parts_;
  std::vector<T> total_weight_;
  std::vector<char> colored_;
  std::vector<RankReduction<T>> last_reductions_;
};

enum class PainterKind { kUndirected, kScc, kGeneral, kEdgeless };

PainterKind parse_painter_kind(std::string_view name);
std::string_view painter_kind_name(PainterKind kind);

template <Scalar T>
std::unique_ptr<PainterStrategy<T>> make_painter(PainterKind kind, const BasicDigraph<T>& graph,
                                                 KernelOptions options = {});

}  // namespace majority
