#include "doctest.h"
#include "majority/engine.hpp"
#include "majority/generators.hpp"
#include "support.hpp"

using namespace majority;
using test_support::digraph;
using test_support::q;

namespace {

template <Scalar T>
ListerMove<T> present(const std::vector<std::pair<int, std::string>>& items) {
  ListerMove<T> m;
  for (const auto& [v, t] : items) m.tolerance[v] = parse_scalar<T>(t);
  return m;
}

// Presents every uncolored vertex with the same tolerance each round.
template <Scalar T>
class PresentAll final : public Lister<T> {
 public:
  explicit PresentAll(T tau) : tau_(tau) {}
  std::optional<ListerMove<T>> next_move(const GameState<T>& s) override {
    ListerMove<T> m;
    for (int v : s.uncolored()) m.tolerance[v] = tau_;
    return m;
  }
  std::unique_ptr<Lister<T>> clone() const override { return std::make_unique<PresentAll>(*this); }
  std::string name() const override { return "all"; }

 private:
  T tau_;
};

template <Scalar T>
bool valid_answer(const BasicDigraph<T>& g, const ListerMove<T>& m, const VertexSet& y) {
  for (int v : y) {
    if (!m.tolerance.count(v)) return false;
    T mono(0);
    for (const auto& arc : g.out_arcs(v))
      if (std::binary_search(y.begin(), y.end(), arc.to)) mono += arc.weight;
    if (mono > m.tolerance.at(v) * out_weight(g, v)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("undirected painter on K_2") {
  UndirectedPainter<Rational> p{UndirectedView<Rational>(test_support::k2<Rational>())};
  CHECK(p.respond(present<Rational>({{0, "1/2"}, {1, "1/2"}})) == VertexSet{0});
  CHECK(p.last_ranks().at(0) == q("1/2"));
  CHECK(p.respond(present<Rational>({{1, "1/2"}})) == VertexSet{1});
}

TEST_CASE("undirected painter colors everything when tau >= 1") {
  Rng rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    RandomGraphOptions options;
    options.n = 1 + trial % 10;
    auto g = random_undirected<Rational>(rng, options);
    UndirectedPainter<Rational> p{UndirectedView<Rational>(g)};
    ListerMove<Rational> m;
    for (int v = 0; v < options.n; ++v) m.tolerance[v] = Rational(1) + Rational(trial % 3, 2);
    auto y = p.respond(m);
    CHECK(y == m.vertices());
  }
}

TEST_CASE("undirected painter: unselected vertices lose more than their rank") {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    RandomGraphOptions options;
    options.n = 2 + trial % 9;
    auto g = random_undirected<Rational>(rng, options);
    UndirectedPainter<Rational> p{UndirectedView<Rational>(g)};
    GameState<Rational> state(g, std::vector<Rational>(options.n, Rational(1)));
    RandomListerOptions lo;
    lo.seed = trial;
    RandomLister<Rational> lister(lo);
    while (!state.painter_won() && !state.lister_winner_vertex()) {
      auto raw = lister.next_move(state);
      REQUIRE(raw);
      auto move = filter_move(*raw, state);
      if (!move) continue;
      auto y = p.respond(*move);
      CHECK(valid_answer(g, *move, y));
      for (int v : move->vertices()) {
        if (std::binary_search(y.begin(), y.end(), v)) continue;
        Rational newly = 0;
        for (const auto& arc : g.out_arcs(v))
          if (std::binary_search(y.begin(), y.end(), arc.to)) newly += arc.weight;
        CHECK(newly > p.last_ranks().at(v));
      }
      state.apply(*move, y);
    }
    CHECK(state.painter_won());
  }
}

TEST_CASE("scc painter on the directed triangle") {
  auto tri = test_support::triangle<Rational>();
  SccPainter<Rational> p(tri);
  auto y = p.respond(present<Rational>({{0, "1/2"}, {1, "1/2"}, {2, "1/2"}}));
  CHECK(y.size() == 1);
  CHECK(p.side_game().last_ranks().at(0) == q("1/6"));

  PresentAll<Rational> lister(q("1/2"));
  SccPainter<Rational> fresh(tri);
  auto trace = play_game<Rational>(tri, std::vector<Rational>(3, Rational(2)), lister, fresh);
  CHECK(trace.winner == Winner::kPainter);
  CHECK(trace.rounds.size() <= 4);
  CHECK(trace.rounds[0].painted.size() == 1);
}

TEST_CASE("scc painter on a 2-cycle with tau 1 colors one vertex per round") {
  auto two = digraph<Rational>(2, {{0, 1, "1"}, {1, 0, "1"}});
  SccPainter<Rational> p(two);
  // Inner rank 1/2 * 1 against symmetrized edge weight 1.
  CHECK(p.respond(present<Rational>({{0, "1"}, {1, "1"}})) == VertexSet{0});
  CHECK(p.side_game().last_ranks().at(1) == q("1/2"));
  CHECK(p.respond(present<Rational>({{1, "1"}})) == VertexSet{1});
}

TEST_CASE("scc painter excludes zero-tolerance vertices facing selected neighbours") {
  auto tri = test_support::triangle<Rational>();
  SccPainter<Rational> p(tri);
  auto y = p.respond(present<Rational>({{0, "0"}, {1, "1"}, {2, "1"}}));
  // 1 and 2 carry inner rank 1/3 each; 0 has rank 0.
  CHECK(std::find(y.begin(), y.end(), 0) == y.end());
  CHECK(valid_answer(tri, present<Rational>({{0, "0"}, {1, "1"}, {2, "1"}}), y));
  CHECK_THROWS_AS(SccPainter<Rational>(digraph<Rational>(2, {{0, 1, "1"}})), std::invalid_argument);
  CHECK_THROWS_AS(SccPainter<Rational>(BasicDigraph<Rational>(1, {})), std::invalid_argument);
}

TEST_CASE("edgeless painter") {
  EdgelessPainter<Rational> p(BasicDigraph<Rational>(2, {}));
  CHECK(p.respond(present<Rational>({{0, "0"}})) == VertexSet{0});
  EdgelessPainter<Rational> both(BasicDigraph<Rational>(2, {}));
  CHECK(both.respond(present<Rational>({{0, "1/3"}, {1, "2"}})) == VertexSet{0, 1});
  CHECK_THROWS_AS(EdgelessPainter<Rational>(test_support::k2<Rational>()), std::invalid_argument);
  // A negative tolerance never reaches the painter: the referee filters it.
  GameState<Rational> s(BasicDigraph<Rational>(1, {}), {Rational(1)});
  CHECK_FALSE(filter_move(present<Rational>({{0, "-0.3"}}), s));
}

TEST_CASE("general painter on the path 0 -> 1") {
  auto path = digraph<Rational>(2, {{0, 1, "1"}});
  GeneralPainter<Rational> p(path);
  CHECK(p.components().size() == 2);
  CHECK(p.respond(present<Rational>({{0, "1/2"}, {1, "1/2"}})) == VertexSet{1});
  const auto& red = p.last_reductions();
  auto it = std::find_if(red.begin(), red.end(), [](const auto& r) { return r.vertex == 0; });
  REQUIRE(it != red.end());
  CHECK(it->rank == q("-1/2"));
  CHECK(it->weight_to_selected == 1);
  CHECK_FALSE(it->inner_tolerance);
  CHECK(p.respond(present<Rational>({{0, "1/2"}})) == VertexSet{0});
  auto again = std::find_if(p.last_reductions().begin(), p.last_reductions().end(),
                            [](const auto& r) { return r.vertex == 0; });
  CHECK(again->rank == q("1/2"));
}

TEST_CASE("general painter matches the scc painter on strongly connected graphs") {
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    RandomGraphOptions options;
    options.n = 2 + trial % 7;
    auto g = random_strongly_connected<Rational>(rng, options);
    GeneralPainter<Rational> general(g);
    SccPainter<Rational> scc(g);
    GameState<Rational> state(g, std::vector<Rational>(options.n, Rational(2)));
    RandomListerOptions lo;
    lo.seed = 100 + trial;
    RandomLister<Rational> lister(lo);
    while (!state.painter_won() && !state.lister_winner_vertex()) {
      auto move = filter_move(*lister.next_move(state), state);
      if (!move) continue;
      auto y = general.respond(*move);
      CHECK(y == scc.respond(*move));
      state.apply(*move, y);
    }
  }
}

TEST_CASE("rank reduction keeps tau * total exactly") {
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    RandomGraphOptions options;
    options.n = 2 + trial % 9;
    auto g = random_multi_component<Rational>(rng, options);
    GeneralPainter<Rational> p(g);
    GameState<Rational> state(g, std::vector<Rational>(options.n, Rational(2)));
    RandomListerOptions lo;
    lo.seed = trial;
    RandomLister<Rational> lister(lo);
    while (!state.painter_won() && !state.lister_winner_vertex()) {
      auto move = filter_move(*lister.next_move(state), state);
      if (!move) continue;
      auto y = p.respond(*move);
      CHECK(valid_answer(g, *move, y));
      for (const auto& r : p.last_reductions()) {
        CHECK(r.tolerance == move->tolerance.at(r.vertex));
        CHECK(r.rank == r.tolerance * r.total_weight - r.weight_to_selected);
        // Weight into already selected downstream vertices, recomputed.
        Rational down = 0;
        for (const auto& arc : g.out_arcs(r.vertex)) {
          if (p.components().component_of[arc.to] != r.component &&
              std::binary_search(y.begin(), y.end(), arc.to)) {
            down += arc.weight;
          }
        }
        CHECK(down == r.weight_to_selected);
        if (r.inner_tolerance && r.internal_weight > 0) {
          CHECK(*r.inner_tolerance * r.internal_weight + r.weight_to_selected ==
                r.tolerance * r.total_weight);
        }
        if (r.rank < 0) CHECK_FALSE(r.inner_tolerance);
      }
      state.apply(*move, y);
    }
    CHECK(state.painter_won());
  }
}

TEST_CASE("painter factory and clones") {
  auto tri = test_support::triangle<double>();
  CHECK(parse_painter_kind("general") == PainterKind::kGeneral);
  CHECK(painter_kind_name(PainterKind::kScc) == "scc");
  CHECK_THROWS_AS(parse_painter_kind("bogus"), std::invalid_argument);
  auto p = make_painter<double>(PainterKind::kGeneral, tri);
  auto first = p->respond(present<double>({{0, "0.5"}, {1, "0.5"}, {2, "0.5"}}));
  ListerMove<double> rest;
  for (int v = 0; v < 3; ++v)
    if (!std::binary_search(first.begin(), first.end(), v)) rest.tolerance[v] = 0.5;
  auto copy = p->clone();
  auto a = p->respond(rest);
  auto b = copy->respond(rest);
  CHECK(a == b);
  CHECK_THROWS_AS(make_painter<double>(PainterKind::kUndirected, tri), GraphError);
}
