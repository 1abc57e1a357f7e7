#include <sstream>

#include "doctest.h"
#include "majority/engine.hpp"
#include "majority/generators.hpp"
#include "support.hpp"

using namespace majority;
using test_support::digraph;
using test_support::q;

namespace {

ListAssignment<Rational> lists(const std::vector<std::vector<int>>& colors) {
  std::vector<std::vector<ListEntry<Rational>>> out;
  for (const auto& l : colors) {
    out.emplace_back();
    for (int c : l) out.back().push_back({c, std::nullopt});
  }
  return ListAssignment<Rational>(out);
}

ListerMove<Rational> move(const std::vector<std::pair<int, std::string>>& items) {
  ListerMove<Rational> m;
  for (const auto& [v, t] : items) m.tolerance[v] = q(t);
  return m;
}

}  // namespace

TEST_CASE("filter_move") {
  auto g = test_support::k2<Rational>();
  GameState<Rational> s(g, {Rational(1), Rational(1)});
  s.apply(move({{0, "1/2"}}), {0});
  CHECK(*filter_move(move({{0, "1/2"}, {1, "1/2"}}), s) == move({{1, "1/2"}}));
  GameState<Rational> fresh(g, {Rational(1), Rational(1)});
  CHECK(*filter_move(move({{0, "1/2"}, {1, "-0.2"}}), fresh) == move({{0, "1/2"}}));
  CHECK_FALSE(filter_move(move({{0, "1/2"}}), s));
  CHECK_FALSE(filter_move(ListerMove<Rational>{}, fresh));
  CHECK_THROWS_AS(filter_move(move({{2, "1/2"}}), fresh), GameError);
  auto kept = filter_move(move({{0, "0"}}), fresh);
  REQUIRE(kept);
  CHECK(kept->tolerance.at(0) == 0);
}

TEST_CASE("list assignment validation") {
  CHECK_THROWS_AS(lists({{1}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(lists({{0}}), std::invalid_argument);
  CHECK_THROWS_AS(lists({{1, 1}}), std::invalid_argument);
  std::vector<std::vector<ListEntry<Rational>>> mixed{{{1, Rational(1)}, {2, std::nullopt}}};
  CHECK_THROWS_AS(ListAssignment<Rational>{mixed}, std::invalid_argument);
  auto l = lists({{2, 1}, {3}});
  CHECK(l.max_color() == 3);
  CHECK(l.contains(0, 1));
  CHECK_FALSE(l.contains(1, 1));
  CHECK_FALSE(l.ranked());
}

TEST_CASE("list lister") {
  auto g = test_support::k2<Rational>();
  GameState<Rational> s(g, {Rational(1), Rational(1)});
  ListLister<Rational> lister(lists({{1}, {1, 2}}), {q("1/2"), q("1/2")});
  auto m1 = lister.next_move(s);
  REQUIRE(m1);
  CHECK(m1->vertices() == VertexSet{0, 1});
  CHECK(m1->color == 1);
  CHECK(m1->tolerance.at(1) == q("1/2"));
  s.apply(*m1, {0});
  auto m2 = lister.next_move(s);
  CHECK(m2->vertices() == VertexSet{1});
  CHECK(m2->color == 2);
  CHECK_FALSE(lister.next_move(s));

  auto tri = test_support::triangle<Rational>();
  GameState<Rational> t(tri, std::vector<Rational>(3, Rational(1)));
  ListLister<Rational> same(lists({{1, 2}, {1, 2}, {1, 2}}), std::vector<Rational>(3, q("1/2")));
  CHECK(same.next_move(t)->vertices() == VertexSet{0, 1, 2});
  ListLister<Rational> apart(lists({{1}, {2}, {3}}), std::vector<Rational>(3, q("1/2")));
  for (int c = 0; c < 3; ++c) CHECK(apart.next_move(t)->vertices() == VertexSet{c});
}

TEST_CASE("ranked list lister") {
  auto g = test_support::k2<Rational>();
  std::vector<std::vector<ListEntry<Rational>>> l(2, {{1, Rational(1)}, {2, Rational(0)}});
  RankedListLister<Rational> lister(ListAssignment<Rational>(l), g);
  GameState<Rational> s(g, {Rational(1), Rational(1)});
  auto m = lister.next_move(s);
  CHECK(m->tolerance.at(0) == 1);
  CHECK(m->tolerance.at(1) == 1);
  UndirectedPainter<Rational> painter{UndirectedView<Rational>(g)};
  CHECK(painter.respond(*m) == VertexSet{0, 1});
  s.apply(*m, {0, 1});
  CHECK(s.painter_won());

  // Uniform ranks out_weight / k reproduce the list lister at tau 1/k.
  Rng rng(3);
  RandomGraphOptions options;
  options.n = 6;
  auto d = random_digraph<Rational>(rng, options);
  std::vector<std::vector<ListEntry<Rational>>> ranked(6), plain(6);
  for (int v = 0; v < 6; ++v) {
    for (int c : {1, 3, 4}) {
      ranked[v].push_back({c, out_weight(d, v) / 3});
      plain[v].push_back({c, std::nullopt});
    }
  }
  GameState<Rational> st(d, std::vector<Rational>(6, Rational(1)));
  RankedListLister<Rational> a(ListAssignment<Rational>(ranked), d);
  ListLister<Rational> b(ListAssignment<Rational>(plain), std::vector<Rational>(6, q("1/3")));
  for (int round = 0; round < 4; ++round) {
    auto ma = a.next_move(st), mb = b.next_move(st);
    REQUIRE(ma);
    REQUIRE(mb);
    for (int v = 0; v < 6; ++v) {
      if (out_weight(d, v) == 0) continue;  // sinks use rank / 1
      CHECK(ma->tolerance.count(v) == mb->tolerance.count(v));
      if (ma->tolerance.count(v)) CHECK(ma->tolerance.at(v) == mb->tolerance.at(v));
    }
  }
}

TEST_CASE("ranked lister colors a sink at its first presentation") {
  auto path = digraph<Rational>(2, {{0, 1, "2"}});
  std::vector<std::vector<ListEntry<Rational>>> l{{{1, Rational(1)}, {2, Rational(1)}},
                                                  {{1, q("3/5")}}};
  RankedListLister<Rational> lister(ListAssignment<Rational>(l), path);
  GeneralPainter<Rational> painter(path);
  auto trace = play_game<Rational>(path, {Rational(1), Rational(1)}, lister, painter);
  CHECK(trace.winner == Winner::kPainter);
  CHECK(trace.rounds[0].move.tolerance.at(1) == q("3/5"));
  CHECK(trace.coloring[1] == 1);
}

TEST_CASE("clique lower-bound lister") {
  auto k3 = complete_graph<Rational>(3);
  GameState<Rational> s(k3, std::vector<Rational>(3, Rational(1)));
  auto lister = CliqueLowerBoundLister<Rational>::for_clique(3);
  auto m = lister.next_move(s);
  CHECK(m->vertices() == VertexSet{0, 1, 2});
  CHECK(m->tolerance.at(2) == q("1/3"));
  s.apply(*m, {1});
  CHECK(lister.next_move(s)->vertices() == VertexSet{0, 2});
  CHECK_FALSE(lister.next_move(s));
  auto tour = CliqueLowerBoundLister<Rational>::for_regular_tournament(2);
  int rounds = 0;
  GameState<Rational> t(test_support::triangle<Rational>(), std::vector<Rational>(3, Rational(1)));
  while (tour.next_move(t)) ++rounds;
  CHECK(rounds == 2);
}

TEST_CASE("random lister is reproducible and respects budgets") {
  auto g = complete_graph<Rational>(5);
  RandomListerOptions options;
  options.seed = 99;
  RandomLister<Rational> a(options), b(options);
  GameState<Rational> s(g, std::vector<Rational>(5, q("1/10")));
  for (int i = 0; i < 20; ++i) {
    auto ma = a.next_move(s), mb = b.next_move(s);
    REQUIRE(ma);
    CHECK(*ma == *mb);
    for (const auto& [v, t] : ma->tolerance) {
      CHECK(t >= 0);
      CHECK(t <= s.remaining(v));
    }
  }
  GameState<Rational> one(g, std::vector<Rational>(5, Rational(1)));
  one.apply(move({{0, "0"}, {1, "0"}, {2, "0"}, {3, "0"}}), {0, 1, 2, 3});
  CHECK(a.next_move(one)->vertices() == VertexSet{4});
  GameState<Rational> spent(g, std::vector<Rational>(5, q("1/2")));
  spent.apply(move({{0, "1/2"}, {1, "1/2"}, {2, "1/2"}, {3, "1/2"}, {4, "1/2"}}), {});
  CHECK_FALSE(a.next_move(spent));
}

TEST_CASE("greedy lister") {
  auto g = complete_graph<Rational>(3);
  GreedyLister<Rational> lister;
  GameState<Rational> s(g, {Rational(1), Rational(2), Rational(2)});
  auto m = lister.next_move(s);
  CHECK(m->vertices() == VertexSet{1, 2});
  CHECK(m->tolerance.at(1) == 1);
  s.apply(*m, {1});
  m = lister.next_move(s);
  CHECK(m->vertices() == VertexSet{0, 2});
  CHECK(m->tolerance.at(0) == q("1/2"));
  GameState<Rational> done(g, std::vector<Rational>(3, q("1/2")));
  done.apply(move({{0, "1/2"}, {1, "1/2"}, {2, "1/2"}}), {});
  CHECK_FALSE(lister.next_move(done));
}

TEST_CASE("constant tolerance wrapper") {
  auto g = test_support::k2<Rational>();
  auto game = kappa_game<Rational>(g, {q("1/2"), q("1/3")}, {2, 3});
  CHECK(game.lambda == std::vector<Rational>{Rational(1), Rational(1)});
  auto wrapped = game.wrap(std::make_unique<GreedyLister<Rational>>());
  GameState<Rational> s(g, game.lambda);
  auto m = wrapped->next_move(s);
  CHECK(m->tolerance.at(0) == q("1/2"));
  CHECK(m->tolerance.at(1) == q("1/3"));
}

TEST_CASE("interactive lister") {
  auto g = test_support::k2<Rational>();
  GameState<Rational> s(g, {Rational(1), Rational(1)});
  std::istringstream in("help\nbogus\npresent 7:1\npresent 0:x\nstate\npresent 0:1/2 1:0.25\nquit\n");
  std::ostringstream out;
  InteractiveLister<Rational> lister(in, out);
  auto m = lister.next_move(s);
  REQUIRE(m);
  CHECK(*m == move({{0, "1/2"}, {1, "1/4"}}));
  CHECK_FALSE(lister.next_move(s));
  CHECK(out.str().find("unknown command") != std::string::npos);
  CHECK(out.str().find("no vertex 7") != std::string::npos);
  CHECK_THROWS_AS(lister.clone(), std::logic_error);
  CHECK_THROWS_AS(parse_move<Rational>("0:1 0:2"), std::invalid_argument);
}
