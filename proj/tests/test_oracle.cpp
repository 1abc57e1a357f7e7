#include <algorithm>
#include <set>

#include "doctest.h"
#include "majority/generators.hpp"
#include "majority/oracle.hpp"
#include "support.hpp"

using namespace majority;
using test_support::digraph;
using test_support::q;

namespace {

template <Scalar T>
class FixedPainter final : public PainterStrategy<T> {
 public:
  explicit FixedPainter(bool everything) : everything_(everything) {}
  VertexSet respond(const ListerMove<T>& m) override { return everything_ ? m.vertices() : VertexSet{}; }
  std::unique_ptr<PainterStrategy<T>> clone() const override { return std::make_unique<FixedPainter>(*this); }
  std::string name() const override { return everything_ ? "greedy-all" : "idle"; }

 private:
  bool everything_;
};

std::vector<Rational> halves(int n) { return std::vector<Rational>(n, q("1/2")); }

ListAssignment<Rational> plain_lists(const std::vector<std::vector<int>>& colors) {
  std::vector<std::vector<ListEntry<Rational>>> out;
  for (const auto& l : colors) {
    out.emplace_back();
    for (int c : l) out.back().push_back({c, std::nullopt});
  }
  return ListAssignment<Rational>{out};
}

}  // namespace

TEST_CASE("majority colorability examples") {
  auto tri = test_support::triangle<Rational>();
  CHECK_FALSE(is_majority_colorable(tri, halves(3), 2).colorable);
  auto three = is_majority_colorable(tri, halves(3), 3);
  REQUIRE(three.colorable);
  CHECK(verify_coloring(tri, as_partial_coloring(*three.coloring), halves(3)).ok);
  auto k2 = test_support::k2<Rational>();
  CHECK_FALSE(is_majority_colorable(k2, halves(2), 1).colorable);
  CHECK(is_majority_colorable(k2, halves(2), 2).colorable);
  CHECK(is_majority_colorable(k2, {Rational(1), Rational(1)}, 1).colorable);
  auto k3 = complete_graph<Rational>(3);
  CHECK(is_majority_colorable(k3, halves(3), 2).colorable);
  CHECK_FALSE(is_majority_colorable(k3, std::vector<Rational>(3, q("1/3")), 2).colorable);
  CHECK_THROWS_AS(is_majority_colorable(k3, halves(3), 3, 10), OracleLimitError);
  CHECK_THROWS_AS(is_majority_colorable(k3, halves(2), 3), std::invalid_argument);
}

TEST_CASE("list colorability examples") {
  auto k2 = test_support::k2<Rational>();
  CHECK_FALSE(is_colorable_from_lists(k2, plain_lists({{1}, {1}}), halves(2)).colorable);
  auto r = is_colorable_from_lists(k2, plain_lists({{1, 2}, {1}}), halves(2));
  REQUIRE(r.colorable);
  CHECK(*r.coloring == std::vector<int>{2, 1});
  auto tri = test_support::triangle<Rational>();
  CHECK_FALSE(is_colorable_from_lists(tri, plain_lists({{1, 2}, {1, 2}, {1, 2}}), halves(3)).colorable);
  CHECK(is_colorable_from_lists(tri, plain_lists({{1, 2}, {1, 2}, {2, 3}}), halves(3)).colorable);

  auto ranked = [](const std::string& r0, const std::string& r1) {
    return ListAssignment<Rational>{std::vector<std::vector<ListEntry<Rational>>>{{{1, q(r0)}}, {{1, q(r1)}}}};
  };
  CHECK_FALSE(is_colorable_from_ranked_lists(k2, ranked("0", "1")).colorable);
  CHECK(is_colorable_from_ranked_lists(k2, ranked("1", "1")).colorable);
  CHECK_THROWS_AS(is_colorable_from_ranked_lists(k2, plain_lists({{1}, {1}})), std::invalid_argument);
}

TEST_CASE("canonicalize_status") {
  auto [full, perm] = canonicalize_status({2, -1, 1}, Symmetry::kFull);
  CHECK(std::is_sorted(full.begin(), full.end()));
  for (std::size_t i = 0; i < full.size(); ++i) CHECK(full[i] == KappaStatus{2, -1, 1}[perm[i]]);
  auto [cyc, rot] = canonicalize_status({2, 0, 1}, Symmetry::kCyclic);
  CHECK(cyc == KappaStatus{0, 1, 2});
  CHECK(rot == std::vector<int>{1, 2, 0});
  auto [same, id] = canonicalize_status({2, 0, 1}, Symmetry::kNone);
  CHECK(same == KappaStatus{2, 0, 1});
  CHECK(id == std::vector<int>{0, 1, 2});
}

TEST_CASE("kappa game examples") {
  auto k2 = test_support::k2<Rational>();
  auto one = solve_kappa_game(k2, halves(2), {1, 1});
  CHECK(one.winner == Winner::kLister);
  CHECK(check_kappa_witness(k2, halves(2), {1, 1}, one));
  auto two = solve_kappa_game(k2, halves(2), {2, 2});
  CHECK(two.winner == Winner::kPainter);
  CHECK(check_kappa_witness(k2, halves(2), {2, 2}, two));

  auto tri = test_support::triangle<Rational>();
  auto t2 = solve_kappa_game(tri, halves(3), {2, 2, 2});
  CHECK(t2.winner == Winner::kLister);
  CHECK(check_kappa_witness(tri, halves(3), {2, 2, 2}, t2));
  CHECK(solve_kappa_game(tri, halves(3), {4, 4, 4}).winner == Winner::kPainter);

  // A witness for the wrong side does not check.
  auto forged = one;
  forged.winner = Winner::kPainter;
  CHECK_FALSE(check_kappa_witness(k2, halves(2), {1, 1}, forged));
  auto emptied = t2;
  emptied.lister_strategy.clear();
  CHECK_FALSE(check_kappa_witness(tri, halves(3), {2, 2, 2}, emptied));

  KappaSolveOptions small;
  small.max_vertices = 2;
  CHECK_THROWS_AS(solve_kappa_game(tri, halves(3), {2, 2, 2}, small), OracleLimitError);
  CHECK_THROWS_AS(solve_kappa_game(k2, halves(2), {0, 1}), std::invalid_argument);
}

TEST_CASE("symmetry reduction agrees with the plain solver") {
  auto k3 = complete_graph<Rational>(3);
  auto cyc = directed_cycle<Rational>(4);
  for (int kappa = 1; kappa <= 3; ++kappa) {
    KappaSolveOptions full;
    full.symmetry = Symmetry::kFull;
    auto plain = solve_kappa_game(k3, halves(3), std::vector<int>(3, kappa));
    auto reduced = solve_kappa_game(k3, halves(3), std::vector<int>(3, kappa), full);
    CHECK(plain.winner == reduced.winner);
    CHECK(reduced.states <= plain.states);
    CHECK(check_kappa_witness(k3, halves(3), std::vector<int>(3, kappa), reduced));

    KappaSolveOptions rot;
    rot.symmetry = Symmetry::kCyclic;
    auto a = solve_kappa_game(cyc, halves(4), std::vector<int>(4, kappa));
    auto b = solve_kappa_game(cyc, halves(4), std::vector<int>(4, kappa), rot);
    CHECK(a.winner == b.winner);
    CHECK(check_kappa_witness(cyc, halves(4), std::vector<int>(4, kappa), b));
  }
  KappaSolveOptions full;
  full.symmetry = Symmetry::kFull;
  CHECK_THROWS_AS(solve_kappa_game(directed_cycle<Rational>(3), halves(3), {2, 2, 2}, full),
                  std::invalid_argument);
  CHECK_THROWS_AS(solve_kappa_game(k3, halves(3), {2, 2, 1}, full), std::invalid_argument);
}

TEST_CASE("strategy search against fixed painters") {
  auto tri = test_support::triangle<Rational>();
  auto game = kappa_game<Rational>(tri, halves(3), {2, 2, 2});
  FixedPainter<Rational> idle(false);
  auto win = find_lister_win_against(tri, game, idle);
  REQUIRE(win);
  CHECK(win->size() == 2);
  FixedPainter<Rational> reckless(true);
  CHECK_THROWS_AS(find_lister_win_against(tri, game, reckless), GameError);

  auto safe = kappa_game<Rational>(tri, halves(3), {4, 4, 4});
  GeneralPainter<Rational> painter(tri);
  CHECK_FALSE(find_lister_win_against(tri, safe, painter));
  StrategySearchOptions slow;
  slow.memoize_states = false;
  CHECK_FALSE(find_lister_win_against(tri, safe, painter, slow));
  // Fewer presentations than the guarantee needs: the general painter loses.
  CHECK(find_lister_win_against(tri, game, painter));
}

TEST_CASE("clique lister forces a win") {
  auto k2 = test_support::k2<Rational>();
  auto r = lister_forces_win(k2, halves(2), CliqueLowerBoundLister<Rational>::for_clique(2));
  CHECK(r.forced);
  CHECK(r.leaves > 0);
  auto k3 = complete_graph<Rational>(3);
  CHECK(lister_forces_win(k3, std::vector<Rational>(3, q("2/3")), CliqueLowerBoundLister<Rational>::for_clique(3))
            .forced);
  CHECK_FALSE(lister_forces_win(k2, {Rational(1), Rational(1)}, CliqueLowerBoundLister<Rational>::for_clique(2))
                  .forced);
  auto tri = test_support::triangle<Rational>();
  CHECK(lister_forces_win(tri, std::vector<Rational>(3, Rational(1)),
                          CliqueLowerBoundLister<Rational>::for_regular_tournament(2))
            .forced);
}

TEST_CASE("digraphs up to isomorphism") {
  CHECK(digraphs_up_to_isomorphism<Rational>(0).size() == 1);
  CHECK(digraphs_up_to_isomorphism<Rational>(1).size() == 1);
  CHECK(digraphs_up_to_isomorphism<Rational>(2).size() == 3);
  CHECK(digraphs_up_to_isomorphism<Rational>(3).size() == 16);
  auto four = digraphs_up_to_isomorphism<double>(4);
  CHECK(four.size() == 218);
  std::set<int> edge_counts;
  for (const auto& g : four) edge_counts.insert(static_cast<int>(g.num_edges()));
  CHECK(*edge_counts.begin() == 0);
  CHECK(*edge_counts.rbegin() == 12);
  CHECK_THROWS_AS(digraphs_up_to_isomorphism<Rational>(5), OracleLimitError);
}

TEST_CASE("a painter win in the kappa game gives colorability from every kappa-list") {
  Rng rng(404);
  const std::vector<std::vector<int>> pairs{{1, 2}, {1, 3}, {2, 3}};
  for (int trial = 0; trial < 30; ++trial) {
    RandomGraphOptions options;
    options.n = 2 + trial % 2;
    auto g = random_digraph<Rational>(rng, options);
    auto tau = halves(options.n);
    for (int kappa = 1; kappa <= 2; ++kappa) {
      if (solve_kappa_game(g, tau, std::vector<int>(options.n, kappa)).winner != Winner::kPainter) continue;
      // Every assignment of kappa-subsets of {1,2,3}.
      std::vector<std::vector<int>> choices;
      for (int c = 1; c <= 3; ++c) choices.push_back(kappa == 1 ? std::vector<int>{c} : pairs[c - 1]);
      int total = 1;
      for (int v = 0; v < options.n; ++v) total *= 3;
      for (int code = 0; code < total; ++code) {
        std::vector<std::vector<int>> l;
        for (int v = 0, x = code; v < options.n; ++v, x /= 3) l.push_back(choices[x % 3]);
        CHECK(is_colorable_from_lists(g, plain_lists(l), tau).colorable);
      }
    }
  }
}

TEST_CASE("the general painter survives where the solver says painter wins") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& g : digraphs_up_to_isomorphism<Rational>(n)) {
      auto tau = halves(n);
      for (int kappa = 1; kappa <= 4; ++kappa) {
        auto game = kappa_game<Rational>(g, tau, std::vector<int>(n, kappa));
        GeneralPainter<Rational> painter(g);
        const bool painter_survives = !find_lister_win_against(g, game, painter);
        const auto solved = solve_kappa_game(g, tau, std::vector<int>(n, kappa));
        // A concrete painter can only do worse than optimal play.
        if (painter_survives) CHECK(solved.winner == Winner::kPainter);
      }
    }
  }
}
