#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "majority/formats.hpp"
#include "majority/oracle.hpp"
#include "majority/spectral.hpp"

namespace majority::cli {

namespace {

// Input problems that should exit with code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PlayConfig {
  std::string graph;
  std::string lambda;
  std::string tau;
  std::string kappa;
  std::string painter = "general";
  std::string lister = "greedy";
  std::string lists;
  std::string trace;
  std::uint64_t seed = 1;
  int k = 0;
  bool interactive = false;
  bool exact = false;
};

struct VerifyConfig {
  std::string claim = "all";
  int n = 10;
  int trials = 100;
  std::uint64_t seed = 1;
  int threads = 1;
  std::string report;
  bool exact = false;
};

struct SolveConfig {
  std::string graph;
  std::string tau;
  std::string kappa;
  std::string symmetry = "none";
  int max_vertices = 6;
  bool strategy = false;
  bool exact = false;
};

struct KernelConfig {
  std::string graph;
  std::string ranks;
  std::string rank_file;
  std::string method = "auto";
  bool exact = false;
};

struct SpectralConfig {
  std::string graph;
  bool exact = false;
};

struct CheckConfig {
  std::string graph;
  std::string coloring;
  std::string tau;
  std::string lists;
  std::string trace;
  bool exact = false;
};

bool any_fraction(std::initializer_list<const std::string*> values) {
  return std::any_of(values.begin(), values.end(),
                     [](const std::string* s) { return is_fraction_literal(*s); });
}

bool file_has_fraction(const std::string& path) {
  if (path.empty()) return false;
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return is_fraction_literal(text);
}

std::optional<std::int64_t> round_cap_from_env() {
  const char* raw = std::getenv("MP_ROUND_CAP");
  if (!raw || !*raw) return std::nullopt;
  try {
    std::size_t used = 0;
    long long cap = std::stoll(raw, &used);
    if (used != std::string(raw).size() || cap < 1) throw std::invalid_argument(raw);
    return cap;
  } catch (const std::exception&) {
    throw UsageError(std::string("MP_ROUND_CAP must be a positive integer, got '") + raw + "'");
  }
}

std::string join_coloring(const std::vector<std::optional<int>>& coloring) {
  std::ostringstream out;
  for (std::size_t v = 0; v < coloring.size(); ++v) {
    out << (v ? " " : "");
    if (coloring[v]) {
      out << *coloring[v];
    } else {
      out << '-';
    }
  }
  return out.str();
}

std::string format_status(const KappaStatus& s) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << (i ? "," : "");
    if (s[i] < 0) {
      out << 'c';
    } else {
      out << s[i];
    }
  }
  out << ')';
  return out.str();
}

// Reports when the wrapped (interactive) source gives up.
template <Scalar T>
class QuitAware final : public Lister<T> {
 public:
  QuitAware(std::unique_ptr<Lister<T>> inner, bool* quit) : inner_(std::move(inner)), quit_(quit) {}
  std::optional<ListerMove<T>> next_move(const GameState<T>& state) override {
    auto move = inner_->next_move(state);
    if (!move) *quit_ = true;
    return move;
  }
  std::unique_ptr<Lister<T>> clone() const override {
    return std::make_unique<QuitAware>(inner_->clone(), quit_);
  }
  std::string name() const override { return inner_->name(); }

 private:
  std::unique_ptr<Lister<T>> inner_;
  bool* quit_;
};

// ---------------------------------------------------------------------------
// play

template <Scalar T>
int play(const PlayConfig& cfg, std::istream& in, std::ostream& out) {
  const auto g = read_graph_file<T>(cfg.graph);
  const int n = g.num_vertices();
  const bool kappa_mode = !cfg.tau.empty();
  if (kappa_mode == !cfg.lambda.empty()) throw UsageError("give exactly one of --lambda or --tau/--kappa");
  if (kappa_mode && cfg.kappa.empty()) throw UsageError("--tau needs --kappa");

  std::optional<KappaGame<T>> game;
  std::vector<T> lambda;
  if (kappa_mode) {
    game = kappa_game(g, parse_per_vertex<T>(cfg.tau, n), parse_per_vertex_int(cfg.kappa, n));
    lambda = game->lambda;
  } else {
    lambda = parse_per_vertex<T>(cfg.lambda, n);
  }

  std::string lister_kind = cfg.interactive ? "interactive" : cfg.lister;
  std::unique_ptr<Lister<T>> lister;
  std::optional<ListAssignment<T>> lists;
  bool quit = false;
  if (lister_kind == "greedy") {
    lister = std::make_unique<GreedyLister<T>>();
  } else if (lister_kind == "random") {
    RandomListerOptions options;
    options.seed = cfg.seed;
    lister = std::make_unique<RandomLister<T>>(options);
  } else if (lister_kind == "list" || lister_kind == "ranked") {
    if (cfg.lists.empty()) throw UsageError("--lister " + lister_kind + " needs --lists");
    lists = read_lists_file<T>(cfg.lists, n);
    if (lister_kind == "ranked" || lists->ranked()) {
      lister = std::make_unique<RankedListLister<T>>(*lists, g);
    } else {
      if (!kappa_mode) throw UsageError("--lister list needs --tau/--kappa (or ranked lists)");
      lister = std::make_unique<ListLister<T>>(*lists, game->tolerance);
    }
  } else if (lister_kind == "clique") {
    const bool undirected = is_symmetric(g);
    const int k = cfg.k > 0 ? cfg.k : (undirected ? n : (n + 1) / 2);
    lister = std::make_unique<CliqueLowerBoundLister<T>>(
        undirected ? CliqueLowerBoundLister<T>::for_clique(k)
                   : CliqueLowerBoundLister<T>::for_regular_tournament(k));
  } else if (lister_kind == "interactive") {
    lister = std::make_unique<QuitAware<T>>(std::make_unique<InteractiveLister<T>>(in, out), &quit);
  } else {
    throw UsageError("unknown lister '" + lister_kind + "'");
  }
  if (game) lister = game->wrap(std::move(lister));

  PainterKind painter_kind;
  try {
    painter_kind = parse_painter_kind(cfg.painter);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto painter = make_painter<T>(painter_kind, g);

  EngineOptions<T> options;
  options.round_cap = round_cap_from_env();
  if (cfg.interactive) {
    options.on_round = [&out](const RoundRecord<T>& r, const GameState<T>&) {
      out << "admitted X=" << format_vertex_set(r.move.vertices()) << " tau:";
      for (const auto& [v, t] : r.move.tolerance) out << ' ' << v << ':' << format_scalar(t);
      out << "\npainter colors Y=" << format_vertex_set(r.painted) << '\n';
    };
  }

  GameTrace<T> trace;
  try {
    trace = play_game(g, lambda, *lister, *painter, options);
  } catch (const GameError&) {
    if (quit) {
      out << "# game abandoned by the lister\n";
      return 0;
    }
    throw;
  }

  if (!cfg.trace.empty()) {
    std::ofstream file(cfg.trace);
    if (!file) throw UsageError("cannot write '" + cfg.trace + "'");
    write_trace(file, trace);
  } else if (!cfg.interactive) {
    write_trace(out, trace);
  }
  out << "# lister: " << lister->name() << ", painter: " << painter->name() << '\n';
  out << "# winner: " << winner_name(trace.winner) << " after " << trace.rounds.size()
      << " rounds\n";
  if (trace.winner == Winner::kLister) {
    out << "# exhausted vertex: " << *trace.exhausted_vertex << '\n';
    return 0;
  }
  auto report = verify_trace_coloring(g, trace);
  if (lists && !lists->ranked()) {
    auto coloring = coloring_from_trace(trace, ColorSource::kListColor);
    out << "# coloring (list colors): " << join_coloring(coloring) << '\n';
    bool in_lists = true;
    for (int v = 0; v < n; ++v) in_lists = in_lists && lists->contains(v, *coloring[v]);
    auto check = verify_coloring(g, coloring, game->tolerance);
    out << "# coloring check: " << (check.ok && in_lists ? "ok" : "FAILED") << '\n';
    return check.ok && in_lists && report.ok ? 0 : 1;
  }
  if (lists) {
    auto coloring = coloring_from_trace(trace, ColorSource::kListColor);
    out << "# coloring (list colors): " << join_coloring(coloring) << '\n';
    auto check = verify_coloring_ranked<T>(
        g, coloring, [&](int v, int c) { return *lists->rank(v, c); });
    out << "# coloring check: " << (check.ok ? "ok" : "FAILED") << '\n';
    return check.ok && report.ok ? 0 : 1;
  }
  out << "# coloring (rounds): " << join_coloring(trace.coloring) << '\n';
  out << "# coloring check: " << (report.ok ? "ok" : "FAILED") << '\n';
  return report.ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// verify

struct TrialResult {
  bool ok = true;
  std::string note;
};

struct ClaimSummary {
  std::string claim;
  std::string description;
  std::vector<TrialResult> trials;
};

Rng trial_rng(std::uint64_t seed, int claim_id, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(claim_id), static_cast<std::uint32_t>(trial)};
  return Rng(seq);
}

RandomGraphOptions random_options(Rng& rng, int n) {
  RandomGraphOptions options;
  options.n = n;
  options.edge_probability = uniform_int(rng, 2, 8) / 10.0;
  return options;
}

template <Scalar T>
std::unique_ptr<Lister<T>> alternating_lister(Rng& rng, int trial) {
  if (trial % 2 == 0) {
    RandomListerOptions options;
    options.seed = rng();
    return std::make_unique<RandomLister<T>>(options);
  }
  return std::make_unique<GreedyLister<T>>();
}

// Plays one game and checks the winner, the referee's view of the coloring,
// and trace replay.
template <Scalar T>
TrialResult checked_game(const BasicDigraph<T>& g, const std::vector<T>& lambda, Lister<T>& lister,
                         PainterStrategy<T>& painter, std::optional<std::int64_t> cap) {
  EngineOptions<T> options;
  options.round_cap = cap;
  auto trace = play_game(g, lambda, lister, painter, options);
  if (trace.winner != Winner::kPainter) {
    return {false, "lister won (vertex " + std::to_string(*trace.exhausted_vertex) + ", " +
                       lister.name() + " lister)"};
  }
  if (!verify_trace_coloring(g, trace).ok) return {false, "coloring violates presented tolerances"};
  if (!(replay_trace(g, lambda, trace) == trace)) return {false, "replay differs"};
  return {};
}

template <Scalar T>
TrialResult undirected_trial(Rng& rng, int max_n, int trial, std::optional<std::int64_t> cap) {
  auto g = random_undirected<T>(rng, random_options(rng, uniform_int(rng, 1, max_n)));
  auto lister = alternating_lister<T>(rng, trial);
  UndirectedPainter<T> painter{UndirectedView<T>(g)};
  return checked_game(g, std::vector<T>(g.num_vertices(), T(1)), *lister, painter, cap);
}

template <Scalar T>
TrialResult directed_trial(Rng& rng, int max_n, int trial, std::optional<std::int64_t> cap) {
  const int n = uniform_int(rng, std::min(2, max_n), max_n);
  auto options = random_options(rng, n);
  auto g = trial % 2 == 0 && n >= 2 ? random_multi_component<T>(rng, options)
                                    : random_digraph<T>(rng, options);
  auto lister = alternating_lister<T>(rng, trial / 2);
  GeneralPainter<T> painter(g);
  return checked_game(g, std::vector<T>(n, T(2)), *lister, painter, cap);
}

template <Scalar T>
TrialResult kernel_trial(Rng& rng, int max_n) {
  const int n = uniform_int(rng, 1, std::min(max_n, 14));
  auto g = random_undirected<T>(rng, random_options(rng, n));
  UndirectedView<T> view(g);
  std::vector<int> chosen;
  for (int v = 0; v < n; ++v) {
    if (coin(rng, 0.8)) chosen.push_back(v);
  }
  VertexSet presented = make_vertex_set(chosen, n);
  RankFunction<T> rank;
  for (int v : presented) {
    const int scale = 4 * static_cast<int>(to_double(out_weight(g, v)));
    rank.emplace(v, from_ratio<T>(uniform_int(rng, 0, scale), 4));
  }
  auto cert = select_kernel(view, presented, rank);
  if (!kernel_condition_holds(view, presented, rank, cert.selected).ok) {
    return {false, "kernel condition fails for " + format_vertex_set(cert.selected)};
  }
  const auto m = presented.size();
  T best = cost_of(view, presented, rank, {});
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    VertexSet y;
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1) y.push_back(presented[i]);
    }
    best = std::max(best, cost_of(view, presented, rank, y));
  }
  if (cert.cost != best) return {false, "cost " + format_scalar(cert.cost) + " below " + format_scalar(best)};
  if (brute_force_kernels(view, presented, rank).empty()) return {false, "no kernel exists"};
  return {};
}

template <Scalar T>
TrialResult spectral_trial(Rng& rng, int max_n) {
  auto g = random_strongly_connected<T>(rng, random_options(rng, uniform_int(rng, std::min(2, max_n), max_n)));
  auto transfer = spectral_transfer(g);
  if (transfer.eigenvector.residual > 1e-10) {
    return {false, "residual " + std::to_string(transfer.eigenvector.residual)};
  }
  const auto& sym = transfer.symmetric.graph();
  for (int v = 0; v < sym.num_vertices(); ++v) {
    const double gap = std::abs(to_double(T(out_weight(sym, v) - 2 * transfer.eigenvector.x[v])));
    if (gap > 1e-9) return {false, "incident weight off by " + std::to_string(gap)};
  }
  return {};
}

// Random s-lists drawn from colors 1..2s.
template <Scalar T>
ListAssignment<T> random_lists(Rng& rng, int n, int s, bool ranked, const BasicDigraph<T>& g) {
  std::vector<std::vector<ListEntry<T>>> lists(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> palette(2 * s);
    std::iota(palette.begin(), palette.end(), 1);
    std::shuffle(palette.begin(), palette.end(), rng);
    palette.resize(s);
    std::sort(palette.begin(), palette.end());
    std::vector<int> share(s);
    int total = 0;
    for (auto& a : share) total += (a = uniform_int(rng, 1, 6));
    const T w = out_weight(g, v);
    for (int i = 0; i < s; ++i) {
      ListEntry<T> e{palette[i], std::nullopt};
      // Shares of the out-weight, plus a little slack on the last color.
      if (ranked) e.rank = T(w * from_ratio<T>(share[i], total) + (i == s - 1 ? from_ratio<T>(uniform_int(rng, 0, 2), 4) : T(0)));
      lists[v].push_back(e);
    }
  }
  return ListAssignment<T>(std::move(lists));
}

// cor-lists always runs in exact arithmetic: the list budgets are tight.
TrialResult cor_lists_trial(Rng& rng, int max_n, int trial, std::optional<std::int64_t> cap) {
  using T = Rational;
  const int n = uniform_int(rng, 1, max_n);
  const int variant = trial % 4;
  auto options = random_options(rng, n);
  EngineOptions<T> engine;
  engine.round_cap = cap;
  if (variant == 3) {
    auto g = random_undirected<T>(rng, options);
    auto lists = random_lists<T>(rng, n, uniform_int(rng, 1, 3), true, g);
    RankedListLister<T> lister(lists, g);
    UndirectedPainter<T> painter{UndirectedView<T>(g)};
    auto trace = play_game<T>(g, std::vector<T>(n, T(1)), lister, painter, engine);
    if (trace.winner != Winner::kPainter) return {false, "lister won the ranked list game"};
    auto coloring = coloring_from_trace(trace, ColorSource::kListColor);
    auto check = verify_coloring_ranked<T>(g, coloring, [&](int v, int c) { return *lists.rank(v, c); });
    return check.ok ? TrialResult{} : TrialResult{false, "ranked coloring violates a rank"};
  }
  // 0: k = 2 on digraphs, 1: k = 3 on digraphs, 2: undirected 2-lists at 1/2.
  const bool undirected = variant == 2;
  const int k = variant == 1 ? 3 : 2;
  const int list_size = undirected ? 2 : 2 * k;
  auto g = undirected ? random_undirected<T>(rng, options) : random_digraph<T>(rng, options);
  auto lists = random_lists<T>(rng, n, list_size, false, g);
  auto game = kappa_game<T>(g, std::vector<T>(n, from_ratio<T>(1, k)), std::vector<int>(n, list_size));
  auto lister = game.wrap(std::make_unique<ListLister<T>>(lists, game.tolerance));
  auto painter = undirected ? make_painter<T>(PainterKind::kUndirected, g) : make_painter<T>(PainterKind::kGeneral, g);
  auto trace = play_game<T>(g, game.lambda, *lister, *painter, engine);
  if (trace.winner != Winner::kPainter) return {false, "lister won the list game"};
  auto coloring = coloring_from_trace(trace, ColorSource::kListColor);
  for (int v = 0; v < n; ++v) {
    if (!lists.contains(v, *coloring[v])) return {false, "color outside the list"};
  }
  if (!verify_coloring(g, coloring, game.tolerance).ok) return {false, "coloring violates tau"};
  return {};
}

std::vector<TrialResult> lower_bound_checks(std::vector<std::string>& labels) {
  using T = Rational;
  std::vector<TrialResult> out;
  auto add = [&](const std::string& label, bool ok) {
    labels.push_back(label);
    out.push_back({ok, ok ? "" : label});
  };
  const auto k2 = complete_graph<T>(2), k3 = complete_graph<T>(3);
  const auto triangle = directed_cycle<T>(3);
  const T half = from_ratio<T>(1, 2), third = from_ratio<T>(1, 3);
  add("K_2 not 1/2-majority 1-colorable", !is_majority_colorable(k2, {half, half}, 1).colorable);
  add("K_3 not 1/3-majority 2-colorable",
      !is_majority_colorable(k3, {third, third, third}, 2).colorable);
  add("directed triangle not 1/2-majority 2-colorable",
      !is_majority_colorable(triangle, {half, half, half}, 2).colorable);
  {
    auto r = solve_kappa_game(k2, {half, half}, {1, 1});
    add("K_2: lister wins tau=1/2 kappa=1",
        r.winner == Winner::kLister && check_kappa_witness(k2, {half, half}, {1, 1}, r));
  }
  {
    std::vector<T> tau(3, half);
    std::vector<int> kappa(3, 2);
    auto r = solve_kappa_game(triangle, tau, kappa);
    add("directed triangle: lister wins tau=1/2 kappa=2",
        r.winner == Winner::kLister && check_kappa_witness(triangle, tau, kappa, r));
  }
  add("clique lister forces a win on K_2 at lambda 1/2",
      lister_forces_win(k2, {half, half}, CliqueLowerBoundLister<T>::for_clique(2)).forced);
  const T two_thirds = from_ratio<T>(2, 3);
  add("clique lister forces a win on K_3 at lambda 2/3",
      lister_forces_win(k3, {two_thirds, two_thirds, two_thirds},
                        CliqueLowerBoundLister<T>::for_clique(3)).forced);
  add("clique lister forces a win on the directed triangle at lambda 1",
      lister_forces_win(triangle, std::vector<T>(3, T(1)),
                        CliqueLowerBoundLister<T>::for_regular_tournament(2)).forced);
  return out;
}

std::vector<TrialResult> run_trials(int trials, int threads, const std::function<TrialResult(int)>& one) {
  std::vector<TrialResult> results(trials);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int t; (t = next++) < trials;) {
      try {
        results[t] = one(t);
      } catch (const std::exception& e) {
        results[t] = {false, std::string("error: ") + e.what()};
      }
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < std::max(1, threads); ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return results;
}

template <Scalar T>
ClaimSummary run_claim(const std::string& claim, const VerifyConfig& cfg,
                       std::optional<std::int64_t> cap) {
  ClaimSummary s;
  s.claim = claim;
  const int n = cfg.n;
  const auto seed = cfg.seed;
  auto trials = [&](int id, std::function<TrialResult(Rng&, int)> body) {
    return run_trials(cfg.trials, cfg.threads, [&, id](int t) {
      Rng rng = trial_rng(seed, id, t);
      return body(rng, t);
    });
  };
  if (claim == "thm1") {
    s.description = "undirected, lambda=1, undirected painter vs random/greedy listers";
    s.trials = trials(1, [&](Rng& rng, int t) { return undirected_trial<T>(rng, n, t, cap); });
  } else if (claim == "thm2") {
    s.description = "digraphs, lambda=2, general painter vs random/greedy listers";
    s.trials = trials(2, [&](Rng& rng, int t) { return directed_trial<T>(rng, n, t, cap); });
  } else if (claim == "lemma1") {
    s.description = "kernel condition and maximum cost against exhaustive search";
    s.trials = trials(3, [&](Rng& rng, int) { return kernel_trial<T>(rng, n); });
  } else if (claim == "lemma2") {
    s.description = "left eigenvector residual and symmetrized incident weight 2x";
    s.trials = trials(4, [&](Rng& rng, int) { return spectral_trial<T>(rng, n); });
  } else if (claim == "cor-lists") {
    s.description = "list games: 4-lists at 1/2, 6-lists at 1/3, undirected 2-lists, ranked lists";
    s.trials = trials(5, [&](Rng& rng, int t) { return cor_lists_trial(rng, n, t, cap); });
  } else if (claim == "lower-bounds") {
    std::vector<std::string> labels;
    s.trials = lower_bound_checks(labels);
    s.description = "fixed negative results on K_2, K_3 and the directed triangle";
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (s.trials[i].ok) s.trials[i].note = labels[i];
    }
  } else {
    throw UsageError("unknown claim '" + claim + "'");
  }
  return s;
}

template <Scalar T>
int verify(const VerifyConfig& cfg, std::ostream& out) {
  if (cfg.n < 1) throw UsageError("--n must be positive");
  if (cfg.trials < 0) throw UsageError("--trials must be non-negative");
  const auto cap = round_cap_from_env();
  std::vector<std::string> claims;
  if (cfg.claim == "all") {
    claims = {"lemma1", "thm1", "lemma2", "thm2", "cor-lists", "lower-bounds"};
  } else {
    claims = {cfg.claim};
  }
  std::vector<ClaimSummary> summaries;
  for (const auto& c : claims) summaries.push_back(run_claim<T>(c, cfg, cap));

  std::ostringstream report;
  bool all_ok = true;
  report << "verify seed=" << cfg.seed << " n<=" << cfg.n << " trials=" << cfg.trials
         << " arithmetic=" << (kIsExact<T> ? "exact" : "double") << '\n';
  for (const auto& s : summaries) {
    int passed = 0;
    for (const auto& t : s.trials) passed += t.ok;
    const bool ok = passed == static_cast<int>(s.trials.size());
    all_ok = all_ok && ok;
    report << s.claim << ": " << passed << '/' << s.trials.size() << ' '
           << (ok ? "PASS" : "FAIL") << "  (" << s.description << ")\n";
    for (std::size_t i = 0; i < s.trials.size(); ++i) {
      const auto& t = s.trials[i];
      if (s.claim == "lower-bounds") {
        report << "  " << (t.ok ? "confirmed: " : "NOT confirmed: ") << t.note << '\n';
      } else if (!t.ok) {
        report << "  trial " << i << ": " << t.note << '\n';
      }
    }
  }
  report << "result: " << (all_ok ? "PASS" : "FAIL") << '\n';
  if (!cfg.report.empty()) {
    std::ofstream file(cfg.report, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + cfg.report + "'");
    file << report.str();
  }
  out << report.str();
  return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// solve, kernel, spectral, check-color

Symmetry parse_symmetry(const std::string& name) {
  if (name == "none") return Symmetry::kNone;
  if (name == "full") return Symmetry::kFull;
  if (name == "cyclic") return Symmetry::kCyclic;
  throw UsageError("unknown symmetry '" + name + "'");
}

template <Scalar T>
int solve(const SolveConfig& cfg, std::ostream& out) {
  const auto g = read_graph_file<T>(cfg.graph);
  const int n = g.num_vertices();
  const auto tau = parse_per_vertex<T>(cfg.tau, n);
  const auto kappa = parse_per_vertex_int(cfg.kappa, n);
  kappa_game(g, tau, kappa);  // argument checks
  KappaSolveOptions options;
  options.max_vertices = cfg.max_vertices;
  options.symmetry = parse_symmetry(cfg.symmetry);
  options.record_strategy = cfg.strategy;
  auto result = solve_kappa_game(g, tau, kappa, options);
  out << "winner: " << winner_name(result.winner) << '\n';
  out << "states: " << result.states << '\n';
  if (!cfg.strategy) return 0;
  const bool witness_ok = check_kappa_witness(g, tau, kappa, result);
  out << "witness: " << (witness_ok ? "verified" : "INVALID") << '\n';
  out << "# state: remaining presentations per vertex, c = colored\n";
  if (result.winner == Winner::kLister) {
    for (const auto& [state, move] : result.lister_strategy) {
      out << format_status(state) << " -> present " << format_vertex_set(move) << '\n';
    }
  } else {
    for (const auto& [key, answer] : result.painter_strategy) {
      out << format_status(key.first) << " X=" << format_vertex_set(key.second) << " -> Y="
          << format_vertex_set(answer) << '\n';
    }
  }
  return witness_ok ? 0 : 1;
}

template <Scalar T>
int kernel(const KernelConfig& cfg, std::ostream& out) {
  const auto g = read_graph_file<T>(cfg.graph);
  RankFunction<T> rank;
  if (!cfg.rank_file.empty()) {
    std::ifstream file(cfg.rank_file);
    if (!file) throw UsageError("cannot open '" + cfg.rank_file + "'");
    rank = read_ranks<T>(file);
  } else {
    rank = parse_ranks<T>(cfg.ranks);
  }
  std::vector<int> keys;
  for (const auto& [v, r] : rank) keys.push_back(v);
  const auto presented = make_vertex_set(keys, g.num_vertices());
  KernelOptions options;
  if (cfg.method == "exhaustive") {
    options.method = KernelMethod::kExhaustive;
  } else if (cfg.method == "local") {
    options.method = KernelMethod::kLocalSearch;
  } else if (cfg.method != "auto") {
    throw UsageError("unknown kernel method '" + cfg.method + "'");
  }
  UndirectedView<T> view(g);
  auto cert = select_kernel(view, presented, rank, options);
  auto check = kernel_condition_holds(view, presented, rank, cert.selected);
  out << "X = " << format_vertex_set(presented) << '\n';
  out << "Y = " << format_vertex_set(cert.selected) << '\n';
  out << "cost = " << format_scalar(cert.cost) << '\n';
  out << "# vertex rank weight_to_Y weight_to_X\\Y in_Y\n";
  for (int v : presented) {
    out << v << ' ' << format_scalar(rank.at(v)) << ' ' << format_scalar(cert.weight_to_selected.at(v))
        << ' ' << format_scalar(cert.weight_to_unselected(v)) << ' '
        << (std::binary_search(cert.selected.begin(), cert.selected.end(), v) ? "yes" : "no") << '\n';
  }
  out << "kernel condition: " << (check.ok ? "holds" : "VIOLATED") << '\n';
  return check.ok ? 0 : 1;
}

template <Scalar T>
int spectral(const SpectralConfig& cfg, std::ostream& out) {
  const auto g = read_graph_file<T>(cfg.graph);
  auto transfer = spectral_transfer(g);
  out << "x =";
  for (const auto& x : transfer.eigenvector.x) out << ' ' << format_scalar(x);
  out << "\nresidual = " << transfer.eigenvector.residual << '\n';
  write_graph(out, transfer.symmetric.graph(), true);
  return 0;
}

template <Scalar T>
int check_color(const CheckConfig& cfg, std::ostream& out) {
  const auto g = read_graph_file<T>(cfg.graph);
  const int n = g.num_vertices();
  ColoringReport<T> report;
  if (!cfg.trace.empty()) {
    std::ifstream file(cfg.trace);
    if (!file) throw UsageError("cannot open '" + cfg.trace + "'");
    report = verify_trace_coloring(g, read_trace<T>(file));
  } else {
    if (cfg.coloring.empty()) throw UsageError("give --coloring or --trace");
    std::vector<std::optional<int>> coloring;
    for (int c : parse_per_vertex_int(cfg.coloring, n)) {
      coloring.push_back(c >= 1 ? std::optional<int>(c) : std::nullopt);
    }
    if (!cfg.lists.empty()) {
      auto lists = read_lists_file<T>(cfg.lists, n);
      for (int v = 0; v < n; ++v) {
        if (coloring[v] && !lists.contains(v, *coloring[v])) {
          out << "vertex " << v << ": color " << *coloring[v] << " not in its list\n";
          report.ok = false;
        }
      }
      if (lists.ranked()) {
        auto ranked = verify_coloring_ranked<T>(g, coloring, [&](int v, int c) {
          auto r = lists.rank(v, c);
          return r ? *r : T(-1);
        });
        report.ok = report.ok && ranked.ok;
        report.uncolored = ranked.uncolored;
        report.violations = ranked.violations;
      } else {
        if (cfg.tau.empty()) throw UsageError("unranked lists need --tau");
        auto plain = verify_coloring(g, coloring, parse_per_vertex<T>(cfg.tau, n));
        report.ok = report.ok && plain.ok;
        report.uncolored = plain.uncolored;
        report.violations = plain.violations;
      }
    } else {
      if (cfg.tau.empty()) throw UsageError("give --tau or --lists");
      report = verify_coloring(g, coloring, parse_per_vertex<T>(cfg.tau, n));
    }
  }
  for (int v : report.uncolored) out << "vertex " << v << ": uncolored\n";
  for (const auto& v : report.violations) {
    out << "vertex " << v.vertex << ": monochromatic weight " << format_scalar(v.monochromatic_weight)
        << " exceeds " << format_scalar(v.allowance) << '\n';
  }
  out << (report.ok ? "ok" : "violation") << '\n';
  return report.ok ? 0 : 1;
}

template <typename F>
int dispatch(bool exact, F&& body) {
  return exact ? body(Rational{}) : body(0.0);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ranked-majority painting games: play, verify, solve"};
  app.require_subcommand(1);

  PlayConfig play_cfg;
  auto* play_cmd = app.add_subcommand("play", "Play one game and print its trace");
  play_cmd->add_option("--graph", play_cfg.graph, "Graph file")->required();
  auto* lambda_opt = play_cmd->add_option("--lambda", play_cfg.lambda, "Budget: one value or a comma list");
  auto* tau_opt = play_cmd->add_option("--tau", play_cfg.tau, "Fixed tolerance (kappa game)");
  play_cmd->add_option("--kappa", play_cfg.kappa, "Presentations per vertex (kappa game)")->needs(tau_opt);
  lambda_opt->excludes(tau_opt);
  play_cmd->add_option("--painter", play_cfg.painter, "undirected | scc | general | edgeless");
  play_cmd->add_option("--lister", play_cfg.lister, "greedy | random | list | ranked | clique");
  play_cmd->add_option("--lists", play_cfg.lists, "List-assignment file");
  play_cmd->add_option("--trace", play_cfg.trace, "Write the trace here instead of stdout");
  play_cmd->add_option("--seed", play_cfg.seed, "Seed for the random lister");
  play_cmd->add_option("--k", play_cfg.k, "Clique size parameter for the clique lister");
  play_cmd->add_flag("--interactive", play_cfg.interactive, "Read Lister moves from stdin");
  play_cmd->add_flag("--exact", play_cfg.exact, "Exact rational arithmetic");

  VerifyConfig verify_cfg;
  auto* verify_cmd = app.add_subcommand("verify", "Randomized and exhaustive checks of the claims");
  verify_cmd->add_option("--claim", verify_cfg.claim,
                         "thm1 | thm2 | lemma1 | lemma2 | cor-lists | lower-bounds | all");
  verify_cmd->add_option("--n", verify_cfg.n, "Maximum number of vertices");
  verify_cmd->add_option("--trials", verify_cfg.trials, "Trials per claim");
  verify_cmd->add_option("--seed", verify_cfg.seed, "Base seed");
  verify_cmd->add_option("--threads", verify_cfg.threads, "Worker threads");
  verify_cmd->add_option("--report", verify_cfg.report, "Also write the report to this file");
  verify_cmd->add_flag("--exact", verify_cfg.exact, "Exact rational arithmetic");

  SolveConfig solve_cfg;
  auto* solve_cmd = app.add_subcommand("solve", "Solve the tau-majority kappa game exactly");
  solve_cmd->add_option("--graph", solve_cfg.graph, "Graph file")->required();
  solve_cmd->add_option("--tau", solve_cfg.tau, "Tolerance")->required();
  solve_cmd->add_option("--kappa", solve_cfg.kappa, "Presentations per vertex")->required();
  solve_cmd->add_option("--symmetry", solve_cfg.symmetry, "none | full | cyclic");
  solve_cmd->add_option("--max-vertices", solve_cfg.max_vertices, "Refuse larger graphs");
  solve_cmd->add_flag("--strategy", solve_cfg.strategy, "Print the witness strategy");
  solve_cmd->add_flag("--exact", solve_cfg.exact, "Exact rational arithmetic");

  KernelConfig kernel_cfg;
  auto* kernel_cmd = app.add_subcommand("kernel", "Select a kernel of an undirected graph");
  kernel_cmd->add_option("--graph", kernel_cfg.graph, "Undirected graph file")->required();
  auto* ranks_opt = kernel_cmd->add_option("--ranks", kernel_cfg.ranks, "\"v:rank v:rank ...\"");
  auto* rank_file_opt = kernel_cmd->add_option("--rank-file", kernel_cfg.rank_file, "Lines '<v> <rank>'");
  ranks_opt->excludes(rank_file_opt);
  kernel_cmd->add_option("--method", kernel_cfg.method, "auto | exhaustive | local");
  kernel_cmd->add_flag("--exact", kernel_cfg.exact, "Exact rational arithmetic");

  SpectralConfig spectral_cfg;
  auto* spectral_cmd = app.add_subcommand("spectral", "Left eigenvector and symmetrized graph");
  spectral_cmd->add_option("--graph", spectral_cfg.graph, "Strongly connected digraph file")->required();
  spectral_cmd->add_flag("--exact", spectral_cfg.exact, "Exact rational arithmetic");

  CheckConfig check_cfg;
  auto* check_cmd = app.add_subcommand("check-color", "Check a coloring against tolerances or lists");
  check_cmd->add_option("--graph", check_cfg.graph, "Graph file")->required();
  check_cmd->add_option("--coloring", check_cfg.coloring, "Comma list of colors, 0 for uncolored");
  check_cmd->add_option("--tau", check_cfg.tau, "Tolerance");
  check_cmd->add_option("--lists", check_cfg.lists, "List-assignment file");
  check_cmd->add_option("--trace", check_cfg.trace, "Check the coloring recorded in a trace");
  check_cmd->add_flag("--exact", check_cfg.exact, "Exact rational arithmetic");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (play_cmd->parsed()) {
      auto& c = play_cfg;
      const bool exact = c.exact || any_fraction({&c.lambda, &c.tau}) ||
                         graph_file_has_fractions(c.graph) || file_has_fraction(c.lists);
      return dispatch(exact, [&](auto zero) { return play<decltype(zero)>(c, in, out); });
    }
    if (verify_cmd->parsed()) {
      return dispatch(verify_cfg.exact, [&](auto zero) { return verify<decltype(zero)>(verify_cfg, out); });
    }
    if (solve_cmd->parsed()) {
      auto& c = solve_cfg;
      const bool exact = c.exact || any_fraction({&c.tau}) || graph_file_has_fractions(c.graph);
      return dispatch(exact, [&](auto zero) { return solve<decltype(zero)>(c, out); });
    }
    if (kernel_cmd->parsed()) {
      auto& c = kernel_cfg;
      const bool exact = c.exact || any_fraction({&c.ranks}) || file_has_fraction(c.rank_file) ||
                         graph_file_has_fractions(c.graph);
      return dispatch(exact, [&](auto zero) { return kernel<decltype(zero)>(c, out); });
    }
    if (spectral_cmd->parsed()) {
      auto& c = spectral_cfg;
      const bool exact = c.exact || graph_file_has_fractions(c.graph);
      return dispatch(exact, [&](auto zero) { return spectral<decltype(zero)>(c, out); });
    }
    auto& c = check_cfg;
    const bool exact = c.exact || any_fraction({&c.tau}) || graph_file_has_fractions(c.graph) ||
                       file_has_fraction(c.lists) || file_has_fraction(c.trace);
    return dispatch(exact, [&](auto zero) { return check_color<decltype(zero)>(c, out); });
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const GameError& e) {
    err << "rule violation: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace majority::cli
