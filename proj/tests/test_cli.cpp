#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "majority/formats.hpp"

using namespace majority;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

struct Files {
  std::filesystem::path dir;
  Files() {
    dir = std::filesystem::temp_directory_path() / "majority_cli_test";
    std::filesystem::create_directories(dir);
    write("k2.txt", "undirected n=2\n0 1 1\n");
    write("tri.txt", "digraph n=3\n0 1 1\n1 2 1\n2 0 1\n");
    write("tri_frac.txt", "digraph n=3\n0 1 1/2\n1 2 1/2\n2 0 1/2\n");
    write("tri_lists.txt", "0: 1, 2, 3\n1: 1, 2, 3\n2: 1, 2, 3\n");
    write("ranked.txt", "0: 1=1/2, 2=1/2\n1: 1=1/2, 2=1/2\n");
  }
  ~Files() { std::filesystem::remove_all(dir); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(dir / name) << text; }
  std::string operator()(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("play") {
  Files f;
  auto r = run({"play", "--graph", f("k2.txt"), "--lambda", "1"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "{\"winner\":\"painter\",\"coloring\":[1,2]}"));
  CHECK(has(r.out, "# coloring check: ok"));

  auto exact = run({"play", "--graph", f("k2.txt"), "--lambda", "1", "--exact"});
  CHECK(has(exact.out, "\"tau\":{\"0\":\"1/2\",\"1\":\"1/2\"}"));

  auto lists = run({"play", "--graph", f("tri.txt"), "--tau", "1/2", "--kappa", "3", "--lister", "list", "--lists",
                    f("tri_lists.txt")});
  CHECK(lists.code == 0);
  CHECK(has(lists.out, "# coloring (list colors): 1 2 3"));

  auto ranked = run({"play", "--graph", f("k2.txt"), "--lambda", "2", "--lister", "ranked", "--lists", f("ranked.txt")});
  CHECK(ranked.code == 0);
  CHECK(has(ranked.out, "painter"));

  auto lost = run({"play", "--graph", f("k2.txt"), "--lambda", "1/2", "--lister", "clique", "--k", "2"});
  CHECK(lost.code == 0);
  CHECK(has(lost.out, "\"winner\":\"lister\""));

  auto trace_path = f("trace.jsonl");
  auto to_file = run({"play", "--graph", f("tri.txt"), "--lambda", "2", "--lister", "random", "--seed", "4", "--trace",
                      trace_path});
  CHECK(to_file.code == 0);
  CHECK(run({"check-color", "--graph", f("tri.txt"), "--trace", trace_path}).code == 0);

  // Same seed, same bytes.
  auto a = run({"play", "--graph", f("tri.txt"), "--lambda", "2", "--lister", "random", "--seed", "11"});
  auto b = run({"play", "--graph", f("tri.txt"), "--lambda", "2", "--lister", "random", "--seed", "11"});
  CHECK(a.out == b.out);
}

TEST_CASE("play with fractional weights switches to exact arithmetic") {
  Files f;
  auto r = run({"play", "--graph", f("tri_frac.txt"), "--lambda", "2"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "\"1/2\""));
}

TEST_CASE("interactive play") {
  Files f;
  auto r = run({"play", "--graph", f("k2.txt"), "--lambda", "1", "--interactive"},
               "present 0:1/2 1:1/2\npresent 1:1/2\n");
  CHECK(r.code == 0);
  CHECK(has(r.out, "painter colors Y={0}"));
  CHECK(has(r.out, "winner: painter"));
  auto quit = run({"play", "--graph", f("k2.txt"), "--lambda", "1", "--interactive"}, "quit\n");
  CHECK(quit.code == 0);
  CHECK(has(quit.out, "abandoned"));
}

TEST_CASE("round cap from the environment") {
  Files f;
  ::setenv("MP_ROUND_CAP", "1", 1);
  auto r = run({"play", "--graph", f("k2.txt"), "--lambda", "1"});
  ::unsetenv("MP_ROUND_CAP");
  CHECK(r.code == 1);
  CHECK(has(r.err, "round cap"));
  ::setenv("MP_ROUND_CAP", "abc", 1);
  auto bad = run({"play", "--graph", f("k2.txt"), "--lambda", "1"});
  ::unsetenv("MP_ROUND_CAP");
  CHECK(bad.code == 2);
}

TEST_CASE("bad input exits 2") {
  Files f;
  CHECK(run({"play", "--graph", f("missing.txt"), "--lambda", "1"}).code == 2);
  CHECK(run({"play", "--graph", f("k2.txt")}).code == 2);
  CHECK(run({"play", "--graph", f("k2.txt"), "--lambda", "1", "--tau", "1/2", "--kappa", "2"}).code == 2);
  CHECK(run({"play", "--graph", f("k2.txt"), "--lambda", "1", "--lister", "nope"}).code == 2);
  CHECK(run({"play", "--graph", f("k2.txt"), "--lambda", "0"}).code == 2);
  CHECK(run({"play", "--graph", f("k2.txt"), "--lambda", "1,2,3"}).code == 2);
  CHECK(run({"verify", "--claim", "thm9"}).code == 2);
  CHECK(run({"solve", "--graph", f("k2.txt"), "--tau", "1/2", "--kappa", "1", "--symmetry", "odd"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--claim", "all", "--n", "5", "--trials", "4", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "verify seed=3 n<=5 trials=4"));
  for (const char* claim : {"thm1:", "thm2:", "lemma1:", "lemma2:", "cor-lists:", "lower-bounds:"}) CHECK(has(r.out, claim));
  CHECK(has(r.out, "result: PASS"));
  auto again = run({"verify", "--claim", "all", "--n", "5", "--trials", "4", "--seed", "3", "--threads", "3"});
  CHECK(again.out == r.out);
  auto exact = run({"verify", "--claim", "thm1", "--n", "4", "--trials", "3", "--exact"});
  CHECK(has(exact.out, "arithmetic=exact"));
}

TEST_CASE("solve") {
  Files f;
  auto r = run({"solve", "--graph", f("k2.txt"), "--tau", "1/2", "--kappa", "1", "--strategy"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "winner: lister"));
  CHECK(has(r.out, "witness: verified"));
  CHECK(has(r.out, "(1,1) -> present {0,1}"));
  auto p = run({"solve", "--graph", f("tri.txt"), "--tau", "1/2", "--kappa", "4", "--symmetry", "cyclic", "--strategy"});
  CHECK(p.code == 0);
  CHECK(has(p.out, "winner: painter"));
  CHECK(has(p.out, "-> Y="));
  CHECK(run({"solve", "--graph", f("tri.txt"), "--tau", "1/2", "--kappa", "2", "--max-vertices", "2"}).code == 2);
}

TEST_CASE("kernel, spectral and check-color") {
  Files f;
  auto k = run({"kernel", "--graph", f("k2.txt"), "--ranks", "0:0.8 1:0.2"});
  CHECK(k.code == 0);
  CHECK(has(k.out, "Y = {0}"));
  CHECK(has(k.out, "kernel condition: holds"));
  CHECK(run({"kernel", "--graph", f("tri.txt"), "--ranks", "0:1"}).code == 2);

  auto s = run({"spectral", "--graph", f("tri.txt"), "--exact"});
  CHECK(s.code == 0);
  CHECK(has(s.out, "x = 1/3 1/3 1/3"));
  CHECK(has(s.out, "residual = 0"));

  CHECK(run({"check-color", "--graph", f("k2.txt"), "--coloring", "1,2", "--tau", "1/2"}).code == 0);
  auto mono = run({"check-color", "--graph", f("k2.txt"), "--coloring", "1,1", "--tau", "1/2"});
  CHECK(mono.code == 1);
  CHECK(has(mono.out, "vertex 0"));
  CHECK(run({"check-color", "--graph", f("k2.txt"), "--coloring", "1,0", "--tau", "1"}).code == 1);
  CHECK(run({"check-color", "--graph", f("k2.txt"), "--coloring", "1,2", "--lists", f("ranked.txt")}).code == 0);
  CHECK(run({"check-color", "--graph", f("k2.txt"), "--coloring", "1,1", "--lists", f("ranked.txt")}).code == 1);
}

TEST_CASE("the installed binary reports exit codes") {
  Files f;
  const std::string bin = MAJORITY_BINARY;
  CHECK(std::system((bin + " play --graph " + f("k2.txt") + " --lambda 1 > /dev/null").c_str()) == 0);
  CHECK(WEXITSTATUS(std::system((bin + " play --graph " + f("nope.txt") + " --lambda 1 2> /dev/null").c_str())) == 2);
}
