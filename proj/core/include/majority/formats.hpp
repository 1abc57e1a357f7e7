#pragma once

// Text formats: graph files, list-assignment files, rank lists and JSONL traces.
//
// Graph file:
//   digraph n=3          (or: undirected n=3, each line then adds both directions)
//   0 1 1
//   1 2 3/2
// Blank lines and lines starting with '#' are ignored.
//
// List file, one line per vertex:
//   0: 1, 2=1/2, 3
//
// Trace: one JSON object per line,
//   {"round":1,"X":[0,1],"tau":{"0":"1/2","1":"1/2"},"Y":[0]}
// with "color" appended when the move carries a list color, then
//   {"winner":"painter","coloring":[1,2]}
// where coloring holds the coloring round (null if uncolored) and "vertex" is
// added for a Lister win.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "majority/engine.hpp"
#include "majority/kernel.hpp"

namespace majority {

class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, int line = 0);
  int line() const { return line_; }

 private:
  int line_;
};

template <Scalar T>
BasicDigraph<T> read_graph(std::istream& in);

template <Scalar T>
BasicDigraph<T> read_graph_file(const std::string& path);

// Writes the undirected form (one line per pair) when `undirected` is set;
// throws GraphError if the graph is not symmetric then.
template <Scalar T>
void write_graph(std::ostream& out, const BasicDigraph<T>& g, bool undirected = false);

// True when the graph file at `path` (or the text) uses a p/q weight.
bool graph_file_has_fractions(const std::string& path);

template <Scalar T>
ListAssignment<T> read_lists(std::istream& in, int num_vertices);

template <Scalar T>
ListAssignment<T> read_lists_file(const std::string& path, int num_vertices);

template <Scalar T>
void write_lists(std::ostream& out, const ListAssignment<T>& lists);

// "0:0.4 1:1/2" (tokens separated by blanks or commas).
template <Scalar T>
RankFunction<T> parse_ranks(std::string_view text);

// One "<vertex> <rank>" pair per line.
template <Scalar T>
RankFunction<T> read_ranks(std::istream& in);

// Per-vertex value: a single scalar applied to all n vertices, or a
// comma-separated list of n scalars.
template <Scalar T>
std::vector<T> parse_per_vertex(std::string_view text, int n);

std::vector<int> parse_per_vertex_int(std::string_view text, int n);

template <Scalar T>
void write_trace(std::ostream& out, const GameTrace<T>& trace);

template <Scalar T>
GameTrace<T> read_trace(std::istream& in);

std::string format_vertex_set(const VertexSet& s);

}  // namespace majority
