#include "majority/formats.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace majority {

using Json = nlohmann::ordered_json;

FormatError::FormatError(const std::string& what, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool skippable(std::string_view line) {
  line = trim(line);
  return line.empty() || line.front() == '#';
}

int parse_int(std::string_view text, int line, const char* what) {
  text = trim(text);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw FormatError(std::string("bad ") + what + " '" + std::string(text) + "'", line);
  }
  return value;
}

template <Scalar T>
T parse_value(std::string_view text, int line) {
  try {
    return parse_scalar<T>(trim(text));
  } catch (const std::exception& e) {
    throw FormatError(e.what(), line);
  }
}

std::vector<std::string_view> split(std::string_view s, std::string_view separators) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const auto j = s.find_first_of(separators, i);
    const auto end = j == std::string_view::npos ? s.size() : j;
    if (end > i) out.push_back(s.substr(i, end - i));
    i = end + 1;
  }
  return out;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return in;
}

}  // namespace

template <Scalar T>
BasicDigraph<T> read_graph(std::istream& in) {
  std::string text;
  int line_no = 0;
  bool undirected = false;
  int n = -1;
  std::vector<Edge<T>> edges;
  while (std::getline(in, text)) {
    ++line_no;
    if (skippable(text)) continue;
    auto fields = split(text, " \t\r");
    if (n < 0) {
      if (fields.size() != 2 || fields[1].substr(0, 2) != "n=" ||
          (fields[0] != "digraph" && fields[0] != "undirected")) {
        throw FormatError("expected 'digraph n=<count>' or 'undirected n=<count>'", line_no);
      }
      undirected = fields[0] == "undirected";
      n = parse_int(fields[1].substr(2), line_no, "vertex count");
      if (n < 0) throw FormatError("negative vertex count", line_no);
      continue;
    }
    if (fields.size() != 3) throw FormatError("expected '<from> <to> <weight>'", line_no);
    edges.push_back({parse_int(fields[0], line_no, "vertex"), parse_int(fields[1], line_no, "vertex"),
                     parse_value<T>(fields[2], line_no)});
  }
  if (n < 0) throw FormatError("missing header");
  try {
    return undirected ? build_undirected<T>(n, edges) : BasicDigraph<T>(n, std::move(edges));
  } catch (const GraphError& e) {
    throw FormatError(e.what());
  }
}

template <Scalar T>
BasicDigraph<T> read_graph_file(const std::string& path) {
  auto in = open_input(path);
  return read_graph<T>(in);
}

template <Scalar T>
void write_graph(std::ostream& out, const BasicDigraph<T>& g, bool undirected) {
  if (undirected && !is_symmetric(g)) throw GraphError("write_graph: graph is not symmetric");
  out << (undirected ? "undirected" : "digraph") << " n=" << g.num_vertices() << '\n';
  for (const auto& e : g.edges()) {
    if (undirected && e.from > e.to) continue;
    out << e.from << ' ' << e.to << ' ' << format_scalar(e.weight) << '\n';
  }
}

bool graph_file_has_fractions(const std::string& path) {
  auto in = open_input(path);
  std::string text;
  while (std::getline(in, text)) {
    if (!skippable(text) && is_fraction_literal(text)) return true;
  }
  return false;
}

template <Scalar T>
ListAssignment<T> read_lists(std::istream& in, int num_vertices) {
  std::vector<std::optional<std::vector<ListEntry<T>>>> lists(num_vertices);
  std::string text;
  int line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (skippable(text)) continue;
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw FormatError("expected '<vertex>: <colors>'", line_no);
    const int v = parse_int(std::string_view(text).substr(0, colon), line_no, "vertex");
    if (v < 0 || v >= num_vertices) throw FormatError("vertex out of range", line_no);
    if (lists[v]) throw FormatError("vertex " + std::to_string(v) + " listed twice", line_no);
    std::vector<ListEntry<T>> entries;
    for (auto item : split(std::string_view(text).substr(colon + 1), ",")) {
      item = trim(item);
      if (item.empty()) continue;
      ListEntry<T> entry;
      const auto eq = item.find('=');
      entry.color = parse_int(item.substr(0, eq), line_no, "color");
      if (eq != std::string_view::npos) entry.rank = parse_value<T>(item.substr(eq + 1), line_no);
      entries.push_back(entry);
    }
    lists[v] = std::move(entries);
  }
  std::vector<std::vector<ListEntry<T>>> full;
  for (int v = 0; v < num_vertices; ++v) {
    if (!lists[v]) throw FormatError("no list for vertex " + std::to_string(v));
    full.push_back(std::move(*lists[v]));
  }
  try {
    return ListAssignment<T>(std::move(full));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

template <Scalar T>
ListAssignment<T> read_lists_file(const std::string& path, int num_vertices) {
  auto in = open_input(path);
  return read_lists<T>(in, num_vertices);
}

template <Scalar T>
void write_lists(std::ostream& out, const ListAssignment<T>& lists) {
  for (int v = 0; v < lists.num_vertices(); ++v) {
    out << v << ':';
    const char* sep = " ";
    for (const auto& e : lists.list(v)) {
      out << sep << e.color;
      if (e.rank) out << '=' << format_scalar(*e.rank);
      sep = ", ";
    }
    out << '\n';
  }
}

template <Scalar T>
RankFunction<T> parse_ranks(std::string_view text) {
  RankFunction<T> ranks;
  for (auto token : split(text, " \t,\n")) {
    const auto colon = token.find(':');
    if (colon == std::string_view::npos) throw FormatError("expected '<vertex>:<rank>'");
    const int v = parse_int(token.substr(0, colon), 0, "vertex");
    if (!ranks.emplace(v, parse_value<T>(token.substr(colon + 1), 0)).second) {
      throw FormatError("vertex " + std::to_string(v) + " ranked twice");
    }
  }
  return ranks;
}

template <Scalar T>
RankFunction<T> read_ranks(std::istream& in) {
  RankFunction<T> ranks;
  std::string text;
  int line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (skippable(text)) continue;
    auto fields = split(text, " \t\r");
    if (fields.size() != 2) throw FormatError("expected '<vertex> <rank>'", line_no);
    const int v = parse_int(fields[0], line_no, "vertex");
    if (!ranks.emplace(v, parse_value<T>(fields[1], line_no)).second) {
      throw FormatError("vertex ranked twice", line_no);
    }
  }
  return ranks;
}

template <Scalar T>
std::vector<T> parse_per_vertex(std::string_view text, int n) {
  auto items = split(text, ",");
  if (items.size() == 1) return std::vector<T>(n, parse_value<T>(items[0], 0));
  if (static_cast<int>(items.size()) != n) {
    throw FormatError("expected 1 or " + std::to_string(n) + " values, got " +
                      std::to_string(items.size()));
  }
  std::vector<T> out;
  for (auto item : items) out.push_back(parse_value<T>(item, 0));
  return out;
}

std::vector<int> parse_per_vertex_int(std::string_view text, int n) {
  auto items = split(text, ",");
  if (items.size() == 1) return std::vector<int>(n, parse_int(items[0], 0, "integer"));
  if (static_cast<int>(items.size()) != n) {
    throw FormatError("expected 1 or " + std::to_string(n) + " values, got " +
                      std::to_string(items.size()));
  }
  std::vector<int> out;
  for (auto item : items) out.push_back(parse_int(item, 0, "integer"));
  return out;
}

template <Scalar T>
void write_trace(std::ostream& out, const GameTrace<T>& trace) {
  for (const auto& r : trace.rounds) {
    Json rec;
    rec["round"] = r.round;
    rec["X"] = r.move.vertices();
    Json tau = Json::object();
    for (const auto& [v, t] : r.move.tolerance) tau[std::to_string(v)] = format_scalar(t);
    rec["tau"] = std::move(tau);
    rec["Y"] = r.painted;
    if (r.move.color) rec["color"] = *r.move.color;
    out << rec.dump() << '\n';
  }
  Json end;
  end["winner"] = std::string(winner_name(trace.winner));
  Json coloring = Json::array();
  for (const auto& c : trace.coloring) coloring.push_back(c ? Json(*c) : Json(nullptr));
  end["coloring"] = std::move(coloring);
  if (trace.exhausted_vertex) end["vertex"] = *trace.exhausted_vertex;
  out << end.dump() << '\n';
}

template <Scalar T>
GameTrace<T> read_trace(std::istream& in) {
  GameTrace<T> trace;
  std::string text;
  int line_no = 0;
  bool finished = false;
  while (std::getline(in, text)) {
    ++line_no;
    if (skippable(text)) continue;
    if (finished) throw FormatError("record after the terminal record", line_no);
    try {
      const Json rec = Json::parse(text);
      if (rec.contains("winner")) {
        const auto w = rec.at("winner").get<std::string>();
        if (w != "painter" && w != "lister") throw FormatError("unknown winner '" + w + "'", line_no);
        trace.winner = w == "painter" ? Winner::kPainter : Winner::kLister;
        for (const auto& c : rec.at("coloring")) {
          trace.coloring.push_back(c.is_null() ? std::nullopt : std::optional<int>(c.get<int>()));
        }
        if (rec.contains("vertex")) trace.exhausted_vertex = rec.at("vertex").get<int>();
        finished = true;
        continue;
      }
      RoundRecord<T> r;
      r.round = rec.at("round").get<int>();
      for (const auto& [key, value] : rec.at("tau").items()) {
        r.move.tolerance.emplace(parse_int(key, line_no, "vertex"),
                                 parse_value<T>(value.template get<std::string>(), line_no));
      }
      if (rec.at("X").get<std::vector<int>>() != r.move.vertices()) {
        throw FormatError("X does not match the keys of tau", line_no);
      }
      if (rec.contains("color")) r.move.color = rec.at("color").get<int>();
      r.painted = rec.at("Y").get<std::vector<int>>();
      trace.rounds.push_back(std::move(r));
    } catch (const Json::exception& e) {
      throw FormatError(e.what(), line_no);
    }
  }
  if (!finished) throw FormatError("trace has no terminal record");
  return trace;
}

std::string format_vertex_set(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << '}';
  return out.str();
}

#define MAJORITY_INSTANTIATE_FORMATS(T)                                                  \
  template BasicDigraph<T> read_graph<T>(std::istream&);                                 \
  template BasicDigraph<T> read_graph_file<T>(const std::string&);                       \
  template void write_graph<T>(std::ostream&, const BasicDigraph<T>&, bool);             \
  template ListAssignment<T> read_lists<T>(std::istream&, int);                          \
  template ListAssignment<T> read_lists_file<T>(const std::string&, int);                \
  template void write_lists<T>(std::ostream&, const ListAssignment<T>&);                 \
  template RankFunction<T> parse_ranks<T>(std::string_view);                             \
  template RankFunction<T> read_ranks<T>(std::istream&);                                 \
  template std::vector<T> parse_per_vertex<T>(std::string_view, int);                    \
  template void write_trace<T>(std::ostream&, const GameTrace<T>&);                      \
  template GameTrace<T> read_trace<T>(std::istream&);

MAJORITY_INSTANTIATE_FORMATS(double)
MAJORITY_INSTANTIATE_FORMATS(Rational)

}  // namespace majority
