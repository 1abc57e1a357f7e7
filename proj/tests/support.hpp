#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "majority/graph.hpp"

namespace test_support {

using majority::BasicDigraph;
using majority::Edge;
using majority::Rational;

inline Rational q(const std::string& text) { return majority::parse_scalar<Rational>(text); }

// Weights as literals ("1", "1/2", "0.25") so both arithmetic modes read the
// same instance.
template <class T>
BasicDigraph<T> digraph(int n, const std::vector<std::tuple<int, int, std::string>>& edges) {
  std::vector<Edge<T>> out;
  for (const auto& [a, b, w] : edges) out.push_back({a, b, majority::parse_scalar<T>(w)});
  return BasicDigraph<T>(n, std::move(out));
}

template <class T>
BasicDigraph<T> undirected(int n, const std::vector<std::tuple<int, int, std::string>>& edges) {
  std::vector<Edge<T>> out;
  for (const auto& [a, b, w] : edges) out.push_back({a, b, majority::parse_scalar<T>(w)});
  return majority::build_undirected<T>(n, out);
}

template <class T>
BasicDigraph<T> triangle() {
  return digraph<T>(3, {{0, 1, "1"}, {1, 2, "1"}, {2, 0, "1"}});
}

template <class T>
BasicDigraph<T> k2() {
  return undirected<T>(2, {{0, 1, "1"}});
}

}  // namespace test_support
