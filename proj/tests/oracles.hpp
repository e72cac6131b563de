#pragma once

// Brute-force reference implementations. They share no code with the library
// beyond the plain data types.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "mpchoice/exact.hpp"

namespace oracle {

// Tries every per-vertex color choice; a coloring is proper when vertices in
// different parts never share a color.
inline bool naive_colorable(const mpchoice::ListAssignment& a) {
  std::vector<int> part;
  std::vector<std::vector<int>> lists;
  for (std::size_t p = 0; p < a.parts.size(); ++p) {
    for (auto l : a.parts[p]) {
      part.push_back(static_cast<int>(p));
      lists.push_back(l.to_vector());
    }
  }
  std::vector<int> chosen(lists.size(), -1);
  std::function<bool(std::size_t)> go = [&](std::size_t v) {
    if (v == lists.size()) return true;
    for (int c : lists[v]) {
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) ok = !(chosen[u] == c && part[u] != part[v]);
      if (!ok) continue;
      chosen[v] = c;
      if (go(v + 1)) return true;
    }
    return false;
  };
  return go(0);
}

inline int subset_min_cover(int vertex_count, const std::vector<mpchoice::ColorSet>& edges) {
  int best = vertex_count;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << vertex_count); ++m) {
    const mpchoice::ColorSet s(m);
    if (s.size() >= best) continue;
    bool hits = true;
    for (auto e : edges) hits = hits && e.intersects(s);
    if (hits) best = s.size();
  }
  return best;
}

inline mpchoice::ListAssignment random_assignment(std::mt19937_64& gen, int max_vertices,
                                                  int max_t) {
  std::uniform_int_distribution<int> parts_d(2, 3);
  mpchoice::ListAssignment a;
  a.universe = std::uniform_int_distribution<int>(1, max_t)(gen);
  const int parts = parts_d(gen);
  const int vertices = std::uniform_int_distribution<int>(parts, max_vertices)(gen);
  a.parts.resize(parts);
  for (int v = 0; v < vertices; ++v) {
    const int p = v < parts ? v : std::uniform_int_distribution<int>(0, parts - 1)(gen);
    const int size = std::uniform_int_distribution<int>(1, std::min(3, a.universe))(gen);
    mpchoice::ColorSet s;
    while (s.size() < size) s.insert(std::uniform_int_distribution<int>(0, a.universe - 1)(gen));
    a.parts[p].push_back(s);
  }
  return a;
}

inline mpchoice::Hypergraph random_hypergraph(std::mt19937_64& gen, int max_vertices,
                                              int max_edges) {
  mpchoice::Hypergraph h;
  h.vertex_count = std::uniform_int_distribution<int>(1, max_vertices)(gen);
  const int edges = std::uniform_int_distribution<int>(1, max_edges)(gen);
  for (int e = 0; e < edges; ++e) {
    const int size = std::uniform_int_distribution<int>(1, std::min(4, h.vertex_count))(gen);
    mpchoice::ColorSet s;
    while (s.size() < size) s.insert(std::uniform_int_distribution<int>(0, h.vertex_count - 1)(gen));
    h.edges.push_back(s);
  }
  return h;
}

}  // namespace oracle
