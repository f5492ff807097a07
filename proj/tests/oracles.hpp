// Test-only oracles, independent of the library's search paths.
#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <vector>

#include "minors/graph.hpp"

namespace test_oracles {

using minors::Graph;
using minors::Vertex;

// Canonical form of a graph on <= 8 vertices: lexicographically smallest
// adjacency bitset over all vertex permutations.
inline std::uint64_t canonical_code(const Graph& g) {
  const int n = g.n();
  std::array<std::uint8_t, 8> adj{};
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= static_cast<std::uint8_t>(1u << v);
    adj[v] |= static_cast<std::uint8_t>(1u << u);
  }
  std::array<int, 8> perm{};
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::uint64_t best = ~0ull;
  do {
    std::uint64_t code = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i) {
      std::uint8_t row = adj[perm[i]];
      for (int j = i + 1; j < n; ++j, ++bit)
        if (row & (1u << perm[j])) code |= 1ull << bit;
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
  return best | (static_cast<std::uint64_t>(n) << 56);
}

inline Graph contract_edge(const Graph& g, Vertex u, Vertex v) {
  // v merges into u; v's slot removed
  Graph out(g.n() - 1);
  auto remap = [&](Vertex x) {
    if (x == v) return u > v ? u - 1 : u;
    return x > v ? x - 1 : x;
  };
  for (const auto& [a, b] : g.edges()) {
    Vertex x = remap(a), y = remap(b);
    if (x != y) out.add_edge(x, y);
  }
  return out;
}

inline Graph delete_vertex(const Graph& g, Vertex v) {
  Graph out(g.n() - 1);
  auto remap = [&](Vertex x) { return x > v ? x - 1 : x; };
  for (const auto& [a, b] : g.edges())
    if (a != v && b != v) out.add_edge(remap(a), remap(b));
  return out;
}

// All minors of g with at least min_n vertices (as canonical codes), by
// closure under single vertex deletions, edge deletions, and edge
// contractions. Feasible for n <= 7. Stops early when `target` is reached.
inline std::set<std::uint64_t> all_minor_codes(const Graph& g, int min_n = 0,
                                               std::uint64_t target = ~0ull) {
  std::set<std::uint64_t> seen;
  std::vector<Graph> queue;
  auto code0 = canonical_code(g);
  seen.insert(code0);
  if (g.n() >= min_n && code0 != target) queue.push_back(g);
  while (!queue.empty()) {
    Graph cur = queue.back();
    queue.pop_back();
    std::vector<Graph> next;
    if (cur.n() > min_n)
      for (Vertex v = 0; v < cur.n(); ++v) next.push_back(delete_vertex(cur, v));
    for (const auto& [u, v] : cur.edges()) {
      next.push_back(cur.without_edge(u, v));
      if (cur.n() > min_n) next.push_back(contract_edge(cur, u, v));
    }
    for (auto& h : next) {
      auto code = canonical_code(h);
      if (seen.insert(code).second) {
        if (code == target) return seen;
        queue.push_back(h);
      }
    }
  }
  return seen;
}

inline bool closure_has_minor(const Graph& g, const Graph& pattern) {
  auto target = canonical_code(pattern);
  return all_minor_codes(g, pattern.n(), target).count(target) > 0;
}

}  // namespace test_oracles
