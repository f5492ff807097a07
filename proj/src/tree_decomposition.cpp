#include "minors/tree_decomposition.hpp"

#include <algorithm>
#include <sstream>

namespace minors {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

int TreeDecomposition::adhesion() const {
  int a = 0;
  for (const auto& [s, t] : tree_edges)
    a = std::max(a, static_cast<int>(set_intersection(bags[s], bags[t]).size()));
  return a;
}

TdReport validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  const int N = td.nodes();
  std::ostringstream why;
  // The decomposition tree must be a tree.
  if (N == 0) return {false, "decomposition has no nodes"};
  {
    std::vector<std::vector<int>> adj(N);
    for (const auto& [s, t] : td.tree_edges) {
      if (s < 0 || s >= N || t < 0 || t >= N) return {false, "tree edge endpoint out of range"};
      adj[s].push_back(t);
      adj[t].push_back(s);
    }
    if (static_cast<int>(td.tree_edges.size()) != N - 1) return {false, "tree edge count is not nodes-1"};
    std::vector<char> seen(N, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++cnt;
          stack.push_back(w);
        }
    }
    if (cnt != N) return {false, "decomposition tree is disconnected"};
  }
  // (1) every vertex in some bag
  std::vector<char> covered(g.n(), 0);
  for (const auto& b : td.bags)
    for (Vertex v : b) {
      if (!g.has_vertex(v)) return {false, "bag contains unknown vertex"};
      covered[v] = 1;
    }
  for (Vertex v = 0; v < g.n(); ++v)
    if (!covered[v]) {
      why << "vertex " << v << " appears in no bag";
      return {false, why.str()};
    }
  // (2) every edge inside some bag
  for (const auto& [u, v] : g.edges()) {
    bool found = false;
    for (const auto& b : td.bags)
      if (std::binary_search(b.begin(), b.end(), u) && std::binary_search(b.begin(), b.end(), v)) {
        found = true;
        break;
      }
    if (!found) {
      why << "edge {" << u << "," << v << "} is inside no bag";
      return {false, why.str()};
    }
  }
  // (3) nodes holding a vertex induce a subtree
  std::vector<std::vector<int>> adj(N);
  for (const auto& [s, t] : td.tree_edges) {
    adj[s].push_back(t);
    adj[t].push_back(s);
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    std::vector<int> holders;
    for (int i = 0; i < N; ++i)
      if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), v)) holders.push_back(i);
    if (holders.empty()) continue;
    std::vector<char> inH(N, 0), seen(N, 0);
    for (int i : holders) inH[i] = 1;
    std::vector<int> stack{holders[0]};
    seen[holders[0]] = 1;
    int cnt = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (inH[y] && !seen[y]) {
          seen[y] = 1;
          ++cnt;
          stack.push_back(y);
        }
    }
    if (cnt != static_cast<int>(holders.size())) {
      why << "nodes holding vertex " << v << " do not induce a subtree";
      return {false, why.str()};
    }
  }
  return {true, ""};
}

Graph torso(const Graph& g, const TreeDecomposition& td, int node) {
  if (node < 0 || node >= td.nodes()) throw std::invalid_argument("torso: invalid node id");
  const VertexSet& bag = td.bags[node];
  std::vector<int> idx(g.n(), -1);
  for (int i = 0; i < static_cast<int>(bag.size()); ++i) idx[bag[i]] = i;
  Graph t(static_cast<int>(bag.size()));
  for (const auto& [u, v] : g.edges())
    if (idx[u] >= 0 && idx[v] >= 0) t.add_edge(idx[u], idx[v]);
  for (const auto& [s, e] : td.tree_edges) {
    int other = -1;
    if (s == node) other = e;
    if (e == node) other = s;
    if (other < 0) continue;
    auto adh = set_intersection(bag, td.bags[other]);
    for (size_t i = 0; i < adh.size(); ++i)
      for (size_t j = i + 1; j < adh.size(); ++j) t.add_edge(idx[adh[i]], idx[adh[j]]);
  }
  return t;
}

}  // namespace minors
