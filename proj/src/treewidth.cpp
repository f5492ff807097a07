#include "minors/treewidth.hpp"

#include <algorithm>

namespace minors {

namespace {

// Q(R, v): vertices outside R u {v} reachable from v through R.
std::uint32_t frontier(const std::vector<std::uint32_t>& adj, std::uint32_t R, int v) {
  std::uint32_t comp = 1u << v;
  std::uint32_t grow = adj[v];
  while (true) {
    std::uint32_t inside = grow & R & ~comp;
    if (!inside) break;
    comp |= inside;
    std::uint32_t add = 0;
    std::uint32_t m = inside;
    while (m) {
      int w = __builtin_ctz(m);
      m &= m - 1;
      add |= adj[w];
    }
    grow |= add;
  }
  return grow & ~R & ~(1u << v);
}

}  // namespace

TreewidthResult exact_treewidth(const Graph& g, int vertex_cap) {
  const int n = g.n();
  if (n > vertex_cap || n > 25) throw CapExceeded("exact_treewidth: instance exceeds vertex cap");
  if (n == 0) return {-1, {{}, {{}}}};

  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }

  const std::uint32_t FULL = (n == 32) ? ~0u : ((1u << n) - 1);
  // dp[S] = min over elimination orders of S (eliminated first) of the max
  // frontier size; choice[S] records the last vertex eliminated.
  std::vector<std::int8_t> dp(FULL + 1, 127);
  std::vector<std::int8_t> choice(FULL + 1, -1);
  dp[0] = -1;
  for (std::uint32_t S = 1; S <= FULL; ++S) {
    std::uint32_t m = S;
    while (m) {
      int v = __builtin_ctz(m);
      m &= m - 1;
      std::uint32_t R = S & ~(1u << v);
      if (dp[R] == 127) continue;
      int q = __builtin_popcount(frontier(adj, R, v));
      int val = std::max<int>(dp[R], q);
      if (val < dp[S]) {
        dp[S] = static_cast<std::int8_t>(val);
        choice[S] = static_cast<std::int8_t>(v);
      }
    }
  }

  TreewidthResult res;
  res.width = dp[FULL];

  // Recover an optimal elimination order, then build the decomposition the
  // usual way: bag(v) = {v} + later fill-in neighbors.
  std::vector<int> order(n);
  std::uint32_t S = FULL;
  for (int i = n - 1; i >= 0; --i) {
    int v = choice[S];
    order[i] = v;
    S &= ~(1u << v);
  }
  // order[0] eliminated first
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<std::uint32_t> fill = adj;
  std::vector<VertexSet> bags(n);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    std::uint32_t later = 0;
    std::uint32_t m = fill[v];
    while (m) {
      int w = __builtin_ctz(m);
      m &= m - 1;
      if (pos[w] > i) later |= 1u << w;
    }
    VertexSet bag{v};
    std::uint32_t t = later;
    while (t) {
      int w = __builtin_ctz(t);
      t &= t - 1;
      bag.push_back(w);
    }
    std::sort(bag.begin(), bag.end());
    bags[i] = bag;
    // make the later neighbors a clique
    std::uint32_t a = later;
    while (a) {
      int w = __builtin_ctz(a);
      a &= a - 1;
      fill[w] |= later & ~(1u << w);
    }
  }
  TreeDecomposition td;
  td.bags = bags;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    // connect to the bag of the earliest-eliminated later fill neighbor
    int best = -1;
    std::uint32_t m = fill[v];
    while (m) {
      int w = __builtin_ctz(m);
      m &= m - 1;
      if (pos[w] > i && (best == -1 || pos[w] < pos[best])) best = w;
    }
    if (best != -1) td.tree_edges.push_back({i, pos[best]});
  }
  // isolated pieces: ensure the decomposition tree is connected
  {
    std::vector<int> parent(n, -1);
    std::vector<std::vector<int>> tadj(n);
    for (auto& [a, b] : td.tree_edges) {
      tadj[a].push_back(b);
      tadj[b].push_back(a);
    }
    std::vector<char> seen(n, 0);
    int root = -1;
    for (int i = 0; i < n; ++i) {
      if (seen[i]) continue;
      if (root != -1) td.tree_edges.push_back({root, i});
      root = (root == -1) ? i : root;
      std::vector<int> stack{i};
      seen[i] = 1;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : tadj[x])
          if (!seen[y]) {
            seen[y] = 1;
            stack.push_back(y);
          }
      }
    }
  }
  res.decomposition = td;
  return res;
}

}  // namespace minors
