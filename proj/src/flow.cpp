#include "minors/flow.hpp"

#include <algorithm>
#include <queue>

namespace minors {

bool validate_linkage(const Graph& g, const Linkage& l) {
  std::vector<char> used(g.n(), 0);
  for (const auto& p : l.paths) {
    if (p.empty()) return false;
    for (size_t i = 0; i < p.size(); ++i) {
      if (!g.has_vertex(p[i]) || used[p[i]]) return false;
      used[p[i]] = 1;
      if (i + 1 < p.size() && !g.has_edge(p[i], p[i + 1])) return false;
    }
  }
  return true;
}

namespace {

// Unit-capacity vertex-split flow network for Menger.
// Node 2v = v_in, 2v+1 = v_out. Source = 2n, sink = 2n+1.
struct FlowNet {
  struct Arc {
    int to, cap;
    size_t rev;
  };
  std::vector<std::vector<Arc>> adj;
  explicit FlowNet(int nodes) : adj(nodes) {}
  void add(int a, int b, int cap) {
    adj[a].push_back({b, cap, adj[b].size()});
    adj[b].push_back({a, 0, adj[a].size() - 1});
  }
  bool bfs_augment(int s, int t) {
    std::vector<std::pair<int, int>> parent(adj.size(), {-1, -1});  // node, arc index
    std::queue<int> q;
    q.push(s);
    parent[s] = {s, -1};
    while (!q.empty() && parent[t].first == -1) {
      int v = q.front();
      q.pop();
      for (size_t i = 0; i < adj[v].size(); ++i) {
        const Arc& a = adj[v][i];
        if (a.cap > 0 && parent[a.to].first == -1) {
          parent[a.to] = {v, static_cast<int>(i)};
          q.push(a.to);
        }
      }
    }
    if (parent[t].first == -1) return false;
    int v = t;
    while (v != s) {
      auto [pv, pi] = parent[v];
      Arc& a = adj[pv][pi];
      a.cap -= 1;
      adj[v][a.rev].cap += 1;
      v = pv;
    }
    return true;
  }
};

}  // namespace

CutResult min_vertex_cut(const Graph& g, const VertexSet& X, const VertexSet& Y) {
  const int n = g.n();
  const int INF = 4 * n + 8;
  FlowNet net(2 * n + 2);
  const int S = 2 * n, T = 2 * n + 1;
  for (Vertex v = 0; v < n; ++v) net.add(2 * v, 2 * v + 1, 1);
  for (const auto& [u, v] : g.edges()) {
    net.add(2 * u + 1, 2 * v, INF);
    net.add(2 * v + 1, 2 * u, INF);
  }
  for (Vertex x : X) net.add(S, 2 * x, INF);
  for (Vertex y : Y) net.add(2 * y + 1, T, INF);

  int flow = 0;
  while (net.bfs_augment(S, T)) ++flow;

  CutResult res;
  // Cut: v_in reachable from S in the residual, v_out not.
  std::vector<char> reach(2 * n + 2, 0);
  std::queue<int> q;
  q.push(S);
  reach[S] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const auto& a : net.adj[v])
      if (a.cap > 0 && !reach[a.to]) {
        reach[a.to] = 1;
        q.push(a.to);
      }
  }
  for (Vertex v = 0; v < n; ++v)
    if (reach[2 * v] && !reach[2 * v + 1]) res.cut.push_back(v);

  // Paths: walk saturated vertex arcs from each source entry.
  std::vector<char> inY(n, 0);
  for (Vertex y : Y) inY[y] = 1;
  auto flow_next = [&](Vertex v) -> Vertex {
    for (const auto& a : net.adj[2 * v + 1])
      if (a.to != 2 * v && a.to != T && a.to % 2 == 0) {
        // forward arc v_out -> w_in used iff residual cap below INF
        if (a.cap < INF) return a.to / 2;
      }
    return -1;
  };
  for (const auto& a : net.adj[S]) {
    if (a.cap >= INF) continue;  // no flow to this X vertex
    Vertex v = a.to / 2;
    std::vector<Vertex> path{v};
    while (!inY[path.back()]) {
      Vertex w = flow_next(path.back());
      if (w < 0) break;
      path.push_back(w);
    }
    if (inY[path.back()]) res.paths.paths.push_back(path);
  }
  return res;
}

}  // namespace minors
