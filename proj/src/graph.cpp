#include "minors/graph.hpp"

#include <algorithm>

namespace minors {

int Graph::max_degree() const {
  int d = 0;
  for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

void Graph::set_labels(std::vector<Coord> labels) {
  if (static_cast<int>(labels.size()) != n_) throw std::invalid_argument("set_labels: size mismatch");
  labels_ = std::move(labels);
}

std::vector<int> Graph::component_ids() const {
  std::vector<int> comp(n_, -1);
  int c = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n_; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : adj_[v])
        if (comp[w] == -1) {
          comp[w] = c;
          stack.push_back(w);
        }
    }
    ++c;
  }
  return comp;
}

std::vector<std::vector<Vertex>> Graph::components() const {
  auto comp = component_ids();
  int c = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<Vertex>> out(c);
  for (Vertex v = 0; v < n_; ++v) out[comp[v]].push_back(v);
  return out;
}

bool Graph::is_connected_subset(const std::vector<Vertex>& vs) const {
  if (vs.empty()) return false;
  std::vector<char> in(n_, 0), seen(n_, 0);
  for (Vertex v : vs) in[v] = 1;
  std::vector<Vertex> stack{vs[0]};
  seen[vs[0]] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj_[v])
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == static_cast<int>(vs.size());
}

Graph Graph::induced(const std::vector<Vertex>& vs, std::vector<Vertex>* old_ids) const {
  std::vector<int> idx(n_, -1);
  for (int i = 0; i < static_cast<int>(vs.size()); ++i) idx[vs[i]] = i;
  Graph g(static_cast<int>(vs.size()));
  for (const auto& [u, v] : edges_)
    if (idx[u] >= 0 && idx[v] >= 0) g.add_edge(idx[u], idx[v]);
  if (old_ids) *old_ids = vs;
  return g;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  Graph g(n_);
  if (u > v) std::swap(u, v);
  for (const auto& [a, b] : edges_)
    if (!(a == u && b == v)) g.add_edge(a, b);
  if (has_labels()) g.set_labels(labels_);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph rect_grid(int rows, int cols) {
  Graph g(rows * cols);
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
    }
  return g;
}

}  // namespace minors
