#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace minors {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // stored with first < second

// Thrown when an input exceeds a configured instance-size cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// (ring, position) label attached to vertices of generated grid families.
// Both components are 1-based, following the usual grid indexing.
struct Coord {
  int ring = 0;
  int pos = 0;
  friend bool operator==(const Coord&, const Coord&) = default;
};

// Finite simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n) {}

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }

  bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }

  void add_edge(Vertex u, Vertex v) {
    if (!has_vertex(u) || !has_vertex(v)) throw std::invalid_argument("add_edge: endpoint out of range");
    if (u == v) throw std::invalid_argument("add_edge: loops not allowed");
    if (u > v) std::swap(u, v);
    if (edge_set_.count({u, v})) return;
    edge_set_.insert({u, v});
    edges_.push_back({u, v});
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }

  bool has_edge(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    return edge_set_.count({u, v}) != 0;
  }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  const std::vector<Edge>& edges() const { return edges_; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;

  // Optional grid coordinates for generated families.
  bool has_labels() const { return !labels_.empty(); }
  void set_labels(std::vector<Coord> labels);
  const std::vector<Coord>& labels() const { return labels_; }
  Coord label(Vertex v) const { return labels_.at(v); }

  std::vector<int> component_ids() const;          // vertex -> component index
  std::vector<std::vector<Vertex>> components() const;
  bool is_connected_subset(const std::vector<Vertex>& vs) const;

  Graph induced(const std::vector<Vertex>& vs, std::vector<Vertex>* old_ids = nullptr) const;
  Graph without_edge(Vertex u, Vertex v) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edge_set_ == other.edge_set_;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
  std::set<Edge> edge_set_;
  std::vector<Coord> labels_;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph rect_grid(int rows, int cols);  // rows x cols grid graph

}  // namespace minors
