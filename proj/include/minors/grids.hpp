#pragma once

#include <set>

#include "minors/graph.hpp"

namespace minors {

// Order-k mixed surface grid: a (k, 4(h+c+1)k)-cylinder with a handle added at
// each position of I_hdl and a crosscap at each position of I_crscp. The two
// sets partition [2, h+c+1]; position 1 carries no transaction.
struct MixedSurfaceGridSpec {
  int k = 0;
  std::set<int> handle_positions;
  std::set<int> crosscap_positions;

  int h() const { return static_cast<int>(handle_positions.size()); }
  int c() const { return static_cast<int>(crosscap_positions.size()); }
  int euler_genus() const { return 2 * h() + c(); }
  int positions() const { return h() + c() + 1; }
  int cycle_length() const { return 4 * positions() * k; }
  void validate() const;
  bool operator==(const MixedSurfaceGridSpec&) const = default;
};

// Handles first ([2, h+1]), then crosscaps ([h+2, h+c+1]).
// The (-1, 2) spec denotes the same family as (0, 0).
struct DyckGridSpec {
  int h = 0;
  int c = 0;
  int k = 0;
  int euler_genus() const { return (h == -1 && c == 2) ? 0 : 2 * h + c; }
  MixedSurfaceGridSpec to_mixed() const;
  void validate() const;
};

struct DyckWallSpec {
  int h = 0;
  int c = 0;  // in [0, 2]
  int t = 0;
  void validate() const;
};

// A wall with its combinatorial anatomy. Paths are in traversal order.
struct WallStructure {
  Graph graph;
  std::vector<std::vector<Vertex>> rows;
  std::vector<std::vector<Vertex>> columns;
  std::vector<Vertex> perimeter;  // cycle order
  std::vector<Vertex> branch_vertices;
  int order = 0;
};

// Dyck-wall anatomy used by the tangle oracle.
struct DyckWallStructure {
  Graph graph;
  std::vector<std::vector<Vertex>> cycles;   // kept rings C_1..C_t
  std::vector<std::vector<Vertex>> columns;  // radial zigzag paths of the annulus wall
  DyckWallSpec spec;
};

// m concentric cycles of length n each; C_i separates C_{i-1} from C_{i+1}.
Graph cylindrical_grid(int m, int n);

// Adds the 2m handle (resp. crosscap) edges at position i of a labeled
// (m, 4m*n)-cylinder.
Graph add_handle(const Graph& g, int i);
Graph add_crosscap(const Graph& g, int i);

Graph mixed_surface_grid(const MixedSurfaceGridSpec& spec);
Graph dyck_grid(const DyckGridSpec& spec);

WallStructure elementary_wall(int k);
DyckWallStructure dyck_wall(const DyckWallSpec& spec);

// The b outermost cycles C_{k-b+1}, ..., C_k of a labeled grid, by ring index.
std::vector<std::vector<Vertex>> outermost_cycles(const Graph& g, int b);

// Exact position of every edge a transaction adds; used by the transforms.
std::vector<Edge> handle_edges(int m, int n, int i);
std::vector<Edge> crosscap_edges(int m, int n, int i);

}  // namespace minors
