#pragma once

#include <vector>

#include "minors/separations.hpp"

namespace minors {

// A set of pairwise vertex-disjoint paths, each a vertex sequence with
// consecutive vertices adjacent.
struct Linkage {
  std::vector<std::vector<Vertex>> paths;
  int order() const { return static_cast<int>(paths.size()); }
};

bool validate_linkage(const Graph& g, const Linkage& l);

struct CutResult {
  VertexSet cut;    // minimum X-Y vertex cut (vertices of X or Y may appear)
  Linkage paths;    // maximum system of vertex-disjoint X-Y paths
};

// Menger primitive: |cut| == paths.order(); the cut meets every X-Y path.
// Vertices of X cap Y are forced into the cut with a one-vertex path each.
CutResult min_vertex_cut(const Graph& g, const VertexSet& X, const VertexSet& Y);

}  // namespace minors
