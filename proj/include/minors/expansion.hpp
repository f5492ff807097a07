#pragma once

#include "minors/minor_model.hpp"

namespace minors {

// One vertex split: `vertex` (id in the graph before this split) is replaced
// by an edge x1x2; x1 reuses the old id, x2 is appended as a fresh vertex.
// The old neighborhood is partitioned between the two.
struct SplitRecord {
  Vertex vertex;
  VertexSet to_x1;
  VertexSet to_x2;
};

// (H, T) is an expansion of `base`: H arises from `base` by the recorded
// splits followed by subdividing edges; subdivision_map sends each H-vertex
// either to a vertex of the split graph or to the split-graph edge it lies on.
struct ExpansionCertificate {
  Graph base;
  Graph result;
  VertexSet branch_vertices;  // T
  std::vector<SplitRecord> splits;
  struct Placement {
    bool on_edge = false;
    Vertex vertex = -1;  // when !on_edge
    Edge edge{-1, -1};   // when on_edge
  };
  std::vector<Placement> subdivision_map;  // indexed by result vertex
};

struct ExpansionVerdict {
  bool ok = true;
  std::string violation;
};

ExpansionVerdict verify_expansion(const ExpansionCertificate& cert);

// Contract split edges and absorb subdivision paths (into the lower-id
// endpoint) to exhibit base <= result.
MinorModel expansion_to_minor_model(const ExpansionCertificate& cert);

}  // namespace minors
