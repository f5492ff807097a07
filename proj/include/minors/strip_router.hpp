#pragma once

#include <limits>

#include "minors/grids.hpp"
#include "minors/minor_model.hpp"

namespace minors {

// Coordinate-level assembly of a minor model of one labeled grid inside
// another. Every host vertex is claimed for exactly one target vertex; claims
// conflict loudly, so geometric mistakes surface at construction time instead
// of as verifier failures on 50k-vertex certificates.
class GridModelBuilder {
 public:
  GridModelBuilder(Graph host, Graph target);

  int host_rings() const { return host_rings_; }
  int host_cols() const { return host_cols_; }

  // pos is 1-based and wraps around the cylinder
  Vertex hv(int ring, int pos) const;
  Vertex tv(int ring, int pos) const;

  void claim(Vertex target, Vertex host);
  void claim_span(Vertex target, int ring, int pos_from, int pos_to);  // inclusive
  void claim_col(Vertex target, int pos, int ring_from, int ring_to);

  // Marks a host vertex as usable only by the given route.
  void reserve(int route_id, Vertex host);

  struct RouteSpec {
    Vertex target_u = -1;
    Vertex target_v = -1;
    // chord edges traversed in order; the route enters at first, leaves at second
    std::vector<Edge> chord_hops;
    int min_ring = 2;
    int max_ring = std::numeric_limits<int>::max();
  };

  // Finds a path from the blob of target_u to the blob of target_v through
  // free territory and the prescribed chords, and claims it: the part up to
  // the last chord goes to target_u, the rest to target_v (middle split when
  // there are no chords).
  void route(int route_id, const RouteSpec& spec);

  bool blobs_touch(Vertex target_u, Vertex target_v) const;

  MinorModel finish(std::string host_ref) const;

 private:
  std::vector<Vertex> bfs_segment(int route_id, const std::vector<Vertex>& sources,
                                  const std::vector<Vertex>& goals, int min_ring, int max_ring,
                                  const char* what) const;
  bool usable(int route_id, Vertex v, int min_ring, int max_ring) const;

  Graph host_;
  Graph target_;
  int host_rings_ = 0, host_cols_ = 0;
  int target_rings_ = 0, target_cols_ = 0;
  std::vector<int> owner_;     // host vertex -> target vertex or -1
  std::vector<int> reserved_;  // host vertex -> route id or -1
  std::vector<std::vector<Vertex>> blobs_;
};

}  // namespace minors
