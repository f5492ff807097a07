#pragma once

#include <functional>
#include <vector>

#include "minors/graph.hpp"

namespace minors {

using VertexSet = std::vector<Vertex>;  // sorted, unique

VertexSet make_set(std::vector<Vertex> vs);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);

// A separation (A, B): A u B = V(G), no edge between A\B and B\A.
struct Separation {
  VertexSet A;
  VertexSet B;
  int order() const { return static_cast<int>(set_intersection(A, B).size()); }
  Separation flipped() const { return {B, A}; }
};

bool is_separation(const Graph& g, const VertexSet& A, const VertexSet& B);

struct SeparationEnumOptions {
  int vertex_cap = 14;           // refuse larger instances
  bool include_degenerate = false;  // also emit separations with an empty side
};

// Every separation of order < max_order, once up to (A,B)/(B,A) symmetry,
// normalized with the lexicographically smaller side first. Degenerate
// separations (one side equal to V) are skipped unless requested.
std::vector<Separation> enumerate_separations(const Graph& g, int max_order,
                                              const SeparationEnumOptions& opts = {});

// Streaming form; callback returns false to stop early.
void for_each_separation(const Graph& g, int max_order, const SeparationEnumOptions& opts,
                         const std::function<bool(const Separation&)>& fn);

// Every separation of order <= 3 has exactly one side with at most one
// private vertex. Degenerate separations count.
bool is_quasi_4_connected(const Graph& g, int vertex_cap = 20);

}  // namespace minors
