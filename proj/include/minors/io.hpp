#pragma once

#include <string>

#include "minors/tree_decomposition.hpp"

namespace minors {

// graph6, bit-exact per the McKay format description (no trailing newline).
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

std::string to_dot(const Graph& g);

// {"n": ..., "edges": [[u,v],...], "labels": [[ring,pos],...]?}
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& js);

// {"nodes": N, "tree_edges": [[a,b],...], "bags": [[...],...]}
std::string td_to_json(const TreeDecomposition& td);
TreeDecomposition td_from_json(const std::string& js);

}  // namespace minors
