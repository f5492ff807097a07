#pragma once

#include "minors/tree_decomposition.hpp"

namespace minors {

struct TreewidthResult {
  int width = 0;
  TreeDecomposition decomposition;  // witnessing optimal decomposition
};

// Exact treewidth by dynamic programming over elimination orders.
// Refuses graphs above the cap rather than approximating.
TreewidthResult exact_treewidth(const Graph& g, int vertex_cap = 20);

}  // namespace minors
