#pragma once

#include <string>
#include <vector>

#include "minors/separations.hpp"

namespace minors {

struct TreeDecomposition {
  std::vector<std::pair<int, int>> tree_edges;  // over nodes 0..bags.size()-1
  std::vector<VertexSet> bags;

  int nodes() const { return static_cast<int>(bags.size()); }
  int width() const;
  int adhesion() const;
};

struct TdReport {
  bool ok = true;
  std::string violation;  // names the first violated condition with a witness
};

TdReport validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);

// Bag of `node` with each adhesion set completed to a clique.
Graph torso(const Graph& g, const TreeDecomposition& td, int node);

}  // namespace minors
