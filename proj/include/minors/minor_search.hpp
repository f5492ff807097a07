#pragma once

#include <optional>

#include "minors/minor_model.hpp"

namespace minors {

struct MinorSearchCaps {
  int pattern_cap = 8;
  int host_cap = 18;
  std::uint64_t node_budget = 200'000'000;
};

// Exact backtracking search for a minor model of `pattern` in `host`.
// Nothing found means no model exists (within the configured caps).
std::optional<MinorModel> find_minor_bruteforce(const Graph& host, const Graph& pattern,
                                                const MinorSearchCaps& caps = {});

// Exact subgraph-isomorphism embedding (injective, edges preserved);
// returns the host image per pattern vertex.
std::optional<std::vector<Vertex>> find_subgraph_embedding(const Graph& host, const Graph& pattern,
                                                           std::uint64_t node_budget = 50'000'000);

}  // namespace minors
