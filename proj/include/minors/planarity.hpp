#pragma once

#include "minors/graph.hpp"

namespace minors {

// Boyer-Myrvold test (Boost.Graph backend).
bool is_planar(const Graph& g);

}  // namespace minors
