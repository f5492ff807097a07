#pragma once

#include <string>
#include <variant>

#include "minors/grids.hpp"

namespace minors {

struct CylSpec {
  int m = 0;
  int n = 0;
};
struct WallSpec {
  int k = 0;
};

using FamilySpec = std::variant<CylSpec, MixedSurfaceGridSpec, DyckGridSpec, DyckWallSpec, WallSpec>;

// e.g. "cyl:m=3,n=12" | "msg:k=3,h={2},c={3}" | "dyck:h=1,c=1,k=3"
//      | "wall:k=4" | "dyckwall:h=1,c=1,t=3"
FamilySpec parse_spec_string(const std::string& s);
std::string format_spec_string(const FamilySpec& spec);

// Generates the named family member (wall-style specs yield the graph part).
Graph build_from_spec(const FamilySpec& spec);

}  // namespace minors
