#pragma once

#include <map>
#include <string>

#include "minors/separations.hpp"

namespace minors {

// Certificate that `pattern` is a minor of `host`: one branch set per pattern
// vertex; sets disjoint, connected, and joined across every pattern edge.
struct MinorModel {
  Graph pattern;
  Graph host;
  std::string host_ref;  // optional spec string naming the host
  std::vector<VertexSet> branch_sets;  // indexed by pattern vertex
};

struct ModelVerdict {
  bool ok = true;
  std::string violation;  // first failing invariant, with a witness
};

ModelVerdict verify_minor_model(const MinorModel& m);

// Transitivity: branch sets of the outer model, unioned along the inner one.
MinorModel compose_models(const MinorModel& inner, const MinorModel& outer);

MinorModel identity_model(const Graph& g);

std::string model_to_json(const MinorModel& m, bool inline_host = false);
// Host is rebuilt from host_ref (a generator spec string) unless inlined.
MinorModel model_from_json(const std::string& js);

}  // namespace minors
