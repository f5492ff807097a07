#include "minors/minor_model.hpp"

#include <sstream>

#include "json.hpp"
#include "minors/io.hpp"
#include "minors/spec_string.hpp"

namespace minors {

ModelVerdict verify_minor_model(const MinorModel& m) {
  std::ostringstream why;
  if (static_cast<int>(m.branch_sets.size()) != m.pattern.n())
    return {false, "branch set count differs from pattern order"};
  std::vector<int> owner(m.host.n(), -1);
  for (int v = 0; v < m.pattern.n(); ++v) {
    if (m.branch_sets[v].empty()) {
      why << "branch set of pattern vertex " << v << " is empty";
      return {false, why.str()};
    }
    for (Vertex x : m.branch_sets[v]) {
      if (!m.host.has_vertex(x)) {
        why << "branch set of " << v << " contains unknown host vertex " << x;
        return {false, why.str()};
      }
      if (owner[x] != -1) {
        why << "host vertex " << x << " lies in branch sets of " << owner[x] << " and " << v;
        return {false, why.str()};
      }
      owner[x] = v;
    }
  }
  for (int v = 0; v < m.pattern.n(); ++v)
    if (!m.host.is_connected_subset(m.branch_sets[v])) {
      why << "branch set of pattern vertex " << v << " is disconnected in the host";
      return {false, why.str()};
    }
  // adjacency matrix of branch sets via one edge sweep
  std::set<std::pair<int, int>> touching;
  for (const auto& [x, y] : m.host.edges()) {
    int a = owner[x], b = owner[y];
    if (a < 0 || b < 0 || a == b) continue;
    touching.insert({std::min(a, b), std::max(a, b)});
  }
  for (const auto& [u, v] : m.pattern.edges())
    if (!touching.count({u, v})) {
      why << "pattern edge {" << u << "," << v << "} has no host edge between its branch sets";
      return {false, why.str()};
    }
  return {true, ""};
}

MinorModel compose_models(const MinorModel& inner, const MinorModel& outer) {
  if (!(inner.host == outer.pattern))
    throw std::invalid_argument("compose_models: inner host differs from outer pattern");
  auto v1 = verify_minor_model(inner);
  if (!v1.ok) throw std::invalid_argument("compose_models: inner model invalid: " + v1.violation);
  auto v2 = verify_minor_model(outer);
  if (!v2.ok) throw std::invalid_argument("compose_models: outer model invalid: " + v2.violation);
  MinorModel out;
  out.pattern = inner.pattern;
  out.host = outer.host;
  out.host_ref = outer.host_ref;
  out.branch_sets.resize(inner.pattern.n());
  for (int v = 0; v < inner.pattern.n(); ++v) {
    VertexSet acc;
    for (Vertex mid : inner.branch_sets[v]) acc = set_union(acc, outer.branch_sets[mid]);
    out.branch_sets[v] = acc;
  }
  return out;
}

MinorModel identity_model(const Graph& g) {
  MinorModel m;
  m.pattern = g;
  m.host = g;
  m.branch_sets.resize(g.n());
  for (Vertex v = 0; v < g.n(); ++v) m.branch_sets[v] = {v};
  return m;
}

std::string model_to_json(const MinorModel& m, bool inline_host) {
  nlohmann::json j;
  j["pattern"] = nlohmann::json::parse(graph_to_json(m.pattern));
  if (!m.host_ref.empty() && !inline_host) {
    j["host_ref"] = m.host_ref;
  } else {
    j["host_ref"] = "inline";
    j["host"] = nlohmann::json::parse(graph_to_json(m.host));
  }
  auto& bs = j["branch_sets"] = nlohmann::json::object();
  for (int v = 0; v < m.pattern.n(); ++v) bs[std::to_string(v)] = m.branch_sets[v];
  return j.dump();
}

MinorModel model_from_json(const std::string& js) {
  auto j = nlohmann::json::parse(js);
  MinorModel m;
  m.pattern = graph_from_json(j.at("pattern").dump());
  std::string ref = j.at("host_ref").get<std::string>();
  if (ref == "inline") {
    m.host = graph_from_json(j.at("host").dump());
  } else {
    m.host_ref = ref;
    m.host = build_from_spec(parse_spec_string(ref));
  }
  m.branch_sets.assign(m.pattern.n(), {});
  for (auto& [key, val] : j.at("branch_sets").items()) {
    int v = std::stoi(key);
    if (v < 0 || v >= m.pattern.n()) throw std::invalid_argument("model json: branch set key out of range");
    m.branch_sets[v] = make_set(val.get<std::vector<Vertex>>());
  }
  return m;
}

}  // namespace minors
