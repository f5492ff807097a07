#include "minors/expansion.hpp"

#include <algorithm>
#include <sstream>

namespace minors {

namespace {

struct Replay {
  Graph g;
  std::vector<Vertex> collapse;  // current vertex -> base vertex
  std::string error;
  bool ok = true;
};

Replay replay_splits(const Graph& base, const std::vector<SplitRecord>& splits) {
  Replay r;
  r.g = base;
  r.collapse.resize(base.n());
  for (Vertex v = 0; v < base.n(); ++v) r.collapse[v] = v;
  for (size_t idx = 0; idx < splits.size(); ++idx) {
    const auto& s = splits[idx];
    std::ostringstream why;
    if (!r.g.has_vertex(s.vertex)) {
      why << "split " << idx << ": vertex out of range";
      return {r.g, r.collapse, why.str(), false};
    }
    VertexSet nb = make_set(r.g.neighbors(s.vertex));
    if (!set_intersection(s.to_x1, s.to_x2).empty()) {
      why << "split " << idx << ": neighbor parts overlap";
      return {r.g, r.collapse, why.str(), false};
    }
    if (set_union(s.to_x1, s.to_x2) != nb) {
      why << "split " << idx << ": parts do not partition the neighborhood";
      return {r.g, r.collapse, why.str(), false};
    }
    Graph next(r.g.n() + 1);
    Vertex x1 = s.vertex, x2 = r.g.n();
    for (const auto& [u, v] : r.g.edges())
      if (u != s.vertex && v != s.vertex) next.add_edge(u, v);
    for (Vertex w : s.to_x1) next.add_edge(x1, w);
    for (Vertex w : s.to_x2) next.add_edge(x2, w);
    next.add_edge(x1, x2);
    r.collapse.push_back(r.collapse[s.vertex]);
    r.g = next;
  }
  return r;
}

}  // namespace

ExpansionVerdict verify_expansion(const ExpansionCertificate& cert) {
  std::ostringstream why;
  Replay rep = replay_splits(cert.base, cert.splits);
  if (!rep.ok) return {false, rep.error};
  const Graph& gp = rep.g;  // the split graph

  if (static_cast<int>(cert.subdivision_map.size()) != cert.result.n())
    return {false, "subdivision map size differs from result order"};

  std::vector<Vertex> to_result(gp.n(), -1);
  for (Vertex r = 0; r < cert.result.n(); ++r) {
    const auto& p = cert.subdivision_map[r];
    if (!p.on_edge) {
      if (!gp.has_vertex(p.vertex)) return {false, "subdivision map names unknown split-graph vertex"};
      if (to_result[p.vertex] != -1) return {false, "two result vertices map to one split-graph vertex"};
      to_result[p.vertex] = r;
    } else if (!gp.has_edge(p.edge.first, p.edge.second)) {
      return {false, "subdivision map names a non-edge of the split graph"};
    }
  }
  for (Vertex v = 0; v < gp.n(); ++v)
    if (to_result[v] == -1) {
      why << "split-graph vertex " << v << " has no image in the result";
      return {false, why.str()};
    }

  // each split-graph edge must be realized by a path of its subdivision
  // vertices, and those paths must account for every result edge
  int edges_used = 0;
  for (const auto& [a, b] : gp.edges()) {
    std::vector<Vertex> interior;
    for (Vertex r = 0; r < cert.result.n(); ++r) {
      const auto& p = cert.subdivision_map[r];
      if (p.on_edge && p.edge == Edge{a, b}) interior.push_back(r);
    }
    Vertex cur = to_result[a], goal = to_result[b];
    std::vector<char> avail(cert.result.n(), 0);
    for (Vertex r : interior) avail[r] = 1;
    Vertex prev = -1;
    size_t steps = 0;
    while (true) {
      if (cur == goal && steps == interior.size() + 1) break;
      Vertex next = -1;
      for (Vertex w : cert.result.neighbors(cur)) {
        if (w == prev) continue;
        if (avail[w] || (w == goal && steps == interior.size())) {
          if (next != -1) {
            why << "subdivision of edge {" << a << "," << b << "} is not a path";
            return {false, why.str()};
          }
          next = w;
        }
      }
      if (next == -1) {
        why << "subdivision of edge {" << a << "," << b << "} does not reach the far endpoint";
        return {false, why.str()};
      }
      if (avail[next]) avail[next] = 0;
      prev = cur;
      cur = next;
      ++steps;
      if (steps > interior.size() + 1) {
        why << "subdivision of edge {" << a << "," << b << "} is too long";
        return {false, why.str()};
      }
    }
    for (Vertex r : interior)
      if (cert.result.degree(r) != 2) {
        why << "subdivision vertex " << r << " has degree " << cert.result.degree(r);
        return {false, why.str()};
      }
    edges_used += static_cast<int>(interior.size()) + 1;
  }
  if (edges_used != cert.result.m())
    return {false, "result has edges not accounted for by the subdivision"};

  for (Vertex r = 0; r < cert.result.n(); ++r)
    if (cert.result.degree(r) >= 3 &&
        !std::binary_search(cert.branch_vertices.begin(), cert.branch_vertices.end(), r)) {
      why << "vertex " << r << " has degree >= 3 but is not a branch vertex";
      return {false, why.str()};
    }
  return {true, ""};
}

MinorModel expansion_to_minor_model(const ExpansionCertificate& cert) {
  auto verdict = verify_expansion(cert);
  if (!verdict.ok) throw std::invalid_argument("expansion_to_minor_model: " + verdict.violation);
  Replay rep = replay_splits(cert.base, cert.splits);

  MinorModel m;
  m.pattern = cert.base;
  m.host = cert.result;
  m.branch_sets.assign(cert.base.n(), {});
  for (Vertex r = 0; r < cert.result.n(); ++r) {
    const auto& p = cert.subdivision_map[r];
    Vertex gp_vertex = p.on_edge ? std::min(p.edge.first, p.edge.second) : p.vertex;
    m.branch_sets[rep.collapse[gp_vertex]].push_back(r);
  }
  for (auto& bs : m.branch_sets) bs = make_set(bs);
  auto check = verify_minor_model(m);
  if (!check.ok) throw std::logic_error("expansion_to_minor_model: derived model invalid: " + check.violation);
  return m;
}

}  // namespace minors
