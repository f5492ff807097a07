#include "minors/strip_router.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace minors {

namespace {

std::pair<int, int> grid_shape(const Graph& g) {
  int rings = 0, cols = 0;
  for (const auto& c : g.labels()) {
    rings = std::max(rings, c.ring);
    cols = std::max(cols, c.pos);
  }
  if (g.n() != rings * cols) throw std::invalid_argument("GridModelBuilder: labels are not a full grid");
  return {rings, cols};
}

}  // namespace

GridModelBuilder::GridModelBuilder(Graph host, Graph target)
    : host_(std::move(host)), target_(std::move(target)) {
  auto [hr, hc] = grid_shape(host_);
  host_rings_ = hr;
  host_cols_ = hc;
  auto [tr, tc] = grid_shape(target_);
  target_rings_ = tr;
  target_cols_ = tc;
  owner_.assign(host_.n(), -1);
  reserved_.assign(host_.n(), -1);
  blobs_.assign(target_.n(), {});
}

Vertex GridModelBuilder::hv(int ring, int pos) const {
  if (ring < 1 || ring > host_rings_) throw std::logic_error("hv: ring out of range");
  int p = ((pos - 1) % host_cols_ + host_cols_) % host_cols_;
  return (ring - 1) * host_cols_ + p;
}

Vertex GridModelBuilder::tv(int ring, int pos) const {
  if (ring < 1 || ring > target_rings_) throw std::logic_error("tv: ring out of range");
  int p = ((pos - 1) % target_cols_ + target_cols_) % target_cols_;
  return (ring - 1) * target_cols_ + p;
}

void GridModelBuilder::claim(Vertex target, Vertex host) {
  if (target < 0 || target >= target_.n()) throw std::logic_error("claim: bad target vertex");
  if (host < 0 || host >= host_.n()) throw std::logic_error("claim: bad host vertex");
  if (owner_[host] == target) return;
  if (owner_[host] != -1) {
    std::ostringstream why;
    Coord c = host_.label(host);
    why << "claim conflict at host (" << c.ring << "," << c.pos << "): owned by target "
        << owner_[host] << ", wanted by " << target;
    throw std::logic_error(why.str());
  }
  owner_[host] = target;
  blobs_[target].push_back(host);
}

void GridModelBuilder::claim_span(Vertex target, int ring, int pos_from, int pos_to) {
  for (int p = pos_from; p <= pos_to; ++p) claim(target, hv(ring, p));
}

void GridModelBuilder::claim_col(Vertex target, int pos, int ring_from, int ring_to) {
  for (int r = ring_from; r <= ring_to; ++r) claim(target, hv(r, pos));
}

void GridModelBuilder::reserve(int route_id, Vertex host) {
  if (owner_[host] != -1) throw std::logic_error("reserve: host vertex already claimed");
  if (reserved_[host] != -1 && reserved_[host] != route_id)
    throw std::logic_error("reserve: host vertex reserved twice");
  reserved_[host] = route_id;
}

bool GridModelBuilder::usable(int route_id, Vertex v, int min_ring, int max_ring) const {
  if (owner_[v] != -1) return false;
  if (reserved_[v] != -1 && reserved_[v] != route_id) return false;
  int ring = host_.label(v).ring;
  return ring >= min_ring && ring <= max_ring;
}

std::vector<Vertex> GridModelBuilder::bfs_segment(int route_id, const std::vector<Vertex>& sources,
                                                  const std::vector<Vertex>& goals, int min_ring,
                                                  int max_ring, const char* what) const {
  std::vector<int> parent(host_.n(), -2);
  std::vector<char> is_goal(host_.n(), 0);
  for (Vertex gvert : goals) is_goal[gvert] = 1;
  std::queue<Vertex> q;
  Vertex found = -1;
  for (Vertex s : sources) {
    if (!usable(route_id, s, min_ring, max_ring)) continue;
    if (parent[s] != -2) continue;
    parent[s] = -1;
    if (is_goal[s] && found == -1) found = s;
    q.push(s);
  }
  while (!q.empty() && found == -1) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : host_.neighbors(v)) {
      if (parent[w] != -2) continue;
      if (!usable(route_id, w, min_ring, max_ring)) continue;
      parent[w] = v;
      if (is_goal[w]) {
        found = w;
        break;
      }
      q.push(w);
    }
  }
  if (found == -1) {
    std::ostringstream why;
    why << "route segment failed (" << what << "), route " << route_id;
    throw std::logic_error(why.str());
  }
  std::vector<Vertex> path;
  for (Vertex v = found; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

void GridModelBuilder::route(int route_id, const RouteSpec& spec) {
  const auto& blob_u = blobs_.at(spec.target_u);
  const auto& blob_v = blobs_.at(spec.target_v);
  if (blob_u.empty() || blob_v.empty()) throw std::logic_error("route: endpoint blob is empty");

  auto free_neighbors_of = [&](const std::vector<Vertex>& blob) {
    std::vector<Vertex> out;
    for (Vertex b : blob)
      for (Vertex w : host_.neighbors(b))
        if (usable(route_id, w, spec.min_ring, spec.max_ring)) out.push_back(w);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };

  for (const auto& [a, b] : spec.chord_hops)
    if (!host_.has_edge(a, b)) throw std::logic_error("route: chord hop is not a host edge");

  // path pieces between consecutive chord hops
  std::vector<std::vector<Vertex>> pieces;
  std::vector<Vertex> sources = free_neighbors_of(blob_u);
  for (size_t h = 0; h < spec.chord_hops.size(); ++h) {
    std::vector<Vertex> goal{spec.chord_hops[h].first};
    pieces.push_back(bfs_segment(route_id, sources, goal, spec.min_ring, spec.max_ring, "to chord"));
    // claim as we go so later segments cannot collide with earlier ones
    for (Vertex v : pieces.back()) claim(spec.target_u, v);
    sources = {spec.chord_hops[h].second};
  }
  auto last =
      bfs_segment(route_id, sources, free_neighbors_of(blob_v), spec.min_ring, spec.max_ring, "to blob");

  if (!spec.chord_hops.empty()) {
    for (Vertex v : last) claim(spec.target_v, v);
  } else {
    size_t split_at = last.size() / 2;
    for (size_t i = 0; i < last.size(); ++i)
      claim(i < split_at ? spec.target_u : spec.target_v, last[i]);
  }

  if (!blobs_touch(spec.target_u, spec.target_v)) throw std::logic_error("route: blobs still not adjacent");
}

bool GridModelBuilder::blobs_touch(Vertex target_u, Vertex target_v) const {
  for (Vertex a : blobs_.at(target_u))
    for (Vertex b : host_.neighbors(a))
      if (owner_[b] == target_v) return true;
  return false;
}

MinorModel GridModelBuilder::finish(std::string host_ref) const {
  MinorModel m;
  m.pattern = target_;
  m.host = host_;
  m.host_ref = std::move(host_ref);
  m.branch_sets.resize(target_.n());
  for (Vertex t = 0; t < target_.n(); ++t) {
    VertexSet bs(blobs_[t].begin(), blobs_[t].end());
    std::sort(bs.begin(), bs.end());
    m.branch_sets[t] = bs;
  }
  return m;
}

}  // namespace minors
