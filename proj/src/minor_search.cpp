#include "minors/minor_search.hpp"

#include <algorithm>

namespace minors {

namespace {

using Mask = std::uint64_t;

int popcount(Mask m) { return __builtin_popcountll(m); }
int lowbit(Mask m) { return __builtin_ctzll(m); }

struct Searcher {
  const Graph& host;
  const Graph& pattern;
  std::vector<Mask> hadj;        // host adjacency masks
  std::vector<int> order;        // pattern vertices, most constrained first
  std::vector<int> slot_of;      // pattern vertex -> slot
  std::vector<Mask> chosen;      // per slot
  Mask free_mask = 0;
  std::uint64_t budget;
  bool out_of_budget = false;

  Searcher(const Graph& h, const Graph& p, std::uint64_t b) : host(h), pattern(p), budget(b) {
    hadj.assign(host.n(), 0);
    for (const auto& [u, v] : host.edges()) {
      hadj[u] |= Mask{1} << v;
      hadj[v] |= Mask{1} << u;
    }
    order.resize(pattern.n());
    for (int i = 0; i < pattern.n(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b2) {
      return pattern.degree(a) > pattern.degree(b2);
    });
    slot_of.assign(pattern.n(), -1);
    for (int s = 0; s < pattern.n(); ++s) slot_of[order[s]] = s;
    chosen.assign(pattern.n(), 0);
    for (Vertex v = 0; v < host.n(); ++v) free_mask |= Mask{1} << v;
  }

  Mask neighborhood(Mask s) const {
    Mask out = 0;
    Mask m = s;
    while (m) {
      int v = lowbit(m);
      m &= m - 1;
      out |= hadj[v];
    }
    return out;
  }

  Mask reach_from(Mask seeds, Mask allowed) const {
    Mask reached = seeds;
    while (true) {
      Mask grown = reached | (neighborhood(reached) & allowed);
      if (grown == reached) return reached;
      reached = grown;
    }
  }

  // slots earlier than `slot` whose pattern vertex is adjacent to this one
  std::vector<int> required_slots(int slot) const {
    std::vector<int> req;
    int pv = order[slot];
    for (Vertex w : pattern.neighbors(pv))
      if (slot_of[w] < slot) req.push_back(slot_of[w]);
    std::sort(req.begin(), req.end());
    return req;
  }

  bool tick() {
    if (budget == 0) {
      out_of_budget = true;
      return false;
    }
    --budget;
    return true;
  }

  bool solve(int slot) {
    if (out_of_budget) return false;
    if (slot == pattern.n()) return true;
    const auto req = required_slots(slot);
    const int later = pattern.n() - slot - 1;
    Mask seeds = free_mask;
    while (seeds) {
      int seed = lowbit(seeds);
      seeds &= seeds - 1;
      Mask banned = (Mask{1} << seed) - 1;  // canonical: seed is the minimum vertex
      if (grow(slot, Mask{1} << seed, banned, req, later)) return true;
      if (out_of_budget) return false;
    }
    return false;
  }

  bool satisfied(Mask s, const std::vector<int>& req) const {
    Mask nb = neighborhood(s);
    for (int r : req)
      if (!(nb & chosen[r])) return false;
    return true;
  }

  bool grow(int slot, Mask s, Mask banned, const std::vector<int>& req, int later) {
    if (!tick()) return false;
    if (satisfied(s, req)) {
      chosen[slot] = s;
      free_mask &= ~s;
      bool done = solve(slot + 1);
      free_mask |= s;
      if (done) return true;
      if (out_of_budget) return false;
    }
    if (popcount(s) >= popcount(free_mask) - later) return false;
    Mask cand = neighborhood(s) & free_mask & ~banned & ~s;
    if (!cand) return false;
    // the finished set can only ever touch what this region reaches
    Mask region = reach_from(s, free_mask & ~banned);
    for (int r : req)
      if (!(neighborhood(region) & chosen[r]) && !(neighborhood(chosen[r]) & region)) return false;
    int c = lowbit(cand);
    if (grow(slot, s | (Mask{1} << c), banned, req, later)) return true;
    if (out_of_budget) return false;
    return grow(slot, s, banned | (Mask{1} << c), req, later);
  }
};

}  // namespace

std::optional<MinorModel> find_minor_bruteforce(const Graph& host, const Graph& pattern,
                                                const MinorSearchCaps& caps) {
  if (pattern.n() > caps.pattern_cap) throw CapExceeded("find_minor_bruteforce: pattern exceeds cap");
  if (host.n() > caps.host_cap || host.n() > 64) throw CapExceeded("find_minor_bruteforce: host exceeds cap");
  if (pattern.n() == 0) return identity_model(Graph(0));
  if (pattern.n() > host.n()) return std::nullopt;

  Searcher s(host, pattern, caps.node_budget);
  bool found = s.solve(0);
  if (s.out_of_budget) throw CapExceeded("find_minor_bruteforce: node budget exhausted");
  if (!found) return std::nullopt;

  MinorModel m;
  m.pattern = pattern;
  m.host = host;
  m.branch_sets.assign(pattern.n(), {});
  for (int slot = 0; slot < pattern.n(); ++slot) {
    Mask bs = s.chosen[slot];
    VertexSet vs;
    while (bs) {
      vs.push_back(lowbit(bs));
      bs &= bs - 1;
    }
    m.branch_sets[s.order[slot]] = vs;
  }
  auto verdict = verify_minor_model(m);
  if (!verdict.ok) throw std::logic_error("find_minor_bruteforce: produced invalid model: " + verdict.violation);
  return m;
}

std::optional<std::vector<Vertex>> find_subgraph_embedding(const Graph& host, const Graph& pattern,
                                                           std::uint64_t node_budget) {
  if (host.n() > 64) throw CapExceeded("find_subgraph_embedding: host too large");
  std::vector<Mask> hadj(host.n(), 0);
  for (const auto& [u, v] : host.edges()) {
    hadj[u] |= Mask{1} << v;
    hadj[v] |= Mask{1} << u;
  }
  // order pattern vertices so each (after the first) touches an earlier one
  std::vector<int> order;
  std::vector<char> placed(pattern.n(), 0);
  std::vector<int> by_deg(pattern.n());
  for (int i = 0; i < pattern.n(); ++i) by_deg[i] = i;
  std::stable_sort(by_deg.begin(), by_deg.end(),
                   [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
  for (int start : by_deg) {
    if (placed[start]) continue;
    order.push_back(start);
    placed[start] = 1;
    for (size_t head = order.size() - 1; head < order.size(); ++head) {
      // attach remaining vertices adjacent to the placed prefix, highest degree first
      bool grew = true;
      while (grew) {
        grew = false;
        for (int cand : by_deg) {
          if (placed[cand]) continue;
          bool touches = false;
          for (Vertex w : pattern.neighbors(cand))
            if (placed[w]) touches = true;
          if (touches) {
            order.push_back(cand);
            placed[cand] = 1;
            grew = true;
          }
        }
      }
      break;
    }
  }

  std::vector<Vertex> image(pattern.n(), -1);
  Mask used = 0;
  std::uint64_t budget = node_budget;
  bool out_of_budget = false;

  std::function<bool(size_t)> rec = [&](size_t idx) -> bool {
    if (idx == order.size()) return true;
    if (budget-- == 0) {
      out_of_budget = true;
      return false;
    }
    int pv = order[idx];
    // candidates: host vertices of sufficient degree adjacent to all mapped
    // pattern neighbors
    Mask cand = ~used & ((host.n() == 64) ? ~Mask{0} : ((Mask{1} << host.n()) - 1));
    for (Vertex w : pattern.neighbors(pv))
      if (image[w] != -1) cand &= hadj[image[w]];
    while (cand) {
      int hv = lowbit(cand);
      cand &= cand - 1;
      if (host.degree(hv) < pattern.degree(pv)) continue;
      image[pv] = hv;
      used |= Mask{1} << hv;
      if (rec(idx + 1)) return true;
      used &= ~(Mask{1} << hv);
      image[pv] = -1;
      if (out_of_budget) return false;
    }
    return false;
  };
  bool found = rec(0);
  if (out_of_budget) throw CapExceeded("find_subgraph_embedding: node budget exhausted");
  if (!found) return std::nullopt;
  return image;
}

}  // namespace minors
