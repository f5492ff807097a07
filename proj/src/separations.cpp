#include "minors/separations.hpp"

#include <algorithm>

namespace minors {

VertexSet make_set(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool is_separation(const Graph& g, const VertexSet& A, const VertexSet& B) {
  std::vector<char> inA(g.n(), 0), inB(g.n(), 0);
  for (Vertex v : A) {
    if (!g.has_vertex(v)) return false;
    inA[v] = 1;
  }
  for (Vertex v : B) {
    if (!g.has_vertex(v)) return false;
    inB[v] = 1;
  }
  for (Vertex v = 0; v < g.n(); ++v)
    if (!inA[v] && !inB[v]) return false;
  for (const auto& [u, v] : g.edges()) {
    bool uPrivA = inA[u] && !inB[u], uPrivB = inB[u] && !inA[u];
    bool vPrivA = inA[v] && !inB[v], vPrivB = inB[v] && !inA[v];
    if ((uPrivA && vPrivB) || (uPrivB && vPrivA)) return false;
  }
  return true;
}

namespace {

// Emits all (Z, component-assignment) separations with |Z| < max_order.
void enumerate_impl(const Graph& g, int max_order, const SeparationEnumOptions& opts,
                    const std::function<bool(const Separation&)>& fn) {
  if (g.n() > opts.vertex_cap)
    throw CapExceeded("enumerate_separations: instance exceeds vertex cap");
  const int n = g.n();
  std::vector<Vertex> sep;
  bool stop = false;

  auto emit_for_separator = [&](const VertexSet& Z) {
    std::vector<char> inZ(n, 0);
    for (Vertex v : Z) inZ[v] = 1;
    // components of G - Z
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (Vertex s = 0; s < n && !stop; ++s) {
      if (inZ[s] || comp[s] != -1) continue;
      std::vector<Vertex> stack{s};
      comp[s] = ncomp;
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v))
          if (!inZ[w] && comp[w] == -1) {
            comp[w] = ncomp;
            stack.push_back(w);
          }
      }
      ++ncomp;
    }
    if (ncomp > 30) throw CapExceeded("enumerate_separations: too many components");
    // all assignments of components to the two sides; dedupe the (A,B)/(B,A)
    // symmetry by requiring component 0 (when present) on side A.
    for (std::uint32_t mask = 0; mask < (1u << ncomp) && !stop; ++mask) {
      if (ncomp > 0 && (mask & 1u)) continue;  // comp 0 stays on side A
      VertexSet A = Z, B = Z;
      for (Vertex v = 0; v < n; ++v) {
        if (inZ[v]) continue;
        if (mask & (1u << comp[v]))
          B.push_back(v);
        else
          A.push_back(v);
      }
      std::sort(A.begin(), A.end());
      std::sort(B.begin(), B.end());
      bool properA = A.size() > Z.size(), properB = B.size() > Z.size();
      if (!opts.include_degenerate && !(properA && properB)) continue;
      Separation s{A, B};
      if (B < A) std::swap(s.A, s.B);
      if (!fn(s)) {
        stop = true;
        return;
      }
    }
  };

  std::function<void(int, int)> choose = [&](int start, int remaining) {
    if (stop) return;
    VertexSet Z(sep.begin(), sep.end());
    emit_for_separator(Z);
    if (remaining == 0 || stop) return;
    for (Vertex v = start; v < n; ++v) {
      sep.push_back(v);
      choose(v + 1, remaining - 1);
      sep.pop_back();
      if (stop) return;
    }
  };
  choose(0, max_order - 1);
}

}  // namespace

void for_each_separation(const Graph& g, int max_order, const SeparationEnumOptions& opts,
                         const std::function<bool(const Separation&)>& fn) {
  if (max_order <= 0) return;
  enumerate_impl(g, max_order, opts, fn);
}

std::vector<Separation> enumerate_separations(const Graph& g, int max_order,
                                              const SeparationEnumOptions& opts) {
  std::vector<Separation> out;
  for_each_separation(g, max_order, opts, [&](const Separation& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

bool is_quasi_4_connected(const Graph& g, int vertex_cap) {
  SeparationEnumOptions opts;
  opts.vertex_cap = vertex_cap;
  opts.include_degenerate = true;
  bool ok = true;
  for_each_separation(g, 4, opts, [&](const Separation& s) {
    auto privA = set_difference(s.A, s.B);
    auto privB = set_difference(s.B, s.A);
    bool smallA = privA.size() <= 1, smallB = privB.size() <= 1;
    if (smallA == smallB) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

}  // namespace minors
