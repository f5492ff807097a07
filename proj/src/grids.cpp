#include "minors/grids.hpp"

#include <algorithm>

namespace minors {

namespace {

int vid(int ring, int pos, int n) { return (ring - 1) * n + (pos - 1); }

// ring/pos of a labeled cylinder derived from vertex labels
struct CylShape {
  int m = 0;  // rings
  int n = 0;  // cycle length
};

CylShape shape_of(const Graph& g) {
  if (!g.has_labels()) throw std::invalid_argument("grid operation requires labels");
  CylShape s;
  for (const auto& c : g.labels()) {
    s.m = std::max(s.m, c.ring);
    s.n = std::max(s.n, c.pos);
  }
  if (g.n() != s.m * s.n) throw std::invalid_argument("labels do not form a full cylinder");
  return s;
}

}  // namespace

void MixedSurfaceGridSpec::validate() const {
  if (k < 3) throw std::invalid_argument("mixed surface grid: order must be at least 3");
  std::set<int> all;
  for (int p : handle_positions) all.insert(p);
  for (int p : crosscap_positions) all.insert(p);
  if (static_cast<int>(all.size()) != h() + c())
    throw std::invalid_argument("mixed surface grid: handle/crosscap positions overlap");
  for (int p = 2; p <= h() + c() + 1; ++p)
    if (!all.count(p)) throw std::invalid_argument("mixed surface grid: positions must cover [2, h+c+1]");
  if (!all.empty() && (*all.begin() < 2 || *all.rbegin() > h() + c() + 1))
    throw std::invalid_argument("mixed surface grid: position out of range");
}

MixedSurfaceGridSpec DyckGridSpec::to_mixed() const {
  int hh = h, cc = c;
  if (hh == -1 && cc == 2) {  // convention: D^{(-1,2)} = D^{(0,0)}
    hh = 0;
    cc = 0;
  }
  MixedSurfaceGridSpec m;
  m.k = k;
  for (int p = 2; p <= hh + 1; ++p) m.handle_positions.insert(p);
  for (int p = hh + 2; p <= hh + cc + 1; ++p) m.crosscap_positions.insert(p);
  return m;
}

void DyckGridSpec::validate() const {
  if (h < -1 || (h == -1 && c != 2) || c < 0) throw std::invalid_argument("dyck grid: bad parameters");
  to_mixed().validate();
}

void DyckWallSpec::validate() const {
  if (c < 0 || c > 2) throw std::invalid_argument("dyck wall: crosscaps must lie in [0, 2]");
  if (h < 0) throw std::invalid_argument("dyck wall: handles must be non-negative");
  if (t < 3) throw std::invalid_argument("dyck wall: order must be at least 3");
}

Graph cylindrical_grid(int m, int n) {
  if (m < 3 || n < 3) throw std::invalid_argument("cylindrical grid: both parameters must be at least 3");
  Graph g(m * n);
  std::vector<Coord> labels(m * n);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      int v = vid(i, j, n);
      labels[v] = {i, j};
      g.add_edge(v, vid(i, j % n + 1, n));
      if (i < m) g.add_edge(v, vid(i + 1, j, n));
    }
  g.set_labels(std::move(labels));
  return g;
}

std::vector<Edge> handle_edges(int m, int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("handle position out of range");
  const int L = 4 * m * n;
  auto wrap = [L](int p) { return (p - 1) % L + 1; };
  std::vector<Edge> out;
  const int base = 4 * m * (i - 1);
  for (int j = 1; j <= m; ++j) {
    Vertex a = vid(1, wrap(base + j), L);
    Vertex b = vid(1, wrap(base + 3 * m - j + 1), L);
    out.push_back({std::min(a, b), std::max(a, b)});
  }
  for (int j = 1; j <= m; ++j) {
    Vertex a = vid(1, wrap(base + m + j), L);
    Vertex b = vid(1, wrap(base + 4 * m - j + 1), L);
    out.push_back({std::min(a, b), std::max(a, b)});
  }
  return out;
}

std::vector<Edge> crosscap_edges(int m, int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("crosscap position out of range");
  const int L = 4 * m * n;
  auto wrap = [L](int p) { return (p - 1) % L + 1; };
  std::vector<Edge> out;
  const int base = 4 * m * (i - 1);
  for (int j = 1; j <= 2 * m; ++j) {
    Vertex a = vid(1, wrap(base + j), L);
    Vertex b = vid(1, wrap(base + 2 * m + j), L);
    out.push_back({std::min(a, b), std::max(a, b)});
  }
  return out;
}

namespace {

Graph add_transaction(const Graph& g, int i, bool handle) {
  auto s = shape_of(g);
  if (s.n % (4 * s.m) != 0)
    throw std::invalid_argument("transaction requires an (m, 4m*n) cylinder");
  const int positions = s.n / (4 * s.m);
  Graph out = g;
  auto edges = handle ? handle_edges(s.m, positions, i) : crosscap_edges(s.m, positions, i);
  for (const auto& [a, b] : edges) out.add_edge(a, b);
  return out;
}

}  // namespace

Graph add_handle(const Graph& g, int i) { return add_transaction(g, i, true); }
Graph add_crosscap(const Graph& g, int i) { return add_transaction(g, i, false); }

Graph mixed_surface_grid(const MixedSurfaceGridSpec& spec) {
  spec.validate();
  Graph g = cylindrical_grid(spec.k, spec.cycle_length());
  for (int p : spec.handle_positions) g = add_handle(g, p);
  for (int p : spec.crosscap_positions) g = add_crosscap(g, p);
  return g;
}

Graph dyck_grid(const DyckGridSpec& spec) {
  spec.validate();
  return mixed_surface_grid(spec.to_mixed());
}

WallStructure elementary_wall(int k) {
  if (k < 3) throw std::invalid_argument("elementary wall: order must be at least 3");
  const int rows = k, cols = 2 * k;
  auto gid = [cols](int i, int j) { return (i - 1) * cols + (j - 1); };
  // column edge (i,j)-(i+1,j) survives iff i and j have different parity
  std::vector<char> alive(rows * cols, 1);
  auto degree = [&](int i, int j) {
    int d = 0;
    if (j > 1 && alive[gid(i, j - 1)]) ++d;
    if (j < cols && alive[gid(i, j + 1)]) ++d;
    if (i > 1 && alive[gid(i - 1, j)] && (i - 1) % 2 != j % 2) ++d;
    if (i < rows && alive[gid(i + 1, j)] && i % 2 != j % 2) ++d;
    return d;
  };
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j)
      if (degree(i, j) <= 1) alive[gid(i, j)] = 0;

  std::vector<int> newid(rows * cols, -1);
  int n = 0;
  for (int v = 0; v < rows * cols; ++v)
    if (alive[v]) newid[v] = n++;
  Graph g(n);
  std::vector<Coord> labels(n);
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) {
      if (!alive[gid(i, j)]) continue;
      labels[newid[gid(i, j)]] = {i, j};
      if (j < cols && alive[gid(i, j + 1)]) g.add_edge(newid[gid(i, j)], newid[gid(i, j + 1)]);
      if (i < rows && alive[gid(i + 1, j)] && i % 2 != j % 2)
        g.add_edge(newid[gid(i, j)], newid[gid(i + 1, j)]);
    }
  g.set_labels(labels);

  WallStructure w;
  w.order = k;
  w.graph = g;
  w.rows.assign(rows, {});
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j)
      if (alive[gid(i, j)]) w.rows[i - 1].push_back(newid[gid(i, j)]);
  w.columns.assign(k, {});
  for (int cidx = 1; cidx <= k; ++cidx) {
    // zigzag through grid columns 2c-1 and 2c, top to bottom
    int j0 = 2 * cidx - 1, j1 = 2 * cidx;
    for (int i = 1; i <= rows; ++i)
      for (int j : {j0, j1})
        if (alive[gid(i, j)]) w.columns[cidx - 1].push_back(newid[gid(i, j)]);
  }
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) {
      if (!alive[gid(i, j)]) continue;
      bool onP = (j <= 2 || j >= cols - 1) || (i == 1 || i == rows);
      if (onP) w.perimeter.push_back(newid[gid(i, j)]);
    }
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) == 3) w.branch_vertices.push_back(v);
  return w;
}

DyckWallStructure dyck_wall(const DyckWallSpec& spec) {
  spec.validate();
  DyckGridSpec dg{spec.h, spec.c, 2 * spec.t};
  Graph big = dyck_grid(dg);
  const int m = 2 * spec.t;
  const int L = 4 * (spec.h + spec.c + 1) * m;
  const int t = spec.t;

  // keep rings 1..t; drop column edges with matching parities; drop every
  // transaction edge incident to an even position of C_1
  std::vector<char> keep_vertex(big.n(), 0);
  for (int i = 1; i <= t; ++i)
    for (int j = 1; j <= L; ++j) keep_vertex[vid(i, j, L)] = 1;

  std::vector<int> newid(big.n(), -1);
  int n = 0;
  for (int v = 0; v < big.n(); ++v)
    if (keep_vertex[v]) newid[v] = n++;
  Graph g(n);
  std::vector<Coord> labels(n);
  for (int v = 0; v < big.n(); ++v)
    if (keep_vertex[v]) labels[newid[v]] = big.label(v);

  for (const auto& [u, v] : big.edges()) {
    if (!keep_vertex[u] || !keep_vertex[v]) continue;
    Coord cu = big.label(u), cv = big.label(v);
    if (cu.ring == cv.ring) {
      if (cu.ring == 1 && std::abs(cu.pos - cv.pos) != 1 && std::abs(cu.pos - cv.pos) != L - 1) {
        // transaction edge on C_1: literal rule, drop if either end is even
        if (cu.pos % 2 == 0 || cv.pos % 2 == 0) continue;
      }
      g.add_edge(newid[u], newid[v]);
    } else {
      int lo = std::min(cu.ring, cv.ring), j = cu.pos;
      bool drop = (lo % 2 == 1 && j % 2 == 1) || (lo % 2 == 0 && j % 2 == 0);
      if (!drop) g.add_edge(newid[u], newid[v]);
    }
  }
  g.set_labels(labels);

  DyckWallStructure d;
  d.spec = spec;
  d.graph = g;
  d.cycles.assign(t, {});
  for (int i = 1; i <= t; ++i)
    for (int j = 1; j <= L; ++j) d.cycles[i - 1].push_back(newid[vid(i, j, L)]);
  for (int cidx = 1; cidx <= L / 2; ++cidx) {
    int j0 = 2 * cidx - 1, j1 = 2 * cidx;
    std::vector<Vertex> col;
    for (int i = 1; i <= t; ++i)
      for (int j : {j0, j1}) col.push_back(newid[vid(i, j, L)]);
    d.columns.push_back(col);
  }
  return d;
}

std::vector<std::vector<Vertex>> outermost_cycles(const Graph& g, int b) {
  auto s = shape_of(g);
  if (b >= s.m) throw std::invalid_argument("outermost_cycles: b must be below the grid order");
  std::vector<std::vector<Vertex>> out;
  for (int i = s.m - b + 1; i <= s.m; ++i) {
    std::vector<Vertex> cyc;
    for (int j = 1; j <= s.n; ++j) cyc.push_back(vid(i, j, s.n));
    out.push_back(cyc);
  }
  return out;
}

}  // namespace minors
