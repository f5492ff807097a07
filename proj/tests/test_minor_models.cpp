#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "minors/expansion.hpp"
#include "minors/io.hpp"
#include "minors/minor_search.hpp"
#include "minors/planarity.hpp"
#include "oracles.hpp"

using namespace minors;

TEST_CASE("verifier accepts the identity and hand-built models") {
  Graph g = rect_grid(2, 3);
  CHECK(verify_minor_model(identity_model(g)).ok);

  // K_3 <= C_4 via {1},{2},{3,4} (1-indexed in the description)
  MinorModel m;
  m.pattern = complete_graph(3);
  m.host = cycle_graph(4);
  m.branch_sets = {{0}, {1}, {2, 3}};
  CHECK(verify_minor_model(m).ok);

  MinorModel bad = m;
  bad.branch_sets = {{0}, {1}, {3}};  // C_4 has no edge 1-3
  auto verdict = verify_minor_model(bad);
  CHECK_FALSE(verdict.ok);
  CHECK(verdict.violation.find("pattern edge") != std::string::npos);
}

TEST_CASE("verifier names the first failing invariant") {
  Graph host = path_graph(4);
  MinorModel m;
  m.pattern = path_graph(2);
  m.host = host;
  m.branch_sets = {{0, 1}, {1, 2}};
  CHECK(verify_minor_model(m).violation.find("branch sets of") != std::string::npos);
  m.branch_sets = {{0, 2}, {3}};
  CHECK(verify_minor_model(m).violation.find("disconnected") != std::string::npos);
}

TEST_CASE("brute force search on the named fixtures") {
  auto grid33 = rect_grid(3, 3);
  auto k4 = find_minor_bruteforce(grid33, complete_graph(4));
  REQUIRE(k4.has_value());
  CHECK(verify_minor_model(*k4).ok);

  CHECK_FALSE(find_minor_bruteforce(grid33, complete_graph(5)).has_value());
  CHECK_FALSE(find_minor_bruteforce(cycle_graph(3), cycle_graph(4)).has_value());
}

TEST_CASE("search agrees with the contraction-closure oracle") {
  std::mt19937 rng(2024);
  int checked = 0;
  while (checked < 120) {
    int n = 4 + static_cast<int>(rng() % 4);   // host up to 7
    int hn = 2 + static_cast<int>(rng() % 4);  // pattern up to 5
    Graph g(n), h(hn);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 100 < 55) g.add_edge(u, v);
    for (int u = 0; u < hn; ++u)
      for (int v = u + 1; v < hn; ++v)
        if (rng() % 100 < 55) h.add_edge(u, v);
    bool oracle = test_oracles::closure_has_minor(g, h);
    auto searched = find_minor_bruteforce(g, h);
    CHECK(oracle == searched.has_value());
    if (searched) CHECK(verify_minor_model(*searched).ok);
    ++checked;
  }
}

TEST_CASE("mutation rejection: random single-vertex edits never falsely accept") {
  auto grid33 = rect_grid(3, 3);
  auto model = *find_minor_bruteforce(grid33, complete_graph(4));
  std::mt19937 rng(99);
  for (int iter = 0; iter < 100; ++iter) {
    MinorModel mut = model;
    int v = static_cast<int>(rng() % mut.branch_sets.size());
    auto& bs = mut.branch_sets[v];
    if (rng() % 2 == 0 && bs.size() > 1) {
      bs.erase(bs.begin() + rng() % bs.size());
    } else {
      // move a vertex to another branch set
      int w = static_cast<int>(rng() % mut.branch_sets.size());
      if (w == v || bs.empty()) continue;
      Vertex moved = bs[rng() % bs.size()];
      bs.erase(std::find(bs.begin(), bs.end(), moved));
      mut.branch_sets[w] = set_union(mut.branch_sets[w], {moved});
    }
    auto verdict = verify_minor_model(mut);
    if (verdict.ok) {
      // only acceptable if the mutation is genuinely still a model
      CHECK(mut.branch_sets[v].size() + 1 <= model.branch_sets[v].size() + 1);
      for (int i = 0; i < mut.pattern.n(); ++i) CHECK(!mut.branch_sets[i].empty());
    }
  }
}

TEST_CASE("composition keeps validity and matches the identity laws") {
  Graph c4 = cycle_graph(4);
  MinorModel inner;  // K_3 <= C_4
  inner.pattern = complete_graph(3);
  inner.host = c4;
  inner.branch_sets = {{0}, {1}, {2, 3}};

  // C_4 <= C_4 with one subdivided edge (C_5)
  MinorModel outer;
  outer.pattern = c4;
  outer.host = cycle_graph(5);
  outer.branch_sets = {{0}, {1}, {2}, {3, 4}};
  REQUIRE(verify_minor_model(outer).ok);

  auto composed = compose_models(inner, outer);
  CHECK(verify_minor_model(composed).ok);
  CHECK(composed.pattern == inner.pattern);
  CHECK(composed.host == outer.host);

  auto viaIdentityOuter = compose_models(inner, identity_model(c4));
  CHECK(viaIdentityOuter.branch_sets == inner.branch_sets);
  auto viaIdentityInner = compose_models(identity_model(complete_graph(3)), inner);
  CHECK(viaIdentityInner.branch_sets == inner.branch_sets);
}

TEST_CASE("expansion certificates: replay, verdicts, and models") {
  // no splits, no subdivisions: result must equal base
  Graph k4 = complete_graph(4);
  ExpansionCertificate cert;
  cert.base = k4;
  cert.result = k4;
  for (Vertex v = 0; v < 4; ++v) cert.branch_vertices.push_back(v);
  cert.subdivision_map.resize(4);
  for (Vertex v = 0; v < 4; ++v) cert.subdivision_map[v] = {false, v, {-1, -1}};
  CHECK(verify_expansion(cert).ok);
  auto m = expansion_to_minor_model(cert);
  CHECK(verify_minor_model(m).ok);
  CHECK(m.branch_sets == identity_model(k4).branch_sets);

  // split a K_4 vertex into an edge
  ExpansionCertificate split = cert;
  split.result = Graph(5);
  // vertex 0 splits: neighbors {1,2} stay with x1=0, {3} goes to x2=4
  split.splits = {{0, {1, 2}, {3}}};
  Graph expect(5);
  expect.add_edge(0, 1);
  expect.add_edge(0, 2);
  expect.add_edge(4, 3);
  expect.add_edge(0, 4);
  expect.add_edge(1, 2);
  expect.add_edge(1, 3);
  expect.add_edge(2, 3);
  split.result = expect;
  split.branch_vertices = {0, 1, 2, 3, 4};
  split.subdivision_map.assign(5, {});
  for (Vertex v = 0; v < 5; ++v) split.subdivision_map[v] = {false, v, {-1, -1}};
  CHECK(verify_expansion(split).ok);
  auto sm = expansion_to_minor_model(split);
  CHECK(verify_minor_model(sm).ok);
  CHECK(sm.branch_sets[0] == VertexSet{0, 4});  // the split pair is one branch set

  // overlapping neighbor parts must be rejected
  ExpansionCertificate badsplit = split;
  badsplit.splits = {{0, {1, 2}, {2, 3}}};
  CHECK_FALSE(verify_expansion(badsplit).ok);

  // single subdivision: absorbed into the lower-id endpoint
  ExpansionCertificate sub;
  sub.base = path_graph(2);
  sub.result = path_graph(3);
  sub.branch_vertices = {};
  sub.subdivision_map.resize(3);
  sub.subdivision_map[0] = {false, 0, {-1, -1}};
  sub.subdivision_map[1] = {true, -1, {0, 1}};
  sub.subdivision_map[2] = {false, 1, {-1, -1}};
  CHECK(verify_expansion(sub).ok);
  auto subm = expansion_to_minor_model(sub);
  CHECK(verify_minor_model(subm).ok);
  CHECK(subm.branch_sets[0] == VertexSet{0, 1});
}

TEST_CASE("planarity certified against Wagner-style minor search") {
  // K_5-free and K_33-free by minor search iff Boyer-Myrvold planar
  std::mt19937 rng(5);
  Graph k33(6);
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) k33.add_edge(a, b);
  for (int iter = 0; iter < 60; ++iter) {
    int n = 5 + static_cast<int>(rng() % 4);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 100 < 50) g.add_edge(u, v);
    bool wagner = !find_minor_bruteforce(g, complete_graph(5)).has_value() &&
                  !find_minor_bruteforce(g, k33).has_value();
    CHECK(wagner == is_planar(g));
  }
}

TEST_CASE("model json round trip") {
  MinorModel m;
  m.pattern = complete_graph(3);
  m.host = cycle_graph(4);
  m.branch_sets = {{0}, {1}, {2, 3}};
  auto js = model_to_json(m, /*inline_host=*/true);
  auto back = model_from_json(js);
  CHECK(back.pattern == m.pattern);
  CHECK(back.host == m.host);
  CHECK(back.branch_sets == m.branch_sets);
}
