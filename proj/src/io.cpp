#include "minors/io.hpp"

#include <sstream>

#include "json.hpp"

namespace minors {

std::string to_graph6(const Graph& g) {
  const int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw std::invalid_argument("to_graph6: graph too large");
  }
  int bit = 5;
  char cur = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (g.has_edge(i, j)) cur |= static_cast<char>(1 << bit);
      if (--bit < 0) {
        out.push_back(static_cast<char>(cur + 63));
        cur = 0;
        bit = 5;
      }
    }
  if (bit != 5) out.push_back(static_cast<char>(cur + 63));
  return out;
}

Graph from_graph6(const std::string& s) {
  size_t pos = 0;
  auto need = [&](size_t k) {
    if (pos + k > s.size()) throw std::invalid_argument("from_graph6: truncated input");
  };
  need(1);
  long n;
  if (static_cast<unsigned char>(s[pos]) == 126) {
    ++pos;
    need(3);
    n = (static_cast<long>(s[pos] - 63) << 12) | (static_cast<long>(s[pos + 1] - 63) << 6) |
        static_cast<long>(s[pos + 2] - 63);
    pos += 3;
  } else {
    n = s[pos] - 63;
    ++pos;
  }
  if (n < 0) throw std::invalid_argument("from_graph6: bad size");
  Graph g(static_cast<int>(n));
  int bit = 5;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (bit == 5) need(1);
      int cur = s[pos] - 63;
      if (cur < 0 || cur > 63) throw std::invalid_argument("from_graph6: bad byte");
      if (cur & (1 << bit)) g.add_edge(i, j);
      if (--bit < 0) {
        bit = 5;
        ++pos;
      }
    }
  return g;
}

std::string to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (Vertex v = 0; v < g.n(); ++v) {
    os << "  " << v;
    if (g.has_labels()) os << " [label=\"(" << g.label(v).ring << "," << g.label(v).pos << ")\"]";
    os << ";\n";
  }
  for (const auto& [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.n();
  auto& e = j["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) e.push_back({u, v});
  if (g.has_labels()) {
    auto& l = j["labels"] = nlohmann::json::array();
    for (const auto& c : g.labels()) l.push_back({c.ring, c.pos});
  }
  return j.dump();
}

Graph graph_from_json(const std::string& js) {
  auto j = nlohmann::json::parse(js);
  Graph g(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  if (j.contains("labels")) {
    std::vector<Coord> labels;
    for (const auto& l : j["labels"]) labels.push_back({l.at(0).get<int>(), l.at(1).get<int>()});
    g.set_labels(std::move(labels));
  }
  return g;
}

std::string td_to_json(const TreeDecomposition& td) {
  nlohmann::json j;
  j["nodes"] = td.nodes();
  auto& e = j["tree_edges"] = nlohmann::json::array();
  for (const auto& [a, b] : td.tree_edges) e.push_back({a, b});
  j["bags"] = td.bags;
  return j.dump();
}

TreeDecomposition td_from_json(const std::string& js) {
  auto j = nlohmann::json::parse(js);
  TreeDecomposition td;
  for (const auto& e : j.at("tree_edges")) td.tree_edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  for (const auto& b : j.at("bags")) td.bags.push_back(b.get<VertexSet>());
  if (j.contains("nodes") && j["nodes"].get<int>() != td.nodes())
    throw std::invalid_argument("td_from_json: node count mismatch");
  return td;
}

}  // namespace minors
