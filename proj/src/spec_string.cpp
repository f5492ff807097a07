#include "minors/spec_string.hpp"

#include <map>
#include <sstream>

namespace minors {

namespace {

struct ParsedArgs {
  std::map<std::string, std::string> kv;
  int geti(const std::string& key) const {
    auto it = kv.find(key);
    if (it == kv.end()) throw std::invalid_argument("spec string: missing field " + key);
    size_t used = 0;
    int v = std::stoi(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("spec string: bad integer for " + key);
    return v;
  }
  std::set<int> getset(const std::string& key) const {
    auto it = kv.find(key);
    if (it == kv.end()) throw std::invalid_argument("spec string: missing field " + key);
    const std::string& s = it->second;
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
      throw std::invalid_argument("spec string: set field must use braces");
    std::set<int> out;
    std::string body = s.substr(1, s.size() - 2);
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
      if (tok.empty()) continue;
      out.insert(std::stoi(tok));
    }
    return out;
  }
};

// fields separated by commas; set values are "{a;b;c}"
ParsedArgs parse_args(const std::string& body) {
  ParsedArgs out;
  size_t i = 0;
  while (i < body.size()) {
    size_t eq = body.find('=', i);
    if (eq == std::string::npos) throw std::invalid_argument("spec string: expected key=value");
    std::string key = body.substr(i, eq - i);
    size_t j = eq + 1;
    std::string val;
    if (j < body.size() && body[j] == '{') {
      size_t close = body.find('}', j);
      if (close == std::string::npos) throw std::invalid_argument("spec string: unbalanced braces");
      val = body.substr(j, close - j + 1);
      j = close + 1;
      if (j < body.size() && body[j] == ',') ++j;
    } else {
      size_t comma = body.find(',', j);
      if (comma == std::string::npos) comma = body.size();
      val = body.substr(j, comma - j);
      j = comma + (comma < body.size() ? 1 : 0);
    }
    out.kv[key] = val;
    i = j;
  }
  return out;
}

}  // namespace

FamilySpec parse_spec_string(const std::string& s) {
  size_t colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("spec string: missing family prefix");
  std::string kind = s.substr(0, colon);
  ParsedArgs args = parse_args(s.substr(colon + 1));
  if (kind == "cyl") return CylSpec{args.geti("m"), args.geti("n")};
  if (kind == "msg") {
    MixedSurfaceGridSpec m;
    m.k = args.geti("k");
    m.handle_positions = args.getset("h");
    m.crosscap_positions = args.getset("c");
    return m;
  }
  if (kind == "dyck") return DyckGridSpec{args.geti("h"), args.geti("c"), args.geti("k")};
  if (kind == "dyckwall") return DyckWallSpec{args.geti("h"), args.geti("c"), args.geti("t")};
  if (kind == "wall") return WallSpec{args.geti("k")};
  throw std::invalid_argument("spec string: unknown family " + kind);
}

std::string format_spec_string(const FamilySpec& spec) {
  std::ostringstream os;
  if (auto* c = std::get_if<CylSpec>(&spec)) {
    os << "cyl:m=" << c->m << ",n=" << c->n;
  } else if (auto* m = std::get_if<MixedSurfaceGridSpec>(&spec)) {
    os << "msg:k=" << m->k << ",h={";
    bool first = true;
    for (int p : m->handle_positions) {
      if (!first) os << ';';
      os << p;
      first = false;
    }
    os << "},c={";
    first = true;
    for (int p : m->crosscap_positions) {
      if (!first) os << ';';
      os << p;
      first = false;
    }
    os << "}";
  } else if (auto* d = std::get_if<DyckGridSpec>(&spec)) {
    os << "dyck:h=" << d->h << ",c=" << d->c << ",k=" << d->k;
  } else if (auto* w = std::get_if<DyckWallSpec>(&spec)) {
    os << "dyckwall:h=" << w->h << ",c=" << w->c << ",t=" << w->t;
  } else if (auto* w = std::get_if<WallSpec>(&spec)) {
    os << "wall:k=" << w->k;
  }
  return os.str();
}

Graph build_from_spec(const FamilySpec& spec) {
  if (auto* c = std::get_if<CylSpec>(&spec)) return cylindrical_grid(c->m, c->n);
  if (auto* m = std::get_if<MixedSurfaceGridSpec>(&spec)) return mixed_surface_grid(*m);
  if (auto* d = std::get_if<DyckGridSpec>(&spec)) return dyck_grid(*d);
  if (auto* w = std::get_if<DyckWallSpec>(&spec)) return dyck_wall(*w).graph;
  if (auto* w = std::get_if<WallSpec>(&spec)) return elementary_wall(w->k).graph;
  throw std::logic_error("unreachable");
}

}  // namespace minors
