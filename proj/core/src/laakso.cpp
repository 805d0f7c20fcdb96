#include "metricgeo/laakso.hpp"

#include <algorithm>
#include <unordered_set>

#include "metricgeo/errors.hpp"

namespace metricgeo {

namespace {

struct BuildEdge {
  std::string addr;
  std::string u, v;
};

}  // namespace

LaaksoGraph laakso2(int level, const GeneratorLimits& limits) {
  if (level < 0) throw InvalidInput("laakso2 level must be >= 0");
  {
    // V(X_{i+1}) = 2 V(X_i) + 2 E(X_i), E(X_{i+1}) = 6 E(X_i)
    mpz_class vcount = 2, ecount = 1;
    for (int i = 0; i < level; ++i) {
      vcount = 2 * vcount + 2 * ecount;
      ecount = 6 * ecount;
    }
    if (vcount > limits.max_vertices)
      throw ResourceLimit("laakso2 level " + std::to_string(level) + " needs " +
                          vcount.get_str() + " vertices, cap is " +
                          std::to_string(limits.max_vertices));
  }

  std::vector<std::string> verts{"u", "v"};
  std::vector<BuildEdge> edges{{"e", "u", "v"}};
  struct RawRecord {
    int level;
    std::vector<std::string> pasted;
    std::unordered_map<std::string, std::string> vertex_twin;
    std::unordered_map<std::string, std::string> edge_twin;
  };
  std::vector<RawRecord> raw;

  for (int i = 1; i <= level; ++i) {
    size_t old_count = verts.size();
    RawRecord rec;
    rec.level = i;

    std::vector<BuildEdge> thirds;
    thirds.reserve(edges.size() * 3);
    for (const BuildEdge& e : edges) {
      std::string m1 = e.addr + ":1";
      std::string m2 = e.addr + ":2";
      verts.push_back(m1);
      verts.push_back(m2);
      rec.pasted.push_back(m1);
      rec.pasted.push_back(m2);
      thirds.push_back({e.addr + ".0", e.u, m1});
      thirds.push_back({e.addr + ".1", m1, m2});
      thirds.push_back({e.addr + ".2", m2, e.v});
    }

    std::unordered_set<std::string> pasted(rec.pasted.begin(), rec.pasted.end());
    std::string suffix = "~" + std::to_string(i);
    for (size_t t = 0; t < old_count; ++t) {
      std::string twin = verts[t] + suffix;
      rec.vertex_twin.emplace(verts[t], twin);
      verts.push_back(twin);
    }
    std::vector<BuildEdge> all = thirds;
    for (const BuildEdge& e : thirds) {
      auto map_end = [&](const std::string& x) { return pasted.count(x) ? x : x + suffix; };
      rec.edge_twin.emplace(e.addr, e.addr + suffix);
      all.push_back({e.addr + suffix, map_end(e.u), map_end(e.v)});
    }
    edges = std::move(all);
    raw.push_back(std::move(rec));
  }

  LaaksoGraph g;
  g.level = level;
  auto graph = std::make_shared<MetricGraph>();
  for (const std::string& id : verts) graph->add_vertex(id);
  Rational len = pow3(-level);
  for (const BuildEdge& e : edges)
    graph->add_edge(graph->require_vertex(e.u), graph->require_vertex(e.v), len, e.addr);
  g.u = graph->require_vertex("u");
  g.v = graph->require_vertex("v");
  for (RawRecord& rec : raw) {
    PastingRecord out;
    out.level = rec.level;
    for (const std::string& id : rec.pasted) out.pasted.push_back(graph->require_vertex(id));
    out.vertex_twin = std::move(rec.vertex_twin);
    out.edge_twin = std::move(rec.edge_twin);
    g.pastings.push_back(std::move(out));
  }
  g.graph = graph;
  return g;
}

int edge_trisection_level(const std::string& address) {
  return static_cast<int>(std::count(address.begin(), address.end(), '.'));
}

GraphPoint locate_on_edge(const LaaksoGraph& g, const std::string& edge_address,
                          const Rational& offset) {
  std::string addr = edge_address;
  Rational off = offset;
  Rational len = pow3(-edge_trisection_level(addr));
  if (off < 0 || off > len)
    throw InvalidInput("offset " + to_string(off) + " out of range on edge " + addr);
  while (g.graph->edge_index(addr) < 0) {
    // The edge is not present at this level; it must have been trisected.
    Rational third = len / 3;
    if (off == third) return GraphPoint::at_vertex(g.graph->require_vertex(addr + ":1"));
    if (off == 2 * third) return GraphPoint::at_vertex(g.graph->require_vertex(addr + ":2"));
    int digit = off < third ? 0 : (off < 2 * third ? 1 : 2);
    off -= digit * third;
    addr += "." + std::to_string(digit);
    len = third;
    if (edge_trisection_level(addr) > g.level + 1)
      throw InvalidInput("edge address " + edge_address + " not resolvable at level " +
                         std::to_string(g.level));
  }
  return GraphPoint::on_edge(*g.graph, g.graph->edge_index(addr), off);
}

namespace {

// Strip trailing ".<digit>" components, accumulating the offset, to get the
// coarsest edge that contains the point. Pasting marks block lifting.
void lift(std::string& addr, Rational& off) {
  while (true) {
    size_t dot = addr.rfind('.');
    if (dot == std::string::npos || dot + 2 != addr.size()) return;
    char c = addr.back();
    if (c < '0' || c > '2') return;
    Rational len = pow3(-edge_trisection_level(addr));
    off += (c - '0') * len;
    addr.erase(dot);
  }
}

}  // namespace

std::string point_key(const LaaksoGraph& g, const GraphPoint& p) {
  if (p.is_vertex()) return g.graph->vertex_id(p.vertex);
  std::string addr = g.graph->edge(p.edge).address;
  Rational off = p.offset;
  lift(addr, off);
  return addr + "@" + to_string(off);
}

GraphPoint point_from_key(const LaaksoGraph& g, const std::string& key) {
  size_t at = key.find('@');
  if (at == std::string::npos) return GraphPoint::at_vertex(g.graph->require_vertex(key));
  std::string addr = key.substr(0, at);
  std::string off = key.substr(at + 1);
  size_t slash = off.find('/');
  Rational r = slash == std::string::npos
                   ? rational_from_strings(off, "1")
                   : rational_from_strings(off.substr(0, slash), off.substr(slash + 1));
  return locate_on_edge(g, addr, r);
}

int min_level_of_key(const std::string& key) {
  size_t at = key.find('@');
  if (at != std::string::npos) return edge_trisection_level(key.substr(0, at));
  std::string id = key;
  int level = 0;
  while (true) {
    if (id == "u" || id == "v") return level;
    size_t tilde = id.rfind('~');
    size_t colon = id.rfind(':');
    if (tilde != std::string::npos && (colon == std::string::npos || tilde > colon)) {
      bool digits = tilde + 1 < id.size();
      for (size_t i = tilde + 1; i < id.size(); ++i)
        digits = digits && id[i] >= '0' && id[i] <= '9';
      if (!digits) throw InvalidInput("malformed point key: " + key);
      level = std::max(level, std::stoi(id.substr(tilde + 1)));
      id.erase(tilde);
      continue;
    }
    if (colon != std::string::npos) {
      // "<edge>:1" appears when <edge> is trisected.
      return std::max(level, edge_trisection_level(id.substr(0, colon)) + 1);
    }
    throw InvalidInput("malformed point key: " + key);
  }
}

GraphPoint twin_point(const LaaksoGraph& g, const GraphPoint& p) {
  if (g.pastings.empty()) throw InvalidInput("level-0 graph has no pasting");
  const PastingRecord& rec = g.pastings.back();
  std::string mark = "~" + std::to_string(rec.level);
  if (p.is_vertex()) {
    const std::string& id = g.graph->vertex_id(p.vertex);
    auto it = rec.vertex_twin.find(id);
    if (it != rec.vertex_twin.end())
      return GraphPoint::at_vertex(g.graph->require_vertex(it->second));
    // Copy-1 vertex: its twin is the copy-0 original. Pasted vertices are
    // their own twin.
    if (id.size() > mark.size() && id.compare(id.size() - mark.size(), mark.size(), mark) == 0)
      return GraphPoint::at_vertex(g.graph->require_vertex(id.substr(0, id.size() - mark.size())));
    return p;
  }
  const std::string& addr = g.graph->edge(p.edge).address;
  auto it = rec.edge_twin.find(addr);
  if (it != rec.edge_twin.end())
    return GraphPoint::on_edge(*g.graph, g.graph->edge_index(it->second), p.offset);
  if (addr.size() > mark.size() && addr.compare(addr.size() - mark.size(), mark.size(), mark) == 0)
    return GraphPoint::on_edge(*g.graph,
                               g.graph->edge_index(addr.substr(0, addr.size() - mark.size())),
                               p.offset);
  throw InvalidInput("no twin for point on edge " + addr);
}

}  // namespace metricgeo
