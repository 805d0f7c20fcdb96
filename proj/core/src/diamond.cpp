#include "metricgeo/diamond.hpp"

#include <algorithm>
#include <set>

#include "metricgeo/errors.hpp"

namespace metricgeo {

namespace {

struct EdgeRecord {
  std::string address;
  int u, v;
};

}  // namespace

DiamondGraph diamond(int level, const GeneratorLimits& limits) {
  if (level < 0) throw InvalidInput("diamond level must be >= 0");
  // V(D_n) = 2 + 2(4^n - 1)/3
  mpz_class vertices = 2 + 2 * (pow2(2 * level).get_num() - 1) / 3;
  if (vertices > limits.max_vertices)
    throw ResourceLimit("diamond level " + std::to_string(level) + " needs " +
                        vertices.get_str() + " vertices, cap is " +
                        std::to_string(limits.max_vertices));

  DiamondGraph d;
  d.level = level;
  auto graph = std::make_shared<MetricGraph>();
  d.top = graph->add_vertex("top");
  d.bottom = graph->add_vertex("bottom");
  d.vertex_origin = {"", ""};

  std::vector<EdgeRecord> current{{"e", d.top, d.bottom}};
  d.edge_endpoints.emplace("e", std::make_pair(d.top, d.bottom));

  for (int k = 1; k <= level; ++k) {
    std::vector<EdgeRecord> next;
    next.reserve(current.size() * 4);
    for (const EdgeRecord& e : current) {
      int a = graph->add_vertex(e.address + ":a");
      int b = graph->add_vertex(e.address + ":b");
      d.vertex_origin.push_back(e.address);
      d.vertex_origin.push_back(e.address);
      d.quad_by_edge.emplace(e.address, static_cast<int>(d.quadrilaterals.size()));
      d.quadrilaterals.push_back(Quadrilateral{k, e.address, e.u, a, e.v, b});
      next.push_back({e.address + ".0", e.u, a});
      next.push_back({e.address + ".1", a, e.v});
      next.push_back({e.address + ".2", e.u, b});
      next.push_back({e.address + ".3", b, e.v});
    }
    for (const EdgeRecord& e : next) d.edge_endpoints.emplace(e.address, std::make_pair(e.u, e.v));
    current = std::move(next);
  }

  Rational len = pow2(-level);
  for (const EdgeRecord& e : current) graph->add_edge(e.u, e.v, len, e.address);
  d.graph = graph;
  return d;
}

std::vector<VertexPair> active_pairs(const DiamondGraph& d, bool include_root_pair) {
  std::set<VertexPair> pairs;
  auto put = [&](int x, int y) { pairs.emplace(std::min(x, y), std::max(x, y)); };
  if (include_root_pair) put(d.top, d.bottom);
  for (const Quadrilateral& q : d.quadrilaterals) {
    put(q.u, q.a);
    put(q.u, q.v);
    put(q.u, q.b);
    put(q.a, q.v);
    put(q.a, q.b);
    put(q.v, q.b);
  }
  return {pairs.begin(), pairs.end()};
}

bool subdiamond_contains_address(const std::string& address, const std::string& inner) {
  if (inner.size() < address.size()) return false;
  if (inner.compare(0, address.size(), address) != 0) return false;
  return inner.size() == address.size() || inner[address.size()] == '.';
}

namespace {

int edge_level(const std::string& address) {
  return static_cast<int>(std::count(address.begin(), address.end(), '.'));
}

// x lies in D(address): either an endpoint of the edge or created inside it.
bool contains_vertex(const DiamondGraph& d, const std::string& address, int x) {
  auto it = d.edge_endpoints.find(address);
  if (it == d.edge_endpoints.end()) return false;
  if (it->second.first == x || it->second.second == x) return true;
  const std::string& origin = d.vertex_origin[static_cast<size_t>(x)];
  if (origin.empty()) return false;
  return subdiamond_contains_address(address, origin);
}

}  // namespace

SubdiamondQuery smallest_subdiamond(const DiamondGraph& d, const GraphMetric& metric, int w,
                                    int z) {
  if (w == z) throw InvalidInput("smallest_subdiamond requires distinct vertices");
  std::string addr = "e";
  while (true) {
    auto quad_it = d.quad_by_edge.find(addr);
    if (quad_it == d.quad_by_edge.end()) break;  // unsubdivided edge, stop here
    std::string descend;
    for (int c = 0; c < 4; ++c) {
      std::string child = addr + "." + std::to_string(c);
      if (contains_vertex(d, child, w) && contains_vertex(d, child, z)) {
        descend = child;
        break;
      }
    }
    if (descend.empty() || d.quad_by_edge.find(descend) == d.quad_by_edge.end()) break;
    addr = descend;
  }

  SubdiamondQuery result;
  auto ends = d.edge_endpoints.at(addr);
  result.subdiamond = SubdiamondId{addr, edge_level(addr), ends.first, ends.second};

  auto quad_it = d.quad_by_edge.find(addr);
  if (quad_it == d.quad_by_edge.end()) {
    // Only possible for D_0, where the pair is the root edge pair.
    result.side = SubdiamondSide::SameSide;
    return result;
  }
  result.quad_index = quad_it->second;
  const Quadrilateral& q = d.quadrilaterals[static_cast<size_t>(quad_it->second)];

  auto on_a_side = [&](int x) {
    return contains_vertex(d, addr + ".0", x) || contains_vertex(d, addr + ".1", x);
  };
  auto on_b_side = [&](int x) {
    return contains_vertex(d, addr + ".2", x) || contains_vertex(d, addr + ".3", x);
  };
  if ((on_a_side(w) && on_a_side(z)) || (on_b_side(w) && on_b_side(z))) {
    result.side = SubdiamondSide::SameSide;
    return result;
  }

  Rational dwu = metric.vertex_distance(w, q.u);
  Rational dwv = metric.vertex_distance(w, q.v);
  Rational dzu = metric.vertex_distance(z, q.u);
  Rational dzv = metric.vertex_distance(z, q.v);
  bool opposite = (dwu < dwv && dzu > dzv) || (dwu > dwv && dzu < dzv);
  result.side = opposite ? SubdiamondSide::DifferentSidesB : SubdiamondSide::DifferentSidesA;
  return result;
}

int tree_index_of_edge_address(const std::string& address) {
  if (address.empty() || address[0] != 'e')
    throw InvalidInput("malformed diamond edge address: " + address);
  int j = 1;
  size_t i = 1;
  while (i < address.size()) {
    if (address[i] != '.' || i + 1 >= address.size())
      throw InvalidInput("malformed diamond edge address: " + address);
    char c = address[i + 1];
    switch (c) {
      case '0':
      case '3': j = 2 * j; break;
      case '1':
      case '2': j = 2 * j + 1; break;
      default: throw InvalidInput("malformed diamond edge address: " + address);
    }
    i += 2;
  }
  return j;
}

}  // namespace metricgeo
