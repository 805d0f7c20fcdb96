#include "metricgeo/geodesics.hpp"

#include <algorithm>

#include "metricgeo/errors.hpp"

namespace metricgeo {

std::vector<Walk> enumerate_geodesics(const MetricGraph& g, int u, int v, int limit) {
  if (u == v) throw InvalidInput("enumerate_geodesics requires distinct endpoints");
  std::vector<Walk> out;
  if (limit <= 0) return out;

  GraphMetric metric(std::shared_ptr<const MetricGraph>(&g, [](const MetricGraph*) {}));
  const std::vector<Rational>& du = metric.distances_from(u);
  const std::vector<Rational>& dv = metric.distances_from(v);
  Rational total = du[static_cast<size_t>(v)];

  // Sorted adjacency so the DFS emits walks in lexicographic address order.
  std::vector<std::vector<std::pair<int, int>>> adj = g.adjacency();
  for (auto& list : adj)
    std::sort(list.begin(), list.end(), [&](const auto& a, const auto& b) {
      return g.edge(a.first).address < g.edge(b.first).address;
    });

  Walk current;
  current.start = u;
  current.vertex_seq.push_back(u);
  current.length = total;

  auto dfs = [&](auto&& self, int x) -> void {
    if (static_cast<int>(out.size()) >= limit) return;
    if (x == v) {
      out.push_back(current);
      return;
    }
    for (auto [e, y] : adj[static_cast<size_t>(x)]) {
      // Edge x->y lies on a shortest u-v walk iff distances tile exactly.
      if (du[static_cast<size_t>(x)] + g.edge(e).length + dv[static_cast<size_t>(y)] != total)
        continue;
      current.edge_seq.push_back(e);
      current.vertex_seq.push_back(y);
      self(self, y);
      current.edge_seq.pop_back();
      current.vertex_seq.pop_back();
      if (static_cast<int>(out.size()) >= limit) return;
    }
  };
  dfs(dfs, u);
  return out;
}

PointSequence walk_points(const Walk& w) {
  PointSequence seq;
  for (int x : w.vertex_seq) seq.points.push_back(GraphPoint::at_vertex(x));
  return seq;
}

std::vector<Rational> segment_lengths(const GraphMetric& m, const PointSequence& seq) {
  if (seq.points.size() < 2) throw InvalidInput("point sequence needs at least two points");
  std::vector<Rational> lengths;
  lengths.reserve(seq.points.size() - 1);
  for (size_t i = 1; i < seq.points.size(); ++i) {
    if (seq.points[i] == seq.points[i - 1])
      throw InvalidInput("consecutive points of a sequence must be distinct");
    lengths.push_back(m.distance(seq.points[i - 1], seq.points[i]));
  }
  return lengths;
}

CGeodesicCheck is_c_geodesic(const GraphMetric& m, const PointSequence& seq, const Rational& C) {
  if (C < 1) throw InvalidInput("C must be >= 1");
  CGeodesicCheck check;
  std::vector<Rational> lengths = segment_lengths(m, seq);
  check.total = 0;
  for (const Rational& l : lengths) check.total += l;
  check.endpoint_distance = m.distance(seq.points.front(), seq.points.back());
  if (check.endpoint_distance == 0) throw InvalidInput("C-geodesic endpoints must be distinct");
  check.ratio = check.total / check.endpoint_distance;
  check.ok = check.total <= C * check.endpoint_distance;
  return check;
}

}  // namespace metricgeo
