#include "metricgeo/metric_graph.hpp"

#include <algorithm>
#include <queue>

#include "metricgeo/errors.hpp"

namespace metricgeo {

int MetricGraph::add_vertex(const std::string& id) {
  auto [it, inserted] = index_.emplace(id, vertex_count());
  if (!inserted) throw InvalidInput("duplicate vertex id: " + id);
  ids_.push_back(id);
  adjacency_.emplace_back();
  return it->second;
}

int MetricGraph::add_edge(int u, int v, Rational length, std::string address) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw InvalidInput("edge endpoint out of range");
  if (u == v) throw InvalidInput("self-loop at vertex " + ids_[static_cast<size_t>(u)]);
  if (length <= 0) throw InvalidInput("edge length must be positive");
  int e = edge_count();
  if (!address.empty()) {
    auto [it, inserted] = edge_index_.emplace(address, e);
    if (!inserted) throw InvalidInput("duplicate edge address: " + address);
  }
  edges_.push_back(Edge{u, v, std::move(length), std::move(address)});
  adjacency_[static_cast<size_t>(u)].emplace_back(e, v);
  adjacency_[static_cast<size_t>(v)].emplace_back(e, u);
  return e;
}

int MetricGraph::vertex_index(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? -1 : it->second;
}

int MetricGraph::require_vertex(const std::string& id) const {
  int i = vertex_index(id);
  if (i < 0) throw InvalidInput("unknown vertex id: " + id);
  return i;
}

int MetricGraph::edge_index(const std::string& address) const {
  auto it = edge_index_.find(address);
  return it == edge_index_.end() ? -1 : it->second;
}

const std::vector<std::vector<std::pair<int, int>>>& MetricGraph::adjacency() const {
  return adjacency_;
}

void MetricGraph::require_connected() const {
  if (vertex_count() == 0) return;
  std::vector<char> seen(static_cast<size_t>(vertex_count()), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (auto [e, y] : adjacency()[static_cast<size_t>(x)]) {
      (void)e;
      if (!seen[static_cast<size_t>(y)]) {
        seen[static_cast<size_t>(y)] = 1;
        stack.push_back(y);
      }
    }
  }
  for (int i = 0; i < vertex_count(); ++i)
    if (!seen[static_cast<size_t>(i)])
      throw InvalidInput("graph is disconnected: vertex " + ids_[static_cast<size_t>(i)] +
                         " is unreachable");
}

bool MetricGraph::uniform_edge_length(Rational* length_out) const {
  if (edges_.empty()) return false;
  const Rational& l = edges_.front().length;
  for (const Edge& e : edges_)
    if (e.length != l) return false;
  if (length_out) *length_out = l;
  return true;
}

GraphPoint GraphPoint::at_vertex(int v) {
  GraphPoint p;
  p.vertex = v;
  return p;
}

GraphPoint GraphPoint::on_edge(const MetricGraph& g, int e, const Rational& offset) {
  const Edge& ed = g.edge(e);
  if (offset < 0 || offset > ed.length)
    throw InvalidInput("point offset out of range on edge " + ed.address + ": " +
                       to_string(offset));
  if (offset == 0) return at_vertex(ed.u);
  if (offset == ed.length) return at_vertex(ed.v);
  GraphPoint p;
  p.edge = e;
  p.offset = offset;
  return p;
}

bool operator==(const GraphPoint& a, const GraphPoint& b) {
  if (a.is_vertex() != b.is_vertex()) return false;
  if (a.is_vertex()) return a.vertex == b.vertex;
  return a.edge == b.edge && a.offset == b.offset;
}

std::string point_label(const MetricGraph& g, const GraphPoint& p) {
  if (p.is_vertex()) return g.vertex_id(p.vertex);
  return g.edge(p.edge).address + "@" + to_string(p.offset);
}

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> ids, std::vector<Rational> table)
    : ids_(std::move(ids)), table_(std::move(table)) {
  if (table_.size() != ids_.size() * ids_.size())
    throw InvalidInput("distance table size does not match point count");
  for (int i = 0; i < size(); ++i) index_.emplace(ids_[static_cast<size_t>(i)], i);
}

int FiniteMetricSpace::index(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? -1 : it->second;
}

void FiniteMetricSpace::set_distance(int i, int j, const Rational& d) {
  table_[static_cast<size_t>(i) * ids_.size() + static_cast<size_t>(j)] = d;
  table_[static_cast<size_t>(j) * ids_.size() + static_cast<size_t>(i)] = d;
}

void FiniteMetricSpace::validate() const {
  int n = size();
  for (int i = 0; i < n; ++i) {
    if (distance(i, i) != 0) throw InvalidInput("d(x,x) != 0 at " + id(i));
    for (int j = i + 1; j < n; ++j) {
      if (distance(i, j) != distance(j, i))
        throw InvalidInput("asymmetric distance at (" + id(i) + "," + id(j) + ")");
      if (distance(i, j) <= 0)
        throw InvalidInput("non-positive distance at (" + id(i) + "," + id(j) + ")");
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (distance(i, k) > distance(i, j) + distance(j, k))
          throw InvalidInput("triangle inequality fails at (" + id(i) + "," + id(j) + "," +
                             id(k) + ")");
      }
    }
}

namespace {

// Exact single-source distances; hop-count BFS when all edges share one
// length, Dijkstra otherwise.
std::vector<Rational> single_source_distances(const MetricGraph& g, int source) {
  int n = g.vertex_count();
  std::vector<Rational> dist(static_cast<size_t>(n), Rational(-1));
  Rational uniform;
  if (g.uniform_edge_length(&uniform)) {
    std::vector<long> hops(static_cast<size_t>(n), -1);
    std::queue<int> q;
    hops[static_cast<size_t>(source)] = 0;
    q.push(source);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (auto [e, y] : g.adjacency()[static_cast<size_t>(x)]) {
        (void)e;
        if (hops[static_cast<size_t>(y)] < 0) {
          hops[static_cast<size_t>(y)] = hops[static_cast<size_t>(x)] + 1;
          q.push(y);
        }
      }
    }
    for (int i = 0; i < n; ++i)
      if (hops[static_cast<size_t>(i)] >= 0)
        dist[static_cast<size_t>(i)] = uniform * hops[static_cast<size_t>(i)];
    return dist;
  }

  using Item = std::pair<Rational, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  std::vector<char> done(static_cast<size_t>(n), 0);
  dist[static_cast<size_t>(source)] = 0;
  heap.emplace(Rational(0), source);
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (done[static_cast<size_t>(x)]) continue;
    done[static_cast<size_t>(x)] = 1;
    for (auto [e, y] : g.adjacency()[static_cast<size_t>(x)]) {
      Rational nd = d + g.edge(e).length;
      Rational& cur = dist[static_cast<size_t>(y)];
      if (cur < 0 || nd < cur) {
        cur = nd;
        heap.emplace(nd, y);
      }
    }
  }
  return dist;
}

}  // namespace

FiniteMetricSpace shortest_path_metric(const MetricGraph& g) {
  g.require_connected();
  int n = g.vertex_count();
  std::vector<std::string> ids(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) ids[static_cast<size_t>(i)] = g.vertex_id(i);
  std::vector<Rational> table(static_cast<size_t>(n) * static_cast<size_t>(n), Rational(0));
  for (int s = 0; s < n; ++s) {
    std::vector<Rational> d = single_source_distances(g, s);
    for (int t = 0; t < n; ++t)
      table[static_cast<size_t>(s) * static_cast<size_t>(n) + static_cast<size_t>(t)] =
          d[static_cast<size_t>(t)];
  }
  return FiniteMetricSpace(std::move(ids), std::move(table));
}

GraphMetric::GraphMetric(std::shared_ptr<const MetricGraph> g) : graph_(std::move(g)) {
  if (!graph_) throw InvalidInput("GraphMetric requires a graph");
  graph_->require_connected();
}

const std::vector<Rational>& GraphMetric::from(int source) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(source);
  if (it == cache_.end())
    it = cache_.emplace(source, single_source_distances(*graph_, source)).first;
  return it->second;
}

Rational GraphMetric::vertex_distance(int a, int b) const {
  if (a == b) return Rational(0);
  return from(a)[static_cast<size_t>(b)];
}

Rational GraphMetric::distance(const GraphPoint& p, const GraphPoint& q) const {
  if (p == q) return Rational(0);
  if (p.is_vertex() && q.is_vertex()) return vertex_distance(p.vertex, q.vertex);

  // Exits of an interior point: both endpoints with the offset costs. A path
  // between two interior points of one edge may also stay on the edge.
  auto exits = [&](const GraphPoint& x) {
    std::vector<std::pair<int, Rational>> out;
    if (x.is_vertex()) {
      out.emplace_back(x.vertex, Rational(0));
    } else {
      const Edge& e = graph_->edge(x.edge);
      out.emplace_back(e.u, x.offset);
      out.emplace_back(e.v, e.length - x.offset);
    }
    return out;
  };

  Rational best(-1);
  if (!p.is_vertex() && !q.is_vertex() && p.edge == q.edge) best = abs(p.offset - q.offset);
  for (const auto& [a, ca] : exits(p))
    for (const auto& [b, cb] : exits(q)) {
      Rational d = ca + vertex_distance(a, b) + cb;
      if (best < 0 || d < best) best = d;
    }
  return best;
}

std::vector<int> GraphMetric::shortest_walk(int a, int b) const {
  std::vector<int> walk;
  if (a == b) return walk;
  const std::vector<Rational>& to_b = from(b);
  if (to_b[static_cast<size_t>(a)] < 0) throw InvalidInput("no path between requested vertices");
  int x = a;
  while (x != b) {
    int best_edge = -1;
    int best_next = -1;
    for (auto [e, y] : graph_->adjacency()[static_cast<size_t>(x)]) {
      if (to_b[static_cast<size_t>(y)] < 0) continue;
      if (to_b[static_cast<size_t>(y)] + graph_->edge(e).length == to_b[static_cast<size_t>(x)]) {
        if (best_edge < 0 || graph_->edge(e).address < graph_->edge(best_edge).address) {
          best_edge = e;
          best_next = y;
        }
      }
    }
    if (best_edge < 0) throw Error("internal: shortest-walk descent stuck");
    walk.push_back(best_edge);
    x = best_next;
  }
  return walk;
}

Rational graph_point_distance(const MetricGraph& g, const GraphPoint& p, const GraphPoint& q) {
  GraphMetric metric(std::shared_ptr<const MetricGraph>(&g, [](const MetricGraph*) {}));
  return metric.distance(p, q);
}

}  // namespace metricgeo
