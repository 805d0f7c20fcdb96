#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "metricgeo/norms.hpp"
#include "metricgeo/rational.hpp"

namespace metricgeo {

// Weighted multigraph with exact rational edge lengths. Parallel edges are
// allowed (pasting in the Laakso construction produces them); self-loops are
// not. Vertices and edges carry stable string addresses so that the natural
// inclusion of one generated level into the next is the identity on ids.
struct Edge {
  int u = -1;
  int v = -1;
  Rational length;
  std::string address;
};

class MetricGraph {
 public:
  int add_vertex(const std::string& id);
  int add_edge(int u, int v, Rational length, std::string address);

  int vertex_count() const { return static_cast<int>(ids_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::string& vertex_id(int i) const { return ids_[static_cast<size_t>(i)]; }
  // -1 when absent.
  int vertex_index(const std::string& id) const;
  int require_vertex(const std::string& id) const;
  const Edge& edge(int e) const { return edges_[static_cast<size_t>(e)]; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_index(const std::string& address) const;

  // (edge index, other endpoint) per vertex.
  const std::vector<std::vector<std::pair<int, int>>>& adjacency() const;

  void require_connected() const;  // throws InvalidInput naming a stranded vertex
  bool uniform_edge_length(Rational* length_out) const;

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> index_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, int> edge_index_;
  mutable std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

// A point of the graph thickening: either a vertex or an interior point of an
// edge at exact offset from the edge's u endpoint. Offsets 0 and full length
// canonicalize to the endpoint vertex, so pasted points compare equal.
struct GraphPoint {
  int vertex = -1;
  int edge = -1;
  Rational offset;

  bool is_vertex() const { return vertex >= 0; }
  static GraphPoint at_vertex(int v);
  static GraphPoint on_edge(const MetricGraph& g, int e, const Rational& offset);
};

bool operator==(const GraphPoint& a, const GraphPoint& b);
inline bool operator!=(const GraphPoint& a, const GraphPoint& b) { return !(a == b); }

// Human-readable point label ("id" or "address@offset") for error messages and
// reports; the generator headers provide level-independent canonical keys.
std::string point_label(const MetricGraph& g, const GraphPoint& p);

// Exact symmetric distance table over named points.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace() = default;
  FiniteMetricSpace(std::vector<std::string> ids, std::vector<Rational> table);

  int size() const { return static_cast<int>(ids_.size()); }
  const std::string& id(int i) const { return ids_[static_cast<size_t>(i)]; }
  int index(const std::string& id) const;
  const Rational& distance(int i, int j) const {
    return table_[static_cast<size_t>(i) * ids_.size() + static_cast<size_t>(j)];
  }
  void set_distance(int i, int j, const Rational& d);

  // Exact metric axioms, including every triangle; throws InvalidInput with
  // the offending triple.
  void validate() const;

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> index_;
  std::vector<Rational> table_;
};

// Exact all-pairs shortest-path distances over the vertices.
FiniteMetricSpace shortest_path_metric(const MetricGraph& g);

// Distance oracle over a shared graph with a lazily filled single-source
// cache. All results are exact; the cache is guarded so concurrent readers
// are safe.
class GraphMetric {
 public:
  explicit GraphMetric(std::shared_ptr<const MetricGraph> g);

  const MetricGraph& graph() const { return *graph_; }
  std::shared_ptr<const MetricGraph> shared_graph() const { return graph_; }

  Rational vertex_distance(int a, int b) const;
  Rational distance(const GraphPoint& p, const GraphPoint& q) const;

  // Exact distances from one source to every vertex.
  const std::vector<Rational>& distances_from(int source) const { return from(source); }

  // Lexicographically least shortest walk a -> b, as edge indices; stable
  // across runs because ties break on edge addresses.
  std::vector<int> shortest_walk(int a, int b) const;

 private:
  const std::vector<Rational>& from(int source) const;

  std::shared_ptr<const MetricGraph> graph_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<int, std::vector<Rational>> cache_;
};

// Exact geodesic distance in the graph thickening.
Rational graph_point_distance(const MetricGraph& g, const GraphPoint& p, const GraphPoint& q);

}  // namespace metricgeo
