#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "metricgeo/limits.hpp"
#include "metricgeo/metric_graph.hpp"

namespace metricgeo {

// Level 0 is two vertices u,v joined by an edge of length 1. Level i+1
// trisects every edge of level i (new vertices "<edge>:1", "<edge>:2"; edge
// thirds "<edge>.0/.1/.2") and pastes two copies of the result along the new
// vertices. Copy 0 keeps every id; the copy-1 duplicate of x is "x~<i+1>".
// Inclusion of level i into level i+1 is the identity on copy-0 ids.
struct PastingRecord {
  int level = 0;  // this record built level `level` out of level `level`-1
  std::vector<int> pasted;  // the identified trisection vertices, as indices
  std::unordered_map<std::string, std::string> vertex_twin;  // copy0 id -> copy1 id
  std::unordered_map<std::string, std::string> edge_twin;    // copy0 addr -> copy1 addr
};

struct LaaksoGraph {
  int level = 0;
  std::shared_ptr<const MetricGraph> graph;
  int u = 0, v = 1;
  std::vector<PastingRecord> pastings;  // one per level 1..level
};

LaaksoGraph laakso2(int level, const GeneratorLimits& limits = {});

// Trisection depth encoded in an edge address (pasting marks do not change
// length): a level-j edge has length 3^-j.
int edge_trisection_level(const std::string& address);

// Point at `offset` along the (possibly coarser-level) edge with this
// address, resolved inside the given graph by exact base-3 descent through
// the copy-0 thirds.
GraphPoint locate_on_edge(const LaaksoGraph& g, const std::string& edge_address,
                          const Rational& offset);

// Canonical level-independent key: a vertex id, or "<address>@<offset>" with
// the address lifted through trisection ancestors as far as possible.
std::string point_key(const LaaksoGraph& g, const GraphPoint& p);
GraphPoint point_from_key(const LaaksoGraph& g, const std::string& key);

// Smallest level whose graph contains the keyed point.
int min_level_of_key(const std::string& key);

// The pasted twin of a point across the graph's top-level pasting. Vertices
// in the pasted set are their own twin.
GraphPoint twin_point(const LaaksoGraph& g, const GraphPoint& p);

}  // namespace metricgeo
