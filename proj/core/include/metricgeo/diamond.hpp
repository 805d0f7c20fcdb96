#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "metricgeo/limits.hpp"
#include "metricgeo/metric_graph.hpp"

namespace metricgeo {

// Level 0 is two vertices joined by an edge of length 1; each later level
// replaces every edge of the previous one by a quadrilateral u,a,v,b with
// halved edge lengths. Edge addresses form a quaternary tree rooted at "e"
// (children ".0" u-a, ".1" a-v, ".2" u-b, ".3" b-v) and corner ids are
// "<edge>:a" / "<edge>:b", so the inclusion of level n-1 into level n is the
// identity on vertex ids.
struct Quadrilateral {
  int level = 0;  // sides have length 2^-level
  std::string edge_address;
  int u = -1, a = -1, v = -1, b = -1;
};

struct DiamondGraph {
  int level = 0;
  std::shared_ptr<const MetricGraph> graph;
  int top = 0, bottom = 1;
  std::vector<Quadrilateral> quadrilaterals;          // creation order
  std::unordered_map<std::string, int> quad_by_edge;  // replaced edge -> index
  // Endpoints of every edge ever created, including replaced ones.
  std::unordered_map<std::string, std::pair<int, int>> edge_endpoints;
  std::vector<std::string> vertex_origin;  // creating edge address, "" for top/bottom
};

DiamondGraph diamond(int level, const GeneratorLimits& limits = {});

using VertexPair = std::pair<int, int>;

// The 6 vertex pairs of every recorded quadrilateral, deduplicated. The
// original level-0 edge pair counts as a degenerate quadrilateral pair when
// include_root_pair is set (the default).
std::vector<VertexPair> active_pairs(const DiamondGraph& d, bool include_root_pair = true);

enum class SubdiamondSide { SameSide, DifferentSidesA, DifferentSidesB };

struct SubdiamondId {
  std::string edge_address;
  int level = 0;  // level of the defining edge
  int u = -1, v = -1;
};

struct SubdiamondQuery {
  SubdiamondId subdiamond;
  SubdiamondSide side = SubdiamondSide::SameSide;
  int quad_index = -1;  // quadrilateral used for the side classification
};

// Smallest subdiamond of d containing both vertices, with the side
// classification of the proof's case analysis. Descent stops at the deepest
// edge that was actually subdivided in this graph, so the classification is
// always taken against a recorded quadrilateral.
SubdiamondQuery smallest_subdiamond(const DiamondGraph& d, const GraphMetric& metric, int w,
                                    int z);

// Heap index of the tree vector an edge corresponds to in the parallelogram
// constructions: root edge is 1, and a level-k edge maps into [2^k, 2^{k+1}).
int tree_index_of_edge_address(const std::string& address);

// True when `address` identifies `inner` or one of its ancestors.
bool subdiamond_contains_address(const std::string& address, const std::string& inner);

}  // namespace metricgeo
