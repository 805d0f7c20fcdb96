#pragma once

#include <vector>

#include "metricgeo/metric_graph.hpp"

namespace metricgeo {

// A vertex-to-vertex walk along explicit edges. Edge identity matters:
// parallel edges give distinct geodesics with identical vertex sequences.
struct Walk {
  int start = -1;
  std::vector<int> edge_seq;
  std::vector<int> vertex_seq;  // size = edge count + 1, begins at start
  Rational length;
};

// All shortest u-v walks, at most `limit`, ordered lexicographically by edge
// address sequence.
std::vector<Walk> enumerate_geodesics(const MetricGraph& g, int u, int v, int limit);

struct PointSequence {
  std::vector<GraphPoint> points;
};

PointSequence walk_points(const Walk& w);

std::vector<Rational> segment_lengths(const GraphMetric& m, const PointSequence& seq);

struct CGeodesicCheck {
  bool ok = false;
  Rational total;              // sum of segment lengths
  Rational endpoint_distance;  // d(u, v)
  Rational ratio;              // total / d(u, v)
};

// Whether the chain is a C-geodesic between its endpoints, with the exact
// ratio. A bare (u, v) pair passes for every C >= 1.
CGeodesicCheck is_c_geodesic(const GraphMetric& m, const PointSequence& seq, const Rational& C);

}  // namespace metricgeo
