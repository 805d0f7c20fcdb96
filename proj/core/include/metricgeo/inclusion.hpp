#pragma once

#include <string>

#include "metricgeo/diamond.hpp"
#include "metricgeo/laakso.hpp"
#include "metricgeo/metric_graph.hpp"

namespace metricgeo {

struct InclusionReport {
  bool isometric = false;
  long checked_pairs = 0;
  std::string first_violation;  // empty when isometric
};

// Exact check that distances agree on every vertex pair of `lower` when the
// ids are resolved inside `higher`.
InclusionReport inclusion_isometry_check(const MetricGraph& lower, const MetricGraph& higher);

// Level-aware wrappers: the levels must be equal or consecutive.
InclusionReport inclusion_isometry_check(const DiamondGraph& lower, const DiamondGraph& higher);
InclusionReport inclusion_isometry_check(const LaaksoGraph& lower, const LaaksoGraph& higher);

}  // namespace metricgeo
