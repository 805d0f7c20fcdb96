#include "metricgeo/inclusion.hpp"

#include "metricgeo/errors.hpp"

namespace metricgeo {

InclusionReport inclusion_isometry_check(const MetricGraph& lower, const MetricGraph& higher) {
  FiniteMetricSpace low = shortest_path_metric(lower);
  FiniteMetricSpace high = shortest_path_metric(higher);
  InclusionReport report;
  int n = low.size();
  for (int i = 0; i < n; ++i) {
    int hi = high.index(low.id(i));
    if (hi < 0) {
      report.first_violation = "vertex " + low.id(i) + " missing from the higher level";
      return report;
    }
  }
  for (int i = 0; i < n; ++i) {
    int hi = high.index(low.id(i));
    for (int j = i + 1; j < n; ++j) {
      int hj = high.index(low.id(j));
      ++report.checked_pairs;
      if (low.distance(i, j) != high.distance(hi, hj)) {
        report.first_violation = "d(" + low.id(i) + "," + low.id(j) + ") = " +
                                 to_string(low.distance(i, j)) + " vs " +
                                 to_string(high.distance(hi, hj));
        return report;
      }
    }
  }
  report.isometric = true;
  return report;
}

namespace {

void require_consecutive(int lower, int higher) {
  if (lower > higher || higher - lower > 1)
    throw InvalidInput("inclusion check expects equal or consecutive levels, got " +
                       std::to_string(lower) + " and " + std::to_string(higher));
}

}  // namespace

InclusionReport inclusion_isometry_check(const DiamondGraph& lower, const DiamondGraph& higher) {
  require_consecutive(lower.level, higher.level);
  return inclusion_isometry_check(*lower.graph, *higher.graph);
}

InclusionReport inclusion_isometry_check(const LaaksoGraph& lower, const LaaksoGraph& higher) {
  require_consecutive(lower.level, higher.level);
  return inclusion_isometry_check(*lower.graph, *higher.graph);
}

}  // namespace metricgeo
