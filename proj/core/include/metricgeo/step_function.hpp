#pragma once

#include <string>
#include <vector>

#include "metricgeo/embedding.hpp"
#include "metricgeo/geodesics.hpp"
#include "metricgeo/partition.hpp"

namespace metricgeo {

// Piecewise-constant vector-valued function on (0,1]: one value per interval
// of the partition. Intervals are left-open right-closed; breakpoint
// membership never matters for the integrals computed here.
struct StepFunction {
  Partition partition;
  std::vector<Vec> values;
  Norm norm;

  int intervals() const { return partition.intervals(); }
  void validate() const;
};

bool operator==(const StepFunction& a, const StepFunction& b);

// Value norm that is exact for the rational norms and double-backed for l2.
Rational value_norm(const Vec& v, const Norm& n);

// M_V: value (f(v_{k+1}) - f(v_k)) / d(v_k, v_{k+1}) on the interval
// (d(u,v_k), d(u,v_{k+1})], with the metric rescaled so d(u,v) = 1. The
// caller passes the chain as embedding keys plus exact segment lengths.
StepFunction step_from_geodesic(const Embedding& f, const std::vector<std::string>& keys,
                                const std::vector<Rational>& segment_lengths);

// Graph-level form: checks that the points sit on a common geodesic in
// listed order (distances telescope) before delegating.
StepFunction step_from_geodesic(const Embedding& f, const GraphMetric& m,
                                const PointSequence& chain,
                                const std::vector<std::string>& keys);

// The iso-theorem step: value (f(u_{i+1}) - f(u_i)) / (a_{i+1} - a_i) on the
// i-th interval of the given partition (no metric rescaling).
StepFunction step_from_cgeodesic(const Embedding& f, const std::vector<std::string>& keys,
                                 const Partition& partition);

// Length-weighted averages of `fine` over each interval of `coarse`, whose
// breakpoints must all be breakpoints of fine's partition. Exact.
StepFunction conditional_expectation(const StepFunction& fine, const Partition& coarse);

// Bochner-style integral of |f - g| over (0,1], after merging partitions.
Rational l1_distance(const StepFunction& f, const StepFunction& g);

Rational sup_norm(const StepFunction& f);

}  // namespace metricgeo
