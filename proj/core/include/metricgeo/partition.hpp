#pragma once

#include <vector>

#include "metricgeo/geodesics.hpp"
#include "metricgeo/rational.hpp"

namespace metricgeo {

// Breakpoints 0 = a_0 < a_1 < ... < a_n = 1 of a partition of [0,1].
struct Partition {
  std::vector<Rational> breakpoints;

  int intervals() const { return static_cast<int>(breakpoints.size()) - 1; }
  Rational interval_length(int i) const {
    return breakpoints[static_cast<size_t>(i) + 1] - breakpoints[static_cast<size_t>(i)];
  }
  void validate() const;
};

bool operator==(const Partition& a, const Partition& b);

// a_k = (sum of the first k lengths) / (total); exact.
Partition partition_from_lengths(const std::vector<Rational>& lengths);

Partition partition_of(const GraphMetric& m, const PointSequence& geodesic);

// Index of each parent point inside the extension (leftmost subsequence
// match); throws when the parent is not a subsequence.
std::vector<int> subsequence_positions(const PointSequence& parent, const PointSequence& extension);

// Subdivide each parent interval proportionally to the extension's segment
// lengths between the matching anchor points.
Partition refine_partition(const Partition& parent, const std::vector<int>& anchors,
                           const std::vector<Rational>& extension_lengths);

Partition refine_partition(const GraphMetric& m, const Partition& parent,
                           const PointSequence& parent_geodesic, const PointSequence& extension);

// max over intervals of max(len_a/len_b, len_b/len_a); 1 exactly when equal.
Rational b_equivalence_ratio(const Partition& a, const Partition& b);

}  // namespace metricgeo
