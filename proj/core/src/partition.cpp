#include "metricgeo/partition.hpp"

#include <algorithm>

#include "metricgeo/errors.hpp"

namespace metricgeo {

void Partition::validate() const {
  if (breakpoints.size() < 2) throw InvalidInput("partition needs at least two breakpoints");
  if (breakpoints.front() != 0 || breakpoints.back() != 1)
    throw InvalidInput("partition must span [0,1]");
  for (size_t i = 1; i < breakpoints.size(); ++i)
    if (breakpoints[i] <= breakpoints[i - 1])
      throw InvalidInput("partition breakpoints must be strictly increasing");
}

bool operator==(const Partition& a, const Partition& b) {
  return a.breakpoints == b.breakpoints;
}

Partition partition_from_lengths(const std::vector<Rational>& lengths) {
  if (lengths.empty()) throw InvalidInput("partition needs at least one segment");
  Rational total(0);
  for (const Rational& l : lengths) {
    if (l <= 0) throw InvalidInput("segment lengths must be positive");
    total += l;
  }
  if (total == 0) throw InvalidInput("zero total length");
  Partition p;
  p.breakpoints.reserve(lengths.size() + 1);
  p.breakpoints.emplace_back(0);
  Rational prefix(0);
  for (const Rational& l : lengths) {
    prefix += l;
    p.breakpoints.push_back(prefix / total);
  }
  return p;
}

Partition partition_of(const GraphMetric& m, const PointSequence& geodesic) {
  return partition_from_lengths(segment_lengths(m, geodesic));
}

std::vector<int> subsequence_positions(const PointSequence& parent,
                                       const PointSequence& extension) {
  std::vector<int> anchors;
  anchors.reserve(parent.points.size());
  size_t j = 0;
  for (const GraphPoint& p : parent.points) {
    while (j < extension.points.size() && !(extension.points[j] == p)) ++j;
    if (j == extension.points.size())
      throw InvalidInput("parent sequence is not a subsequence of the extension");
    anchors.push_back(static_cast<int>(j));
    ++j;
  }
  if (anchors.front() != 0 ||
      anchors.back() != static_cast<int>(extension.points.size()) - 1)
    throw InvalidInput("extension must share the parent's endpoints");
  return anchors;
}

Partition refine_partition(const Partition& parent, const std::vector<int>& anchors,
                           const std::vector<Rational>& extension_lengths) {
  parent.validate();
  if (anchors.size() != parent.breakpoints.size())
    throw InvalidInput("anchor count must match the parent partition");
  if (anchors.front() != 0 || anchors.back() != static_cast<int>(extension_lengths.size()))
    throw InvalidInput("anchors must span the extension");
  Partition out;
  out.breakpoints.push_back(parent.breakpoints.front());
  for (int i = 0; i + 1 < static_cast<int>(anchors.size()); ++i) {
    int lo = anchors[static_cast<size_t>(i)];
    int hi = anchors[static_cast<size_t>(i) + 1];
    if (hi <= lo) throw InvalidInput("anchors must be strictly increasing");
    Rational span_total(0);
    for (int t = lo; t < hi; ++t) span_total += extension_lengths[static_cast<size_t>(t)];
    if (span_total <= 0) throw InvalidInput("extension span with zero length");
    const Rational& a = parent.breakpoints[static_cast<size_t>(i)];
    const Rational& b = parent.breakpoints[static_cast<size_t>(i) + 1];
    Rational prefix(0);
    for (int t = lo; t < hi; ++t) {
      prefix += extension_lengths[static_cast<size_t>(t)];
      out.breakpoints.push_back(a + (b - a) * prefix / span_total);
    }
  }
  out.validate();
  return out;
}

Partition refine_partition(const GraphMetric& m, const Partition& parent,
                           const PointSequence& parent_geodesic, const PointSequence& extension) {
  if (parent.breakpoints.size() != parent_geodesic.points.size())
    throw InvalidInput("parent partition does not match the parent geodesic");
  std::vector<int> anchors = subsequence_positions(parent_geodesic, extension);
  return refine_partition(parent, anchors, segment_lengths(m, extension));
}

Rational b_equivalence_ratio(const Partition& a, const Partition& b) {
  if (a.breakpoints.size() != b.breakpoints.size())
    throw InvalidInput("partitions must have the same number of breakpoints");
  a.validate();
  b.validate();
  Rational worst(1);
  for (int i = 0; i < a.intervals(); ++i) {
    Rational r = a.interval_length(i) / b.interval_length(i);
    if (r < 1) r = 1 / r;
    if (r > worst) worst = r;
  }
  return worst;
}

}  // namespace metricgeo
