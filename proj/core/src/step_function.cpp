#include "metricgeo/step_function.hpp"

#include <algorithm>

#include "metricgeo/errors.hpp"

namespace metricgeo {

void StepFunction::validate() const {
  partition.validate();
  if (static_cast<int>(values.size()) != partition.intervals())
    throw InvalidInput("step function needs one value per interval");
  for (const Vec& v : values)
    if (v.size() != values.front().size())
      throw InvalidInput("step function values must share one dimension");
}

bool operator==(const StepFunction& a, const StepFunction& b) {
  return a.partition == b.partition && a.values == b.values;
}

Rational value_norm(const Vec& v, const Norm& n) {
  if (n.exact()) return norm_exact(v, n);
  return rational_from_double(norm_l2(v));
}

StepFunction step_from_geodesic(const Embedding& f, const std::vector<std::string>& keys,
                                const std::vector<Rational>& segment_lengths) {
  if (keys.size() < 2 || segment_lengths.size() + 1 != keys.size())
    throw InvalidInput("geodesic step needs n+1 keys for n segments");
  Rational total(0);
  for (const Rational& l : segment_lengths) {
    if (l <= 0) throw InvalidInput("zero-length segment in geodesic chain");
    total += l;
  }

  StepFunction out;
  out.norm = f.norm;
  out.partition.breakpoints.push_back(Rational(0));
  Rational prefix(0);
  for (size_t k = 0; k < segment_lengths.size(); ++k) {
    prefix += segment_lengths[k];
    out.partition.breakpoints.push_back(prefix / total);
    Vec diff = sub(f.at(keys[k + 1]), f.at(keys[k]));
    out.values.push_back(scale(diff, 1 / segment_lengths[k]));
  }
  out.validate();
  return out;
}

StepFunction step_from_geodesic(const Embedding& f, const GraphMetric& m,
                                const PointSequence& chain,
                                const std::vector<std::string>& keys) {
  if (chain.points.size() != keys.size())
    throw InvalidInput("point/key count mismatch");
  if (chain.points.size() < 2) throw InvalidInput("chain needs at least two points");
  const GraphPoint& u = chain.points.front();
  std::vector<Rational> lengths;
  Rational from_u_prev(0);
  for (size_t k = 1; k < chain.points.size(); ++k) {
    Rational from_u = m.distance(u, chain.points[k]);
    Rational seg = m.distance(chain.points[k - 1], chain.points[k]);
    if (seg == 0) throw InvalidInput("zero-length segment at position " + std::to_string(k));
    if (from_u < from_u_prev)
      throw InvalidInput("chain distances from u are not nondecreasing at position " +
                         std::to_string(k));
    if (from_u != from_u_prev + seg)
      throw InvalidInput("points do not lie on a common geodesic in listed order (position " +
                         std::to_string(k) + ")");
    lengths.push_back(seg);
    from_u_prev = from_u;
  }
  return step_from_geodesic(f, keys, lengths);
}

StepFunction step_from_cgeodesic(const Embedding& f, const std::vector<std::string>& keys,
                                 const Partition& partition) {
  partition.validate();
  if (static_cast<int>(keys.size()) != partition.intervals() + 1)
    throw InvalidInput("partition does not match the chain: " + std::to_string(keys.size()) +
                       " points vs " + std::to_string(partition.intervals()) + " intervals");
  StepFunction out;
  out.norm = f.norm;
  out.partition = partition;
  for (int i = 0; i < partition.intervals(); ++i) {
    Vec diff = sub(f.at(keys[static_cast<size_t>(i) + 1]), f.at(keys[static_cast<size_t>(i)]));
    out.values.push_back(scale(diff, 1 / partition.interval_length(i)));
  }
  out.validate();
  return out;
}

StepFunction conditional_expectation(const StepFunction& fine, const Partition& coarse) {
  fine.validate();
  coarse.validate();
  StepFunction out;
  out.norm = fine.norm;
  out.partition = coarse;
  size_t fi = 0;
  const auto& fb = fine.partition.breakpoints;
  for (int i = 0; i < coarse.intervals(); ++i) {
    const Rational& lo = coarse.breakpoints[static_cast<size_t>(i)];
    const Rational& hi = coarse.breakpoints[static_cast<size_t>(i) + 1];
    if (fb[fi] != lo)
      throw InvalidInput("coarse breakpoint " + to_string(lo) +
                         " is not a breakpoint of the fine partition");
    Vec avg(fine.values.front().size(), Rational(0));
    Rational covered(0);
    while (fi < fine.values.size() && fb[fi + 1] <= hi) {
      Rational len = fb[fi + 1] - fb[fi];
      avg = add(avg, scale(fine.values[fi], len));
      covered += len;
      ++fi;
    }
    if (covered != hi - lo)
      throw InvalidInput("coarse breakpoint " + to_string(hi) +
                         " is not a breakpoint of the fine partition");
    out.values.push_back(scale(avg, 1 / (hi - lo)));
  }
  if (fi != fine.values.size())
    throw InvalidInput("fine partition extends past the coarse one");
  out.validate();
  return out;
}

namespace {

std::vector<Rational> merged_breakpoints(const Partition& a, const Partition& b) {
  std::vector<Rational> merged;
  merged.reserve(a.breakpoints.size() + b.breakpoints.size());
  std::merge(a.breakpoints.begin(), a.breakpoints.end(), b.breakpoints.begin(),
             b.breakpoints.end(), std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return merged;
}

const Vec& value_at(const StepFunction& f, const Rational& left_endpoint) {
  // Interval containing (left_endpoint, ...]: the first breakpoint strictly
  // greater than left_endpoint closes it.
  const auto& b = f.partition.breakpoints;
  size_t i = static_cast<size_t>(std::upper_bound(b.begin(), b.end(), left_endpoint) -
                                 b.begin());
  if (i == 0 || i >= b.size()) throw InvalidInput("point outside the partition");
  return f.values[i - 1];
}

}  // namespace

Rational l1_distance(const StepFunction& f, const StepFunction& g) {
  f.validate();
  g.validate();
  std::vector<Rational> merged = merged_breakpoints(f.partition, g.partition);
  Rational total(0);
  for (size_t i = 0; i + 1 < merged.size(); ++i) {
    Vec diff = sub(value_at(f, merged[i]), value_at(g, merged[i]));
    total += (merged[i + 1] - merged[i]) * value_norm(diff, f.norm);
  }
  return total;
}

Rational sup_norm(const StepFunction& f) {
  f.validate();
  Rational best(0);
  for (const Vec& v : f.values) {
    Rational n = value_norm(v, f.norm);
    if (n > best) best = n;
  }
  return best;
}

}  // namespace metricgeo
