#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "metricgeo/diamond.hpp"
#include "metricgeo/geodesics.hpp"
#include "metricgeo/laakso.hpp"
#include "metricgeo/limits.hpp"

namespace metricgeo {

using SpaceHandle = std::shared_ptr<GraphMetric>;

inline SpaceHandle make_space(std::shared_ptr<const MetricGraph> g) {
  return std::make_shared<GraphMetric>(std::move(g));
}

// The data certifying condition (2) of the thick-family theorem for one pair
// (u0, v0): interleavings w0=u0, z1, w1, ..., zn, wn=v0 and the fork twins
// ztilde, with equal fork distances and total separation >= c d(u0, v0).
//
// Condition (1) of the theorem (infinitely many marked geodesics) is not
// operationalized: builders certify (2), and marked geodesics exist only as
// the oracles that produce witnesses.
struct ThickWitness {
  SpaceHandle space;
  GraphPoint u0, v0;
  std::vector<GraphPoint> w;       // w0..wn
  std::vector<GraphPoint> z;       // z1..zn, stored from index 0
  std::vector<GraphPoint> ztilde;  // same indexing
  Rational c;
  // Canonical level-independent keys aligned with the points above.
  std::string u0_key, v0_key;
  std::vector<std::string> w_keys, z_keys, zt_keys;
  // Family endpoints when the builder knows them; enables the clause that the
  // chains extend to a full uv-geodesic.
  std::optional<GraphPoint> family_u, family_v;

  int forks() const { return static_cast<int>(z.size()); }
};

struct ClauseResult {
  std::string clause;
  bool pass = false;
  std::string detail;
};

struct WitnessReport {
  bool pass = false;
  std::vector<ClauseResult> clauses;
  Rational width_sum;
  Rational width_required;
};

WitnessReport verify_thick_witness(const ThickWitness& witness, const Rational& c);

// Generated levels of one family, cached; generation respects the limits.
class DiamondFamily {
 public:
  explicit DiamondFamily(GeneratorLimits limits = {}) : limits_(limits) {}
  const DiamondGraph& at(int level);

 private:
  GeneratorLimits limits_;
  std::map<int, DiamondGraph> cache_;
};

class LaaksoFamily {
 public:
  explicit LaaksoFamily(GeneratorLimits limits = {}) : limits_(limits) {}
  const LaaksoGraph& at(int level);

 private:
  GeneratorLimits limits_;
  std::map<int, LaaksoGraph> cache_;
};

// The trisection witness: starting from the level that holds both points,
// trisect until the first and last new vertices on a fixed u0-v0 geodesic
// span at least `threshold` of d(u0, v0); the w's are those vertices, the
// z's the midpoints between consecutive ones and the ztilde's their pasted
// twins. Passes verification with c = threshold.
ThickWitness laakso_thick_witness(LaaksoFamily& family, const std::string& u0_key,
                                  const std::string& v0_key,
                                  const Rational& threshold = make_rational(1, 2));

// The quadrilateral witness: w's are the vertices of the level-n geodesic
// between two level-n vertices, and each edge forks into the a and b corners
// of its replacing quadrilateral. Each fork separation equals the edge
// length, so the witness passes with c = 1.
ThickWitness diamond_thick_witness(const DiamondGraph& d_next, const std::string& u0_id,
                                   const std::string& v0_id);

// Oracle interface consumed by the martingale extraction: canonical point
// keys in, witness out. Builders may generate finer levels on demand.
using WitnessOracle = std::function<ThickWitness(const std::string&, const std::string&)>;

WitnessOracle diamond_oracle(std::shared_ptr<DiamondFamily> family);
WitnessOracle laakso_oracle(std::shared_ptr<LaaksoFamily> family,
                            Rational threshold = make_rational(1, 2));

// Witness for the isomorphic theorem: a base C-geodesic with two equal-length
// extensions agreeing exactly on the common index set and forking at isolated
// distinct indices with proportional split distances.
struct IsoWitness {
  SpaceHandle space;
  PointSequence base;
  PointSequence ext;
  PointSequence ext_tilde;
  std::vector<int> common;    // sorted positions into ext
  std::vector<int> distinct;  // sorted, disjoint from common
  Rational C = Rational(1);
};

WitnessReport verify_iso_witness(const IsoWitness& witness, const Rational& c);

// Every thick witness for geodesics is an iso witness: common points are the
// w's, distinct points the fork slots.
IsoWitness iso_from_thick(const ThickWitness& thick, Rational C = Rational(1));

}  // namespace metricgeo
