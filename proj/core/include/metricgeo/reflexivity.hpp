#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "metricgeo/norms.hpp"

namespace metricgeo {

// Active pair predicate of the submetric space X_Delta: (x, y) is active iff
// |x - y|_1 <= Delta |x - y|_s.
bool is_active(const Vec& x, const Vec& y, const Rational& delta);

struct BasicConstantResult {
  Rational value;
  std::string method;  // "vertex-enumeration" or "sampled"
  bool exact = false;
};

// Estimate of sup over k and coefficients of |sum_{i<=k} a_i y_i| /
// |sum_{i<=n} a_i y_i|. For at most 20 independent vectors spanning an
// l_inf space of matching dimension the polytope-vertex enumeration is exact;
// otherwise a seeded deterministic sample of size `resolution` reports a
// lower estimate.
BasicConstantResult basic_constant(const std::vector<Vec>& vectors, const Norm& norm,
                                   int resolution, std::uint64_t seed = 0);

// Witness data of the nonreflexivity characterization: unit vectors y_i, a
// norming functional with f(y_i) = theta, and the basic constant B.
struct ReflexivityWitness {
  std::vector<Vec> vectors;
  Vec functional;
  Rational theta;
  Norm norm;  // norm of the target space; linf or l1
};

// Exact invariant check: |y_i| = 1, |f|_dual = 1, f(y_i) = theta, theta in
// (0, 1]. Throws InvalidInput on the first failure.
void validate_reflexivity_witness(const ReflexivityWitness& witness);

struct ForwardCheckReport {
  bool pass = false;
  long samples = 0;
  long violations = 0;
  Rational lower_factor;  // theta / (B Delta)
  std::vector<std::string> details;
};

// For seeded random active differences z: theta/(B Delta) |z|_1 <= |T z| <=
// |z|_1, where T e_i = y_i. Violations are hard failures.
ForwardCheckReport forward_embedding_check(const ReflexivityWitness& witness,
                                           const Rational& delta, const Rational& B,
                                           long samples, std::uint64_t seed);

// z = positive part - negative part; each part has |.|_1 = |.|_s and the l1
// norms add up to |z|_1.
std::pair<Vec, Vec> positive_decomposition(const Vec& z);

// Exact distance between conv(points[0..split-1]) and conv(points[split..])
// in the given polyhedral norm, by linear programming over the two
// coefficient simplices.
Rational convex_hull_separation(const std::vector<Vec>& points, int split, const Norm& norm);

// The stock witness: y_i = e_1 + ... + e_i in l_inf^n, f = first coordinate,
// theta = 1; its basic constant is 2 for every n >= 2.
ReflexivityWitness prefix_vector_witness(int n);

}  // namespace metricgeo
