#pragma once

#include <string>
#include <vector>

#include "metricgeo/norms.hpp"

namespace metricgeo {

// Dyadically indexed vectors y_1 .. y_{2^{depth+1}-1} (slot 0 unused) with the
// averaging identity y_j = (y_{2j} + y_{2j+1})/2 and both children at equal
// distance >= delta from the parent.
struct DeltaTree {
  int depth = 0;
  std::vector<Vec> vectors;
  Norm norm;

  int max_index() const { return (1 << (depth + 1)) - 1; }
  int internal_count() const { return (1 << depth) - 1; }
};

struct DeltaTreeReport {
  bool valid = false;
  bool degenerate = false;  // valid with delta == 0
  Rational delta;           // largest valid delta when the identities hold
  std::vector<std::string> violations;
};

DeltaTreeReport verify_delta_tree(const DeltaTree& tree, double l2_tolerance = 1e-9);

// {j, 2j, 2j+1, 4j, ...} clipped to [1, max_index]: the branches growing out
// of node j.
std::vector<int> tail_indices(int j, int max_index);

// A delta-tree together with one separating functional per internal node:
// |<y_m, x_j>| >= 1 - eps on the tail of y_{2j} and <= eps on the tail of
// y_{2j+1}, with functional norms at most 1.
struct SeparatedTreeSystem {
  DeltaTree tree;                // weighted l1 in the stock system
  std::vector<Vec> functionals;  // slot 0 unused, indices 1 .. 2^depth - 1
  Rational epsilon;
};

// Exact finite model with eps = 0: node j at tree level k is the indicator of
// the dyadic interval I_j scaled by 2^k, in weighted l1 of dimension
// 2^depth with uniform weights 2^-depth; functionals are indicators of
// left-child intervals paired in l_inf. Every node has norm exactly 1 and the
// tree verifies with delta = 1.
SeparatedTreeSystem dyadic_l1_tree(int depth);

struct TailSeparationReport {
  bool pass = false;
  std::vector<std::string> violations;
};

TailSeparationReport verify_tail_separation(const SeparatedTreeSystem& sys);

}  // namespace metricgeo
