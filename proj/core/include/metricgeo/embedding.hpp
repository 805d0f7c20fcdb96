#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "metricgeo/delta_tree.hpp"
#include "metricgeo/diamond.hpp"
#include "metricgeo/metric_graph.hpp"
#include "metricgeo/norms.hpp"

namespace metricgeo {

// A pointwise map into a normed coordinate space, keyed by canonical point
// keys (vertex ids, or "<edge>@<offset>" for thickening points), with the
// certified Lipschitz constants and the pair set they were certified over.
struct Embedding {
  Norm norm;
  int dimension = 0;
  std::unordered_map<std::string, Vec> points;
  Rational certified_lower;
  Rational certified_upper;
  std::string certified_pairs = "none";  // "all" | "active" | "none"

  const Vec& at(const std::string& key) const;
  bool has(const std::string& key) const { return points.count(key) != 0; }
};

// The parallelogram-replacement embedding driven by a separated tree system:
// level 0 maps to {0, y_1} and the vector y_j/2^k of each edge is replaced by
// the parallelogram with sides y_{2j}/2^{k+1}, y_{2j+1}/2^{k+1} (a-corner
// takes the even index). 1-Lipschitz with lower constant certified as
// (1-3eps)/(2(1+eps)).
struct StegallEmbedding {
  Embedding embedding;
  // f(vertex) as an exact combination of tree vectors, for the structural
  // tail statements; indexed like the diamond's vertices.
  std::vector<std::map<int, Rational>> combination;
  std::unordered_map<std::string, int> edge_tree_index;
};

StegallEmbedding stegall_diamond_embedding(const SeparatedTreeSystem& sys, const DiamondGraph& d);

// The backward construction from a bare delta-tree: partial bilipschitz over
// the active pairs only. The tree is shifted by -x_1 + r*e_1 for the first
// grid candidate r that bounds the norms away from zero.
struct PartialEmbeddingResult {
  Embedding embedding;
  std::vector<VertexPair> active;
  Rational shift_r;
  Rational lambda;   // min |f(x)-f(y)| / d(x,y) over active pairs
  Rational upper_c;  // (max ratio) / lambda
};

PartialEmbeddingResult tree_to_diamond_partial_embedding(const DeltaTree& tree,
                                                         const DiamondGraph& d);

struct DistortionResult {
  Rational lower;
  Rational upper;
  Rational distortion;
  std::pair<std::string, std::string> min_pair;
  std::pair<std::string, std::string> max_pair;
  long pair_count = 0;
  bool exact = true;
};

// Min and max of |f(x)-f(y)| / d(x,y) over the pair set (all pairs when
// `pairs` is null). Exact for the rational norms, double-backed for l2.
DistortionResult distortion(const Embedding& f, const FiniteMetricSpace& space,
                            const std::vector<VertexPair>* pairs = nullptr);

}  // namespace metricgeo
