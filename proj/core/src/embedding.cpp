#include "metricgeo/embedding.hpp"

#include <algorithm>

#include "metricgeo/errors.hpp"

namespace metricgeo {

const Vec& Embedding::at(const std::string& key) const {
  auto it = points.find(key);
  if (it == points.end()) throw InvalidInput("embedding has no value for point " + key);
  return it->second;
}

namespace {

// Shared parallelogram engine: vectors[1..] indexed like the edge tree.
struct BuiltEmbedding {
  Embedding embedding;
  std::vector<std::map<int, Rational>> combination;
};

BuiltEmbedding build_parallelogram_embedding(const std::vector<Vec>& vectors, const Norm& norm,
                                             const DiamondGraph& d) {
  int needed = (1 << (d.level + 1)) - 1;
  if (static_cast<int>(vectors.size()) <= needed)
    throw InvalidInput("tree depth " +
                       std::to_string(static_cast<int>(vectors.size()) - 1) +
                       " cannot host diamond level " + std::to_string(d.level));
  size_t dim = vectors[1].size();

  BuiltEmbedding out;
  out.embedding.norm = norm;
  out.embedding.dimension = static_cast<int>(dim);
  out.combination.assign(static_cast<size_t>(d.graph->vertex_count()), {});

  std::vector<Vec> value(static_cast<size_t>(d.graph->vertex_count()));
  value[static_cast<size_t>(d.top)] = Vec(dim, Rational(0));
  value[static_cast<size_t>(d.bottom)] = vectors[1];
  out.combination[static_cast<size_t>(d.bottom)][1] = 1;

  for (const Quadrilateral& q : d.quadrilaterals) {
    int j = tree_index_of_edge_address(q.edge_address);
    Rational half = pow2(-q.level);
    const Vec& left = vectors[static_cast<size_t>(2 * j)];
    const Vec& right = vectors[static_cast<size_t>(2 * j + 1)];
    value[static_cast<size_t>(q.a)] = add(value[static_cast<size_t>(q.u)], scale(left, half));
    value[static_cast<size_t>(q.b)] = add(value[static_cast<size_t>(q.u)], scale(right, half));
    out.combination[static_cast<size_t>(q.a)] = out.combination[static_cast<size_t>(q.u)];
    out.combination[static_cast<size_t>(q.a)][2 * j] += half;
    out.combination[static_cast<size_t>(q.b)] = out.combination[static_cast<size_t>(q.u)];
    out.combination[static_cast<size_t>(q.b)][2 * j + 1] += half;
  }

  for (int i = 0; i < d.graph->vertex_count(); ++i)
    out.embedding.points.emplace(d.graph->vertex_id(i), std::move(value[static_cast<size_t>(i)]));
  return out;
}

}  // namespace

StegallEmbedding stegall_diamond_embedding(const SeparatedTreeSystem& sys,
                                           const DiamondGraph& d) {
  if (d.level > sys.tree.depth)
    throw InvalidInput("system depth " + std::to_string(sys.tree.depth) +
                       " is too shallow for diamond level " + std::to_string(d.level));
  if (sys.epsilon < 0 || 3 * sys.epsilon >= 1)
    throw InvalidInput("eps = " + to_string(sys.epsilon) +
                       " >= 1/3: the lower-Lipschitz certificate (1-3eps)/(2(1+eps)) "
                       "degenerates to <= 0");
  DeltaTreeReport tree_report = verify_delta_tree(sys.tree);
  if (!tree_report.valid)
    throw InvalidInput("tree is not a delta-tree: " + tree_report.violations.front());

  BuiltEmbedding built = build_parallelogram_embedding(sys.tree.vectors, sys.tree.norm, d);
  StegallEmbedding out;
  out.embedding = std::move(built.embedding);
  out.combination = std::move(built.combination);
  for (const auto& [addr, ends] : d.edge_endpoints) {
    (void)ends;
    out.edge_tree_index.emplace(addr, tree_index_of_edge_address(addr));
  }

  Rational max_norm(0);
  for (int j = 1; j <= sys.tree.max_index(); ++j) {
    Rational n = norm_exact(sys.tree.vectors[static_cast<size_t>(j)], sys.tree.norm);
    if (n > max_norm) max_norm = n;
  }
  out.embedding.certified_upper = max_norm;
  out.embedding.certified_lower = (1 - 3 * sys.epsilon) / (2 * (1 + sys.epsilon));
  out.embedding.certified_pairs = "all";
  return out;
}

PartialEmbeddingResult tree_to_diamond_partial_embedding(const DeltaTree& tree,
                                                         const DiamondGraph& d) {
  if (!tree.norm.exact())
    throw InvalidInput("tree_to_diamond_partial_embedding requires an exact norm");
  DeltaTreeReport report = verify_delta_tree(tree);
  if (!report.valid)
    throw InvalidInput("input is not a delta-tree: " + report.violations.front());
  if (report.delta == 0)
    throw InvalidInput("degenerate delta-tree (delta = 0) admits no partial embedding");

  // Use the tree as given when its norms already stay within a factor 4 of
  // each other; otherwise translate by -x_1 + r e_1 for the first grid
  // candidate r = t R0/4 that does (r = 2 R0 always works).
  std::vector<Vec> centered(tree.vectors.size());
  Rational r0(0);
  for (int j = 1; j <= tree.max_index(); ++j) {
    centered[static_cast<size_t>(j)] = sub(tree.vectors[static_cast<size_t>(j)], tree.vectors[1]);
    Rational n = norm_exact(centered[static_cast<size_t>(j)], tree.norm);
    if (n > r0) r0 = n;
  }
  if (r0 == 0) throw InvalidInput("all tree vectors coincide after centering");

  auto norms_bounded = [&](const std::vector<Vec>& vs) {
    Rational lo(-1), hi(0);
    for (int j = 1; j <= tree.max_index(); ++j) {
      Rational n = norm_exact(vs[static_cast<size_t>(j)], tree.norm);
      if (lo < 0 || n < lo) lo = n;
      if (n > hi) hi = n;
    }
    return lo > 0 && 4 * lo >= hi;
  };

  Rational chosen_r(-1);
  std::vector<Vec> shifted = tree.vectors;
  if (norms_bounded(shifted)) {
    chosen_r = 0;
  } else {
    for (int t = 1; t <= 8 && chosen_r < 0; ++t) {
      Rational r = t * r0 / 4;
      for (int j = 1; j <= tree.max_index(); ++j) {
        Vec v = centered[static_cast<size_t>(j)];
        v[0] += r;
        shifted[static_cast<size_t>(j)] = std::move(v);
      }
      if (norms_bounded(shifted)) chosen_r = r;
    }
  }
  if (chosen_r < 0) throw Error("internal: no shift candidate bounded the tree norms");

  BuiltEmbedding built = build_parallelogram_embedding(shifted, tree.norm, d);
  PartialEmbeddingResult out;
  out.embedding = std::move(built.embedding);
  out.shift_r = chosen_r;
  out.active = active_pairs(d);

  FiniteMetricSpace space = shortest_path_metric(*d.graph);
  Rational lo(-1), hi(0);
  for (const VertexPair& p : out.active) {
    Vec diff = sub(out.embedding.at(d.graph->vertex_id(p.first)),
                   out.embedding.at(d.graph->vertex_id(p.second)));
    Rational ratio = norm_exact(diff, tree.norm) / space.distance(p.first, p.second);
    if (lo < 0 || ratio < lo) lo = ratio;
    if (ratio > hi) hi = ratio;
  }
  if (lo <= 0) throw InvalidInput("active pair collapsed by the tree embedding");
  out.lambda = lo;
  out.upper_c = hi / lo;
  out.embedding.certified_lower = lo;
  out.embedding.certified_upper = hi;
  out.embedding.certified_pairs = "active";
  return out;
}

DistortionResult distortion(const Embedding& f, const FiniteMetricSpace& space,
                            const std::vector<VertexPair>* pairs) {
  std::vector<VertexPair> all;
  if (!pairs) {
    for (int i = 0; i < space.size(); ++i)
      for (int j = i + 1; j < space.size(); ++j) all.emplace_back(i, j);
    pairs = &all;
  }
  if (pairs->empty()) throw InvalidInput("distortion over an empty pair set");

  DistortionResult out;
  out.exact = f.norm.exact();
  Rational lo(-1), hi(-1);
  for (const VertexPair& p : *pairs) {
    const std::string& a = space.id(p.first);
    const std::string& b = space.id(p.second);
    const Rational& dist = space.distance(p.first, p.second);
    if (dist <= 0) throw InvalidInput("distortion pair at zero distance: " + a + "," + b);
    Vec diff = sub(f.at(a), f.at(b));
    Rational ratio = out.exact ? norm_exact(diff, f.norm) / dist
                               : rational_from_double(norm_l2(diff) / to_double(dist));
    if (lo < 0 || ratio < lo) {
      lo = ratio;
      out.min_pair = {a, b};
    }
    if (hi < 0 || ratio > hi) {
      hi = ratio;
      out.max_pair = {a, b};
    }
    ++out.pair_count;
  }
  out.lower = lo;
  out.upper = hi;
  if (lo <= 0) throw InvalidInput("embedding collapses the pair (" + out.min_pair.first + "," +
                                  out.min_pair.second + ")");
  out.distortion = hi / lo;
  return out;
}

}  // namespace metricgeo
