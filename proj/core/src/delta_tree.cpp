#include "metricgeo/delta_tree.hpp"

#include <cmath>

#include "metricgeo/errors.hpp"

namespace metricgeo {

namespace {

Rational vector_norm(const Vec& v, const Norm& n) {
  if (n.exact()) return norm_exact(v, n);
  return rational_from_double(norm_l2(v));
}

}  // namespace

DeltaTreeReport verify_delta_tree(const DeltaTree& tree, double l2_tolerance) {
  DeltaTreeReport report;
  if (tree.depth < 0 || static_cast<int>(tree.vectors.size()) != tree.max_index() + 1)
    throw InvalidInput("delta tree must hold indices 1 .. 2^(depth+1)-1");
  size_t dim = tree.vectors[1].size();
  for (int j = 1; j <= tree.max_index(); ++j)
    if (tree.vectors[static_cast<size_t>(j)].size() != dim)
      throw InvalidInput("delta tree vectors must share one dimension");

  Rational delta(-1);
  for (int j = 1; j <= tree.internal_count(); ++j) {
    const Vec& parent = tree.vectors[static_cast<size_t>(j)];
    const Vec& left = tree.vectors[static_cast<size_t>(2 * j)];
    const Vec& right = tree.vectors[static_cast<size_t>(2 * j + 1)];
    Vec average = scale(add(left, right), make_rational(1, 2));
    if (!(average == parent))
      report.violations.push_back("averaging identity fails at j=" + std::to_string(j));
    Rational dl = vector_norm(sub(left, parent), tree.norm);
    Rational dr = vector_norm(sub(right, parent), tree.norm);
    bool equal = tree.norm.exact() ? dl == dr
                                   : std::abs(to_double(dl) - to_double(dr)) <= l2_tolerance;
    if (!equal)
      report.violations.push_back("child distances differ at j=" + std::to_string(j) + ": " +
                                  to_string(dl) + " vs " + to_string(dr));
    if (delta < 0 || dl < delta) delta = dl;
  }
  if (delta < 0) delta = 0;  // depth 0: no internal nodes
  report.delta = delta;
  report.valid = report.violations.empty();
  report.degenerate = report.valid && delta == 0;
  return report;
}

std::vector<int> tail_indices(int j, int max_index) {
  if (j < 1 || j > max_index) throw InvalidInput("tail root out of range");
  std::vector<int> out;
  std::vector<int> frontier{j};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int t : frontier) {
      out.push_back(t);
      if (2 * t <= max_index) next.push_back(2 * t);
      if (2 * t + 1 <= max_index) next.push_back(2 * t + 1);
    }
    frontier = std::move(next);
  }
  return out;
}

SeparatedTreeSystem dyadic_l1_tree(int depth) {
  if (depth < 1) throw InvalidInput("dyadic_l1_tree requires depth >= 1");
  int dim = 1 << depth;
  Vec weights(static_cast<size_t>(dim), pow2(-depth));

  SeparatedTreeSystem sys;
  sys.epsilon = 0;
  sys.tree.depth = depth;
  sys.tree.norm = Norm::weighted_l1(weights);
  sys.tree.vectors.assign(static_cast<size_t>(1 << (depth + 1)), Vec());

  auto level_of = [](int j) {
    int k = 0;
    while ((2 << k) <= j) ++k;
    return k;
  };
  auto interval = [&](int j) {
    int k = level_of(j);
    int i = j - (1 << k);
    int width = dim >> k;
    return std::pair<int, int>{i * width, (i + 1) * width};
  };

  for (int j = 1; j < (1 << (depth + 1)); ++j) {
    auto [lo, hi] = interval(j);
    Vec v(static_cast<size_t>(dim), Rational(0));
    for (int t = lo; t < hi; ++t) v[static_cast<size_t>(t)] = pow2(level_of(j));
    sys.tree.vectors[static_cast<size_t>(j)] = std::move(v);
  }

  sys.functionals.assign(static_cast<size_t>(1 << depth), Vec());
  for (int j = 1; j < (1 << depth); ++j) {
    auto [lo, hi] = interval(2 * j);
    Vec f(static_cast<size_t>(dim), Rational(0));
    for (int t = lo; t < hi; ++t) f[static_cast<size_t>(t)] = 1;
    sys.functionals[static_cast<size_t>(j)] = std::move(f);
  }
  return sys;
}

TailSeparationReport verify_tail_separation(const SeparatedTreeSystem& sys) {
  TailSeparationReport report;
  const DeltaTree& tree = sys.tree;
  if (static_cast<int>(sys.functionals.size()) != tree.internal_count() + 1)
    throw InvalidInput("system must hold one functional per internal node");
  const Vec& weights = tree.norm.weights;
  Rational one_minus_eps = 1 - sys.epsilon;
  for (int j = 1; j <= tree.internal_count(); ++j) {
    const Vec& f = sys.functionals[static_cast<size_t>(j)];
    if (linf_norm(f) > 1)
      report.violations.push_back("functional norm exceeds 1 at j=" + std::to_string(j));
    for (int m : tail_indices(2 * j, tree.max_index())) {
      Rational p = abs(pairing(tree.vectors[static_cast<size_t>(m)], f, weights));
      if (p < one_minus_eps)
        report.violations.push_back("tail of y_" + std::to_string(2 * j) + ": |<y_" +
                                    std::to_string(m) + ", x_" + std::to_string(j) +
                                    ">| = " + to_string(p) + " < 1-eps");
    }
    for (int m : tail_indices(2 * j + 1, tree.max_index())) {
      Rational p = abs(pairing(tree.vectors[static_cast<size_t>(m)], f, weights));
      if (p > sys.epsilon)
        report.violations.push_back("tail of y_" + std::to_string(2 * j + 1) + ": |<y_" +
                                    std::to_string(m) + ", x_" + std::to_string(j) +
                                    ">| = " + to_string(p) + " > eps");
    }
  }
  report.pass = report.violations.empty();
  return report;
}

}  // namespace metricgeo
