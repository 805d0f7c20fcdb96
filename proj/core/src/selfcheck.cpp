#include "metricgeo/selfcheck.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "metricgeo/embedding.hpp"
#include "metricgeo/inclusion.hpp"
#include "metricgeo/martingale.hpp"
#include "metricgeo/partition.hpp"
#include "metricgeo/reflexivity.hpp"
#include "metricgeo/rng.hpp"
#include "metricgeo/witness.hpp"

namespace metricgeo {

namespace {

struct Collector {
  bool pass = true;
  std::ostringstream details;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details << "FAIL: " << what << "; ";
    }
  }
  void note(const std::string& what) { details << what << "; "; }
};

CriterionResult finish(int id, const std::string& name, Collector& c) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  r.pass = c.pass;
  r.details = c.details.str();
  if (!r.details.empty()) r.details.pop_back(), r.details.pop_back();
  return r;
}

// Random point key on a random uv-geodesic of X_level with denominator
// 2 * 3^level, so vertices and edge midpoints both appear.
std::string random_geodesic_key(Rng& rng, const LaaksoGraph& x, const Walk& walk, long num,
                                long den) {
  Rational target = make_rational(num, den);
  Rational acc(0);
  for (size_t t = 0; t < walk.edge_seq.size(); ++t) {
    const Edge& edge = x.graph->edge(walk.edge_seq[t]);
    if (target <= acc + edge.length) {
      Rational local = target - acc;
      if (edge.u != walk.vertex_seq[t]) local = edge.length - local;
      return point_key(x, GraphPoint::on_edge(*x.graph, walk.edge_seq[t], local));
    }
    acc += edge.length;
  }
  (void)rng;
  return "v";
}

}  // namespace

CriterionResult check_generators() {
  Collector c;
  // V(D_n) = 2 + 2(4^n - 1)/3 and E(D_n) = 4^n for n <= 6.
  for (int n = 0; n <= 6; ++n) {
    DiamondGraph d = diamond(n);
    mpz_class four_n = mpz_class(1) << (2 * n);
    mpz_class expected_v = 2 + 2 * (four_n - 1) / 3;
    c.require(mpz_class(d.graph->vertex_count()) == expected_v,
              "V(D_" + std::to_string(n) + ")");
    c.require(mpz_class(d.graph->edge_count()) == four_n, "E(D_" + std::to_string(n) + ")");
  }
  c.note("V(D_6) = 2732, E(D_6) = 4096");

  // X_i recurrences for i <= 4.
  long v = 2, e = 1;
  for (int i = 1; i <= 4; ++i) {
    long nv = 2 * v + 2 * e, ne = 6 * e;
    LaaksoGraph x = laakso2(i);
    c.require(x.graph->vertex_count() == nv, "V(X_" + std::to_string(i) + ")");
    c.require(x.graph->edge_count() == ne, "E(X_" + std::to_string(i) + ")");
    v = nv;
    e = ne;
  }
  c.note("V(X_4) = 672, E(X_4) = 1296");

  // Endpoint distance 1 and isometric inclusions, exactly.
  for (int n = 0; n <= 4; ++n) {
    DiamondGraph d = diamond(n);
    FiniteMetricSpace space = shortest_path_metric(*d.graph);
    c.require(space.distance(d.top, d.bottom) == 1, "d(top,bottom) in D_" + std::to_string(n));
    if (n > 0)
      c.require(inclusion_isometry_check(diamond(n - 1), d).isometric,
                "inclusion D_" + std::to_string(n - 1) + " -> D_" + std::to_string(n));
  }
  for (int i = 0; i <= 3; ++i) {
    LaaksoGraph x = laakso2(i);
    FiniteMetricSpace space = shortest_path_metric(*x.graph);
    c.require(space.distance(x.u, x.v) == 1, "d(u,v) in X_" + std::to_string(i));
    if (i > 0)
      c.require(inclusion_isometry_check(laakso2(i - 1), x).isometric,
                "inclusion X_" + std::to_string(i - 1) + " -> X_" + std::to_string(i));
  }
  return finish(1, "generators: counts, endpoint distance, inclusion isometries", c);
}

CriterionResult check_thickness(std::uint64_t seed) {
  Collector c;
  LaaksoFamily family;
  ThickWitness hand = laakso_thick_witness(family, "u", "v");
  c.require(hand.forks() == 5, "hand witness has n = 5");
  WitnessReport hand_report = verify_thick_witness(hand, make_rational(1, 2));
  c.require(hand_report.pass, "hand witness clauses");
  c.require(hand_report.width_sum == make_rational(7, 9), "hand witness width 7/9");
  c.note("u,v witness: k = 2, n = 5, width = " + to_string(hand_report.width_sum));

  Rng rng(seed);
  int produced = 0;
  int passed = 0;
  while (produced < 100) {
    int level = static_cast<int>(rng.below(4));
    const LaaksoGraph& x = family.at(level);
    auto walks = enumerate_geodesics(*x.graph, x.u, x.v, 16);
    const Walk& walk = walks[rng.below(walks.size())];
    long den = 2;
    for (int t = 0; t < level; ++t) den *= 3;
    long a = rng.range(0, den - 1);
    long b = rng.range(1, den);
    if (a >= b) continue;
    std::string ka = random_geodesic_key(rng, x, walk, a, den);
    std::string kb = random_geodesic_key(rng, x, walk, b, den);
    if (ka == kb) continue;
    ++produced;
    ThickWitness w = laakso_thick_witness(family, ka, kb);
    if (verify_thick_witness(w, make_rational(1, 2)).pass)
      ++passed;
    else
      c.require(false, "witness for (" + ka + ", " + kb + ")");
  }
  c.require(passed == 100, "all 100 seeded witnesses pass with c = 1/2");
  c.note("100 seeded geodesic pairs at levels <= 3 verified");
  return finish(2, "thickness: hand-traced and seeded witnesses at c = 1/2", c);
}

CriterionResult check_stegall_embeddings() {
  Collector c;
  for (int m = 1; m <= 5; ++m) {
    DiamondGraph d = diamond(m);
    StegallEmbedding se = stegall_diamond_embedding(dyadic_l1_tree(m), d);
    FiniteMetricSpace space = shortest_path_metric(*d.graph);
    DistortionResult r = distortion(se.embedding, space);
    c.require(r.upper == 1, "D_" + std::to_string(m) + " is exactly 1-Lipschitz");
    c.require(r.lower >= make_rational(1, 2),
              "D_" + std::to_string(m) + " lower constant >= 1/2");
    if (m == 5)
      c.note("D_5: " + std::to_string(r.pair_count) + " pairs, lower = " + to_string(r.lower) +
             ", upper = " + to_string(r.upper));
  }
  c.note("certificate matches (1-3eps)/(2(1+eps)) at eps = 0");
  return finish(3, "parallelogram embeddings: 1-Lipschitz, lower >= 1/2 up to D_5", c);
}

CriterionResult check_martingale_extraction() {
  Collector c;
  DiamondGraph d5 = diamond(5);
  StegallEmbedding se = stegall_diamond_embedding(dyadic_l1_tree(5), d5);
  auto family = std::make_shared<DiamondFamily>();
  MartingaleTrace trace = extract_martingale(se.embedding, diamond_oracle(family), "top",
                                             "bottom", 6, ExtractionMode::Geodesic,
                                             Rational(1));
  c.require(trace.steps.size() == 7, "6-step trace");
  c.require(trace.ell == make_rational(1, 2), "certified ell = 1/2");
  int certified = 0;
  for (const MartingaleStep& s : trace.steps)
    if (s.has_certificate) {
      ++certified;
      c.require(s.required_bound == make_rational(1, 8), "bound is ell c / 4 = 1/8");
      c.require(s.certificate_pass,
                "even-step difference " + to_string(s.l1_difference) + " >= 1/8");
    }
  c.require(certified == 3, "three even-step certificates");
  TraceCheck check = verify_martingale_trace(trace);
  c.require(check.nested, "partitions nested");
  c.require(check.martingale_property, "conditional expectations match exactly");
  c.require(check.bounded && trace.max_sup_norm <= 1, "sup norm <= 1");
  c.require(check.contraction, "odd-step contraction inequality");
  c.note("max sup norm = " + to_string(trace.max_sup_norm));
  for (const MartingaleStep& s : trace.steps)
    if (s.has_certificate) c.note("|M_k - M_{k-1}|_1 = " + to_string(s.l1_difference));
  return finish(4, "martingale extraction from the D_5 embedding", c);
}

CriterionResult check_interval_and_branch(std::uint64_t seed) {
  Collector c;
  Rng rng(seed);
  std::vector<Norm> norms{Norm::l1(), Norm::linf(), Norm::summing()};
  int interval_failures = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    size_t dim = 1 + rng.below(4);
    auto vec = [&]() {
      Vec v;
      for (size_t i = 0; i < dim; ++i) v.push_back(rng.rational(9, 9));
      return v;
    };
    IntervalBound b =
        interval_lower_bound(rng.positive_rational(9, 9), rng.positive_rational(9, 9), vec(),
                             vec(), vec(), norms[static_cast<size_t>(trial) % norms.size()]);
    if (!b.pass) ++interval_failures;
  }
  c.require(interval_failures == 0, "interval lemma over 10^4 instances");

  int branch_failures = 0;
  int branch_trials = 0;
  while (branch_trials < 10000) {
    size_t dim = 1 + rng.below(4);
    auto vec = [&]() {
      Vec v;
      for (size_t i = 0; i < dim; ++i) v.push_back(rng.rational(9, 9));
      return v;
    };
    const Norm& norm = norms[static_cast<size_t>(branch_trials) % norms.size()];
    Vec fw = vec(), fz = vec(), ft = vec(), fn = vec();
    Rational d_fork = rng.positive_rational(9, 9);
    Rational fork_norm = norm_exact(sub(fz, ft), norm);
    if (fork_norm == 0) continue;
    ++branch_trials;
    BranchDecision d = choose_branch(fw, fz, ft, fn, rng.positive_rational(9, 9),
                                     rng.positive_rational(9, 9), d_fork,
                                     Rational(fork_norm / d_fork), norm);
    if (!d.precondition_ok || !d.dichotomy_ok) ++branch_failures;
  }
  c.require(branch_failures == 0, "branch dichotomy over 10^4 instances");
  c.note("0 failures in 2 x 10^4 seeded instances");
  return finish(5, "interval lemma and branch dichotomy", c);
}

CriterionResult check_partitions(std::uint64_t seed) {
  Collector c;
  Rng rng(seed);
  DiamondGraph d = diamond(3);
  GraphMetric m(d.graph);
  auto walks = enumerate_geodesics(*d.graph, d.top, d.bottom, 16);

  int exact_matches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Walk& walk = walks[rng.below(walks.size())];
    PointSequence full = walk_points(walk);
    std::vector<PointSequence> chain{full};
    PointSequence current = full;
    while (current.points.size() > 2 && chain.size() < 5) {
      PointSequence smaller;
      smaller.points.push_back(current.points.front());
      for (size_t i = 1; i + 1 < current.points.size(); ++i)
        if (rng.coin()) smaller.points.push_back(current.points[i]);
      smaller.points.push_back(current.points.back());
      if (smaller.points.size() < current.points.size()) chain.push_back(smaller);
      current = smaller;
    }
    std::reverse(chain.begin(), chain.end());
    Partition iterated = partition_of(m, chain.front());
    for (size_t t = 1; t < chain.size(); ++t)
      iterated = refine_partition(m, iterated, chain[t - 1], chain[t]);
    if (b_equivalence_ratio(iterated, partition_of(m, chain.back())) == 1) ++exact_matches;
  }
  c.require(exact_matches == 1000, "iterated = direct for 10^3 true-geodesic chains");

  // C-geodesic chains with C <= 2: iterate refinement, report the worst ratio.
  Rational worst(1);
  int built = 0;
  while (built < 200) {
    PointSequence chain;
    chain.points = {GraphPoint::at_vertex(d.top), GraphPoint::at_vertex(d.bottom)};
    Partition iterated;
    iterated.breakpoints = {Rational(0), Rational(1)};
    bool ok = true;
    for (int ext = 0; ext < 3 && ok; ++ext) {
      PointSequence larger;
      larger.points.push_back(chain.points.front());
      for (size_t i = 1; i < chain.points.size(); ++i) {
        int candidate = static_cast<int>(rng.below(
            static_cast<std::uint64_t>(d.graph->vertex_count())));
        GraphPoint p = GraphPoint::at_vertex(candidate);
        if (rng.coin() && !(p == chain.points[i - 1]) && !(p == chain.points[i]))
          larger.points.push_back(p);
        larger.points.push_back(chain.points[i]);
      }
      Rational total(0);
      for (size_t i = 1; i < larger.points.size(); ++i)
        total += m.distance(larger.points[i - 1], larger.points[i]);
      if (total > 2) {
        ok = false;
        break;
      }
      iterated = refine_partition(m, iterated, chain, larger);
      chain = larger;
    }
    if (!ok || chain.points.size() < 3) continue;
    ++built;
    Rational ratio = b_equivalence_ratio(iterated, partition_of(m, chain));
    if (ratio > worst) worst = ratio;
  }
  c.require(worst >= 1, "B ratio is finite");
  c.note("worst B over 200 seeded 2uv-geodesic chains = " + to_string(worst));
  return finish(6, "partition refinement: exact for geodesics, finite B for C <= 2", c);
}

CriterionResult check_delta_trees() {
  Collector c;
  for (int n = 1; n <= 6; ++n) {
    SeparatedTreeSystem sys = dyadic_l1_tree(n);
    DeltaTreeReport r = verify_delta_tree(sys.tree);
    c.require(r.valid && r.delta == 1, "dyadic tree depth " + std::to_string(n) + " has delta 1");
    c.require(verify_tail_separation(sys).pass,
              "tail separation at depth " + std::to_string(n));
  }
  for (int m = 1; m <= 4; ++m) {
    PartialEmbeddingResult r =
        tree_to_diamond_partial_embedding(dyadic_l1_tree(m).tree, diamond(m));
    c.require(r.lambda >= make_rational(1, 2),
              "active-pair lower bound at depth " + std::to_string(m));
    if (m == 4) c.note("depth-4 active pairs: lambda = " + to_string(r.lambda));
  }
  return finish(7, "delta trees: dyadic system and backward construction", c);
}

CriterionResult check_reflexivity(std::uint64_t seed) {
  Collector c;
  ReflexivityWitness w = prefix_vector_witness(16);
  validate_reflexivity_witness(w);
  BasicConstantResult B = basic_constant(w.vectors, w.norm, 0);
  c.require(B.exact, "basic constant computed exactly");
  c.require(B.value == 2, "B = 2 for the prefix witness");
  ForwardCheckReport fwd = forward_embedding_check(w, Rational(2), B.value, 10000, seed);
  c.require(fwd.pass, "forward check: 10^4 active pairs, zero violations");
  c.note("lower factor theta/(B Delta) = " + to_string(fwd.lower_factor));

  Rng rng(seed + 1);
  int ok = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    Vec z;
    size_t dim = 1 + rng.below(8);
    for (size_t i = 0; i < dim; ++i) z.push_back(rng.rational(9, 9));
    auto [x1, x2] = positive_decomposition(z);
    bool good = l1_norm(x1) == summing_norm(x1) && l1_norm(x2) == summing_norm(x2) &&
                l1_norm(z) == l1_norm(x1) + l1_norm(x2) && sub(x1, x2) == z;
    if (good) ++ok;
  }
  c.require(ok == 10000, "positive decomposition identities on 10^4 vectors");

  std::vector<Vec> basis;
  for (int i = 0; i < 16; ++i) {
    Vec e(16, Rational(0));
    e[static_cast<size_t>(i)] = 1;
    basis.push_back(std::move(e));
  }
  Rational sep = convex_hull_separation(basis, 8, Norm::l1());
  c.require(sep == 2, "hull separation exactly 2");
  c.require(abs(sep - 2) <= make_rational(1, 1000000), "within LP tolerance 1e-6");
  c.note("conv separation = " + to_string(sep));
  return finish(8, "reflexivity: forward embedding, decomposition, hull separation", c);
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  return {check_generators(),           check_thickness(seed),
          check_stegall_embeddings(),   check_martingale_extraction(),
          check_interval_and_branch(seed), check_partitions(seed),
          check_delta_trees(),          check_reflexivity(seed)};
}

std::string selftest_report_json(const std::vector<CriterionResult>& results,
                                 std::uint64_t seed) {
  nlohmann::json out;
  out["seed"] = seed;
  bool all = true;
  out["criteria"] = nlohmann::json::array();
  for (const CriterionResult& r : results) {
    nlohmann::json jr;
    jr["id"] = r.id;
    jr["name"] = r.name;
    jr["pass"] = r.pass;
    jr["details"] = r.details;
    out["criteria"].push_back(std::move(jr));
    all = all && r.pass;
  }
  out["pass"] = all;
  return out.dump(2);
}

}  // namespace metricgeo
