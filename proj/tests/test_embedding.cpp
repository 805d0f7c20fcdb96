#include <doctest.h>

#include "metricgeo/embedding.hpp"
#include "metricgeo/errors.hpp"
#include "metricgeo/rng.hpp"

using namespace metricgeo;

namespace {

bool in_tail(int index, int root) {
  while (index > root) index /= 2;
  return index == root;
}

bool vertex_in_subdiamond(const DiamondGraph& d, const std::string& addr, int x) {
  auto it = d.edge_endpoints.find(addr);
  if (it == d.edge_endpoints.end()) return false;
  if (it->second.first == x || it->second.second == x) return true;
  const std::string& origin = d.vertex_origin[static_cast<size_t>(x)];
  return !origin.empty() && subdiamond_contains_address(addr, origin);
}

}  // namespace

TEST_CASE("edge addresses map into the vector tree") {
  CHECK(tree_index_of_edge_address("e") == 1);
  CHECK(tree_index_of_edge_address("e.0") == 2);
  CHECK(tree_index_of_edge_address("e.1") == 3);
  CHECK(tree_index_of_edge_address("e.2") == 3);
  CHECK(tree_index_of_edge_address("e.3") == 2);
  CHECK(tree_index_of_edge_address("e.0.1") == 5);
  CHECK_THROWS_AS(tree_index_of_edge_address("x"), InvalidInput);
}

TEST_CASE("depth-1 construction is the isometric square") {
  StegallEmbedding se = stegall_diamond_embedding(dyadic_l1_tree(1), diamond(1));
  CHECK(se.embedding.at("top") == Vec{Rational(0), Rational(0)});
  CHECK(se.embedding.at("bottom") == Vec{Rational(1), Rational(1)});
  CHECK(se.embedding.at("e:a") == Vec{Rational(1), Rational(0)});
  CHECK(se.embedding.at("e:b") == Vec{Rational(0), Rational(1)});

  DiamondGraph d1 = diamond(1);
  FiniteMetricSpace space = shortest_path_metric(*d1.graph);
  DistortionResult r = distortion(se.embedding, space);
  CHECK(r.lower == 1);
  CHECK(r.upper == 1);
  CHECK(r.distortion == 1);
}

TEST_CASE("depth-3 construction is 1-Lipschitz with lower constant >= 1/2") {
  DiamondGraph d3 = diamond(3);
  StegallEmbedding se = stegall_diamond_embedding(dyadic_l1_tree(3), d3);
  CHECK(se.embedding.certified_upper == 1);
  CHECK(se.embedding.certified_lower == make_rational(1, 2));
  FiniteMetricSpace space = shortest_path_metric(*d3.graph);
  DistortionResult r = distortion(se.embedding, space);
  CHECK(r.upper == 1);
  CHECK(r.lower >= make_rational(1, 2));
  CHECK(r.distortion <= 2);
}

TEST_CASE("an eps >= 1/3 system is refused") {
  SeparatedTreeSystem sys = dyadic_l1_tree(2);
  sys.epsilon = make_rational(1, 2);
  CHECK_THROWS_WITH_AS(stegall_diamond_embedding(sys, diamond(2)),
                       doctest::Contains("degenerates"), InvalidInput);
}

TEST_CASE("a deeper diamond than the tree is refused") {
  CHECK_THROWS_AS(stegall_diamond_embedding(dyadic_l1_tree(2), diamond(3)), InvalidInput);
}

TEST_CASE("every edge corresponds to its tree vector") {
  DiamondGraph d = diamond(3);
  SeparatedTreeSystem sys = dyadic_l1_tree(3);
  StegallEmbedding se = stegall_diamond_embedding(sys, d);
  for (const Edge& e : d.graph->edges()) {
    int j = se.edge_tree_index.at(e.address);
    int level = static_cast<int>(std::count(e.address.begin(), e.address.end(), '.'));
    Vec expected = scale(sys.tree.vectors[static_cast<size_t>(j)], pow2(-level));
    Vec diff = sub(se.embedding.at(d.graph->vertex_id(e.v)),
                   se.embedding.at(d.graph->vertex_id(e.u)));
    CHECK(diff == expected);
  }
}

TEST_CASE("tail statements hold structurally on sampled pairs") {
  // For each sampled pair, the difference of images decomposes over the tail
  // of the child vector named by the case analysis, with nonnegative
  // coefficients summing to the graph distance.
  DiamondGraph d = diamond(4);
  StegallEmbedding se = stegall_diamond_embedding(dyadic_l1_tree(4), d);
  GraphMetric m(d.graph);
  FiniteMetricSpace space = shortest_path_metric(*d.graph);

  // Combinations expand through the averaging identity down to leaf level,
  // where the nonnegative tail representation becomes visible.
  int leaf_floor = 1 << 4;
  auto expand = [&](std::map<int, Rational> combo) {
    while (!combo.empty() && combo.begin()->first < leaf_floor) {
      auto [t, coeff] = *combo.begin();
      combo.erase(combo.begin());
      combo[2 * t] += coeff / 2;
      combo[2 * t + 1] += coeff / 2;
    }
    return combo;
  };
  auto cone_check = [&](int from, int to, int tail_root, const Rational& expected_sum) {
    // f(to) - f(from) = sum of coeff_t y_t with coeff >= 0, t in tail(root).
    std::map<int, Rational> diff = expand(se.combination[static_cast<size_t>(to)]);
    for (const auto& [t, c] : expand(se.combination[static_cast<size_t>(from)])) diff[t] -= c;
    Rational sum(0);
    for (const auto& [t, c] : diff) {
      if (c == 0) continue;
      CHECK(c > 0);
      CHECK(in_tail(t, tail_root));
      sum += c;
    }
    CHECK(sum == expected_sum);
  };

  Rng rng(777);
  int checked = 0;
  while (checked < 200) {
    int w = static_cast<int>(rng.below(static_cast<std::uint64_t>(d.graph->vertex_count())));
    int z = static_cast<int>(rng.below(static_cast<std::uint64_t>(d.graph->vertex_count())));
    if (w == z) continue;
    SubdiamondQuery q = smallest_subdiamond(d, m, w, z);
    if (q.quad_index < 0) continue;
    const Quadrilateral& quad = d.quadrilaterals[static_cast<size_t>(q.quad_index)];
    const std::string& A = q.subdiamond.edge_address;
    int j = se.edge_tree_index.at(A);
    bool wa = vertex_in_subdiamond(d, A + ".0", w);
    bool wav = vertex_in_subdiamond(d, A + ".1", w);
    bool za = vertex_in_subdiamond(d, A + ".0", z);
    bool zav = vertex_in_subdiamond(d, A + ".1", z);

    if (q.side == SubdiamondSide::SameSide) {
      // Normalize so w is in D(u,a) and z in D(a,v); skip the b-side mirror.
      int ww = w, zz = z;
      bool wu = wa, zu = za, wv = wav, zv = zav;
      if (!(wu || wv)) continue;  // pair lives on the b-side; mirror case
      if (!wu) {
        std::swap(ww, zz);
        std::swap(wu, zu);
        std::swap(wv, zv);
      }
      if (!(wu && zv)) continue;  // poles or mixed layout
      cone_check(ww, quad.a, 2 * j, space.distance(quad.a, ww));   // (a)
      cone_check(quad.a, zz, 2 * j + 1, space.distance(zz, quad.a));  // (b)
      ++checked;
    } else if (q.side == SubdiamondSide::DifferentSidesA) {
      // Canonical subcase: both at least as close to u, w on the a-side.
      bool w_up = space.distance(w, quad.u) <= space.distance(w, quad.v);
      bool z_up = space.distance(z, quad.u) <= space.distance(z, quad.v);
      if (!(w_up && z_up)) continue;
      int ww = w, zz = z;
      if (!vertex_in_subdiamond(d, A + ".0", ww)) std::swap(ww, zz);
      if (!(vertex_in_subdiamond(d, A + ".0", ww) && vertex_in_subdiamond(d, A + ".2", zz)))
        continue;
      cone_check(quad.u, ww, 2 * j, space.distance(ww, quad.u));       // (c)
      cone_check(quad.u, zz, 2 * j + 1, space.distance(zz, quad.u));   // (d)
      ++checked;
    } else {
      // Case B: w in D(u,a), z in D(b,v) (or swapped): both differences live
      // in the tail of the shared child index.
      int ww = w, zz = z;
      if (!vertex_in_subdiamond(d, A + ".0", ww)) std::swap(ww, zz);
      if (!(vertex_in_subdiamond(d, A + ".0", ww) && vertex_in_subdiamond(d, A + ".3", zz)))
        continue;
      cone_check(quad.u, ww, 2 * j, space.distance(ww, quad.u));
      cone_check(quad.b, zz, 2 * j, space.distance(zz, quad.b));  // (e)
      ++checked;
    }
  }
  CHECK(checked == 200);
}

TEST_CASE("from-tree partial embedding certifies the active pairs") {
  DiamondGraph d2 = diamond(2);
  PartialEmbeddingResult r = tree_to_diamond_partial_embedding(dyadic_l1_tree(2).tree, d2);
  CHECK(r.shift_r == 0);  // unit norms need no shift
  CHECK(r.lambda >= make_rational(1, 2));
  CHECK(r.embedding.certified_pairs == "active");

  // Exhaustive re-check of the certificate over the active pairs.
  FiniteMetricSpace space = shortest_path_metric(*d2.graph);
  for (const VertexPair& p : r.active) {
    Vec diff = sub(r.embedding.at(d2.graph->vertex_id(p.first)),
                   r.embedding.at(d2.graph->vertex_id(p.second)));
    Rational ratio = norm_exact(diff, r.embedding.norm) / space.distance(p.first, p.second);
    CHECK(ratio >= r.lambda);
    CHECK(ratio <= r.lambda * r.upper_c);
  }
}

TEST_CASE("collinear children are rejected") {
  DeltaTree tree;
  tree.depth = 1;
  tree.norm = Norm::linf();
  Vec x{Rational(1), Rational(1)};
  tree.vectors = {Vec{}, x, x, x};
  CHECK_THROWS_AS(tree_to_diamond_partial_embedding(tree, diamond(1)), InvalidInput);
}

TEST_CASE("random rational trees in linf^4 give certified partial embeddings") {
  Rng rng(20240812);
  int built = 0;
  while (built < 10) {
    DeltaTree tree;
    tree.depth = 2;
    tree.norm = Norm::linf();
    tree.vectors.assign(8, Vec());
    // Random leaves; parents by averaging.
    for (int j = 4; j <= 7; ++j) {
      Vec v;
      for (int t = 0; t < 4; ++t) v.push_back(rng.rational(8, 4));
      tree.vectors[static_cast<size_t>(j)] = std::move(v);
    }
    for (int j = 3; j >= 1; --j)
      tree.vectors[static_cast<size_t>(j)] =
          scale(add(tree.vectors[static_cast<size_t>(2 * j)],
                    tree.vectors[static_cast<size_t>(2 * j + 1)]),
                make_rational(1, 2));
    DeltaTreeReport rep = verify_delta_tree(tree);
    if (!rep.valid || rep.delta == 0) continue;
    ++built;
    DiamondGraph d2 = diamond(2);
    PartialEmbeddingResult r = tree_to_diamond_partial_embedding(tree, d2);
    CHECK(r.lambda > 0);
    CHECK(r.upper_c >= 1);
    FiniteMetricSpace space = shortest_path_metric(*d2.graph);
    for (const VertexPair& p : r.active) {
      Vec diff = sub(r.embedding.at(d2.graph->vertex_id(p.first)),
                     r.embedding.at(d2.graph->vertex_id(p.second)));
      Rational ratio = norm_exact(diff, tree.norm) / space.distance(p.first, p.second);
      CHECK(ratio >= r.lambda);
      CHECK(ratio <= r.lambda * r.upper_c);
    }
  }
}

TEST_CASE("distortion basics") {
  StegallEmbedding se = stegall_diamond_embedding(dyadic_l1_tree(1), diamond(1));
  FiniteMetricSpace space = shortest_path_metric(*diamond(1).graph);
  DistortionResult r = distortion(se.embedding, space);
  CHECK(r.lower == 1);
  CHECK(r.upper == 1);
  CHECK(r.distortion == 1);

  // Scaling the embedding scales the constants but not the distortion.
  Embedding scaled = se.embedding;
  for (auto& [key, v] : scaled.points) v = scale(v, Rational(3));
  DistortionResult rs = distortion(scaled, space);
  CHECK(rs.lower == 3);
  CHECK(rs.upper == 3);
  CHECK(rs.distortion == 1);

  std::vector<VertexPair> none;
  CHECK_THROWS_AS(distortion(se.embedding, space, &none), InvalidInput);
}
