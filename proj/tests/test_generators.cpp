#include <doctest.h>

#include <set>

#include "metricgeo/diamond.hpp"
#include "metricgeo/errors.hpp"
#include "metricgeo/inclusion.hpp"
#include "metricgeo/laakso.hpp"

using namespace metricgeo;

namespace {

mpz_class diamond_vertex_formula(int n) {
  mpz_class p = 1;
  p <<= 2 * n;  // 4^n
  return 2 + 2 * (p - 1) / 3;
}

}  // namespace

TEST_CASE("diamond level 0 is an edge of length 1") {
  DiamondGraph d = diamond(0);
  CHECK(d.graph->vertex_count() == 2);
  CHECK(d.graph->edge_count() == 1);
  CHECK(d.graph->edge(0).length == 1);
  CHECK(d.quadrilaterals.empty());
}

TEST_CASE("diamond level 1 and 2 counts") {
  DiamondGraph d1 = diamond(1);
  CHECK(d1.graph->vertex_count() == 4);
  CHECK(d1.graph->edge_count() == 4);
  for (const Edge& e : d1.graph->edges()) CHECK(e.length == make_rational(1, 2));

  DiamondGraph d2 = diamond(2);
  CHECK(d2.graph->vertex_count() == 12);
  CHECK(d2.graph->edge_count() == 16);
}

TEST_CASE("diamond counts follow the closed formulas up to level 6") {
  for (int n = 0; n <= 6; ++n) {
    DiamondGraph d = diamond(n);
    CHECK(mpz_class(d.graph->vertex_count()) == diamond_vertex_formula(n));
    CHECK(mpz_class(d.graph->edge_count()) == mpz_class(1) << (2 * n));
  }
}

TEST_CASE("diamond endpoints stay at distance 1 and quadrilaterals have the stated sides") {
  for (int n = 0; n <= 4; ++n) {
    DiamondGraph d = diamond(n);
    FiniteMetricSpace space = shortest_path_metric(*d.graph);
    CHECK(space.distance(d.top, d.bottom) == 1);
    for (const Quadrilateral& q : d.quadrilaterals) {
      Rational side = pow2(-q.level);
      CHECK(space.distance(q.u, q.a) == side);
      CHECK(space.distance(q.a, q.v) == side);
      CHECK(space.distance(q.u, q.b) == side);
      CHECK(space.distance(q.b, q.v) == side);
    }
  }
}

TEST_CASE("diamond generation respects the vertex cap") {
  GeneratorLimits limits;
  limits.max_vertices = 100;
  CHECK_THROWS_AS(diamond(5, limits), ResourceLimit);
}

TEST_CASE("active pairs of small diamonds") {
  DiamondGraph d0 = diamond(0);
  auto pairs0 = active_pairs(d0);
  REQUIRE(pairs0.size() == 1);
  CHECK(pairs0[0] == VertexPair{d0.top, d0.bottom});
  CHECK(active_pairs(d0, false).empty());

  DiamondGraph d1 = diamond(1);
  CHECK(active_pairs(d1).size() == 6);

  // Independent reconstruction: walk the recursive definition with pair
  // arithmetic only. Level-1 contributes 6 pairs, each level-2 quadrilateral
  // another 6, and the 4 level-2 pole pairs duplicate level-1 sides:
  // 6 + 24 - 4 = 26 (the root pair duplicates the level-1 pole pair).
  DiamondGraph d2 = diamond(2);
  auto pairs2 = active_pairs(d2);
  std::set<std::pair<std::string, std::string>> expected;
  auto put = [&](const std::string& a, const std::string& b) {
    expected.emplace(std::min(a, b), std::max(a, b));
  };
  put("top", "bottom");
  auto quad = [&](const std::string& u, const std::string& a, const std::string& v,
                  const std::string& b) {
    put(u, a), put(u, v), put(u, b), put(a, v), put(a, b), put(v, b);
  };
  quad("top", "e:a", "bottom", "e:b");
  quad("top", "e.0:a", "e:a", "e.0:b");
  quad("e:a", "e.1:a", "bottom", "e.1:b");
  quad("top", "e.2:a", "e:b", "e.2:b");
  quad("e:b", "e.3:a", "bottom", "e.3:b");
  CHECK(expected.size() == 26);
  CHECK(pairs2.size() == expected.size());
  for (const VertexPair& p : pairs2) {
    std::string a = d2.graph->vertex_id(p.first);
    std::string b = d2.graph->vertex_id(p.second);
    CHECK(expected.count({std::min(a, b), std::max(a, b)}) == 1);
  }
}

TEST_CASE("active pairs sit at side or diagonal distance") {
  for (int n = 1; n <= 3; ++n) {
    DiamondGraph d = diamond(n);
    FiniteMetricSpace space = shortest_path_metric(*d.graph);
    for (const Quadrilateral& q : d.quadrilaterals) {
      Rational side = pow2(-q.level);
      for (VertexPair p : std::vector<VertexPair>{{q.u, q.a}, {q.a, q.v}, {q.u, q.b},
                                                  {q.b, q.v}, {q.u, q.v}, {q.a, q.b}}) {
        Rational dist = space.distance(p.first, p.second);
        CHECK((dist == side || dist == 2 * side));
      }
    }
  }
}

TEST_CASE("smallest subdiamond cases") {
  DiamondGraph d1 = diamond(1);
  GraphMetric m1(d1.graph);
  // Adjacent vertices: the whole diamond, same side.
  auto q = smallest_subdiamond(d1, m1, d1.top, d1.graph->require_vertex("e:a"));
  CHECK(q.subdiamond.edge_address == "e");
  CHECK(q.side == SubdiamondSide::SameSide);

  // The two corners of one quadrilateral sit on different sides.
  auto corners = smallest_subdiamond(d1, m1, d1.graph->require_vertex("e:a"),
                                     d1.graph->require_vertex("e:b"));
  CHECK(corners.subdiamond.edge_address == "e");
  CHECK(corners.side != SubdiamondSide::SameSide);

  DiamondGraph d2 = diamond(2);
  GraphMetric m2(d2.graph);
  // w in D(u,a), z in D(b,v), w closer to u and z closer to v: case B.
  auto b_case = smallest_subdiamond(d2, m2, d2.graph->require_vertex("e.0:a"),
                                    d2.graph->require_vertex("e.3:b"));
  CHECK(b_case.subdiamond.edge_address == "e");
  CHECK(b_case.side == SubdiamondSide::DifferentSidesB);

  // Pole pair of a level-1 edge: descends one level, same side.
  auto poles = smallest_subdiamond(d2, m2, d2.top, d2.graph->require_vertex("e:a"));
  CHECK(poles.subdiamond.edge_address == "e.0");
  CHECK(poles.side == SubdiamondSide::SameSide);

  CHECK_THROWS_AS(smallest_subdiamond(d2, m2, d2.top, d2.top), InvalidInput);
}

TEST_CASE("laakso level counts") {
  LaaksoGraph x0 = laakso2(0);
  CHECK(x0.graph->vertex_count() == 2);
  CHECK(x0.graph->edge_count() == 1);
  CHECK(x0.graph->edge(0).length == 1);

  LaaksoGraph x1 = laakso2(1);
  CHECK(x1.graph->vertex_count() == 6);
  CHECK(x1.graph->edge_count() == 6);
  for (const Edge& e : x1.graph->edges()) CHECK(e.length == make_rational(1, 3));

  LaaksoGraph x2 = laakso2(2);
  CHECK(x2.graph->vertex_count() == 24);
  CHECK(x2.graph->edge_count() == 36);
  for (const Edge& e : x2.graph->edges()) CHECK(e.length == make_rational(1, 9));
}

TEST_CASE("laakso recurrences hold up to level 4") {
  long v = 2, e = 1;
  for (int i = 1; i <= 4; ++i) {
    long nv = 2 * v + 2 * e;
    long ne = 6 * e;
    LaaksoGraph x = laakso2(i);
    CHECK(x.graph->vertex_count() == nv);
    CHECK(x.graph->edge_count() == ne);
    FiniteMetricSpace space = shortest_path_metric(*x.graph);
    CHECK(space.distance(x.u, x.v) == 1);
    v = nv;
    e = ne;
  }
}

TEST_CASE("pasted vertices are shared, others have distinct twins") {
  for (int i = 1; i <= 3; ++i) {
    LaaksoGraph x = laakso2(i);
    FiniteMetricSpace space = shortest_path_metric(*x.graph);
    const PastingRecord& rec = x.pastings.back();
    for (int p : rec.pasted) CHECK(x.graph->vertex_id(p) == x.graph->vertex_id(p));
    for (const auto& [orig, twin] : rec.vertex_twin) {
      int a = x.graph->require_vertex(orig);
      int b = x.graph->require_vertex(twin);
      CHECK(a != b);
      CHECK(space.distance(a, b) > 0);
    }
  }
}

TEST_CASE("laakso point location and canonical keys") {
  LaaksoGraph x2 = laakso2(2);
  // 1/6 along the unit edge is interior at every level; canonical key lifts
  // back to the root edge.
  GraphPoint p = locate_on_edge(x2, "e", make_rational(1, 6));
  CHECK(!p.is_vertex());
  CHECK(point_key(x2, p) == "e@1/6");
  // 1/3 along the root edge is the first trisection vertex.
  GraphPoint v = locate_on_edge(x2, "e", make_rational(1, 3));
  CHECK(v.is_vertex());
  CHECK(x2.graph->vertex_id(v.vertex) == "e:1");
  CHECK(point_from_key(x2, "e@1/6") == p);

  CHECK(min_level_of_key("u") == 0);
  CHECK(min_level_of_key("e:1") == 1);
  CHECK(min_level_of_key("e.0:2") == 2);
  CHECK(min_level_of_key("u~1") == 1);
  CHECK(min_level_of_key("u~1~2") == 2);
  CHECK(min_level_of_key("e@1/6") == 0);
  CHECK(min_level_of_key("e.1@1/27") == 1);
}

TEST_CASE("twin points mirror across the top pasting") {
  LaaksoGraph x1 = laakso2(1);
  GraphMetric m(x1.graph);
  int mid_edge = x1.graph->edge_index("e.1");
  REQUIRE(mid_edge >= 0);
  GraphPoint z = GraphPoint::on_edge(*x1.graph, mid_edge, make_rational(1, 6));
  GraphPoint zt = twin_point(x1, z);
  CHECK(!(z == zt));
  CHECK(x1.graph->edge(zt.edge).address == "e.1~1");
  // Twins sit symmetrically: same distance to both pasted cut vertices.
  int a = x1.graph->require_vertex("e:1");
  CHECK(m.distance(GraphPoint::at_vertex(a), z) == m.distance(GraphPoint::at_vertex(a), zt));
  // Pasted vertices are their own twin.
  CHECK(twin_point(x1, GraphPoint::at_vertex(a)) == GraphPoint::at_vertex(a));
  // Duplicated vertices swap with their copies.
  GraphPoint u_twin = twin_point(x1, GraphPoint::at_vertex(x1.u));
  CHECK(x1.graph->vertex_id(u_twin.vertex) == "u~1");
}

TEST_CASE("inclusions into the next level are isometric") {
  for (int n = 1; n <= 3; ++n) {
    InclusionReport r = inclusion_isometry_check(diamond(n - 1), diamond(n));
    CHECK(r.isometric);
  }
  for (int i = 1; i <= 2; ++i) {
    InclusionReport r = inclusion_isometry_check(laakso2(i - 1), laakso2(i));
    CHECK(r.isometric);
  }
  DiamondGraph d2 = diamond(2);
  CHECK(inclusion_isometry_check(d2, d2).isometric);
  CHECK_THROWS_AS(inclusion_isometry_check(diamond(0), diamond(2)), InvalidInput);
}

TEST_CASE("vertex point distances match the all-pairs table on generated graphs") {
  DiamondGraph d = diamond(2);
  FiniteMetricSpace table = shortest_path_metric(*d.graph);
  GraphMetric m(d.graph);
  for (int i = 0; i < d.graph->vertex_count(); ++i)
    for (int j = 0; j < d.graph->vertex_count(); ++j)
      CHECK(m.distance(GraphPoint::at_vertex(i), GraphPoint::at_vertex(j)) ==
            table.distance(i, j));

  LaaksoGraph x = laakso2(2);
  FiniteMetricSpace lt = shortest_path_metric(*x.graph);
  GraphMetric lm(x.graph);
  for (int i = 0; i < x.graph->vertex_count(); i += 3)
    for (int j = 0; j < x.graph->vertex_count(); j += 3)
      CHECK(lm.distance(GraphPoint::at_vertex(i), GraphPoint::at_vertex(j)) ==
            lt.distance(i, j));
}

TEST_CASE("generated metrics satisfy the exact metric axioms") {
  shortest_path_metric(*diamond(3).graph).validate();
  shortest_path_metric(*laakso2(2).graph).validate();
}
