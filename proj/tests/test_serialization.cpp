#include <doctest.h>

#include <json.hpp>

#include "metricgeo/delta_tree.hpp"
#include "metricgeo/errors.hpp"
#include "metricgeo/inclusion.hpp"
#include "metricgeo/serialization.hpp"

using namespace metricgeo;

TEST_CASE("metric graph round trip keeps exact lengths") {
  DiamondGraph d = diamond(2);
  std::string text = to_json(*d.graph);
  auto parsed = metric_graph_from_json(text);
  CHECK(parsed->vertex_count() == d.graph->vertex_count());
  CHECK(parsed->edge_count() == d.graph->edge_count());
  for (int e = 0; e < d.graph->edge_count(); ++e)
    CHECK(parsed->edge(e).length == d.graph->edge(e).length);
  CHECK(inclusion_isometry_check(*d.graph, *parsed).isometric);
}

TEST_CASE("rationals survive as num/den including big values") {
  MetricGraph g;
  g.add_vertex("x");
  g.add_vertex("y");
  // A denominator beyond 64 bits forces the string form.
  Rational huge = make_rational(mpz_class(1), mpz_class("340282366920938463463374607431768211457"));
  g.add_edge(0, 1, huge, "xy");
  auto parsed = metric_graph_from_json(to_json(g));
  CHECK(parsed->edge(0).length == huge);
  // No floats anywhere in the schema.
  nlohmann::json j = nlohmann::json::parse(to_json(g));
  CHECK(j["edges"][0]["len"].contains("num"));
  CHECK(j["edges"][0]["len"].contains("den"));
}

TEST_CASE("diamond space files reload with their records") {
  DiamondGraph d = diamond(2);
  SpaceFile file = space_from_json(to_json(d));
  REQUIRE(file.family == "diamond");
  REQUIRE(file.diamond.has_value());
  CHECK(file.diamond->level == 2);
  CHECK(file.diamond->quadrilaterals.size() == d.quadrilaterals.size());
  CHECK(active_pairs(*file.diamond).size() == active_pairs(d).size());
  GraphMetric m(file.diamond->graph);
  CHECK(smallest_subdiamond(*file.diamond, m,
                            file.diamond->graph->require_vertex("e.0:a"),
                            file.diamond->graph->require_vertex("e.3:b"))
            .side == SubdiamondSide::DifferentSidesB);
}

TEST_CASE("laakso space files reload with pastings") {
  LaaksoGraph x = laakso2(2);
  SpaceFile file = space_from_json(to_json(x));
  REQUIRE(file.family == "laakso2");
  REQUIRE(file.laakso.has_value());
  CHECK(file.laakso->pastings.size() == 2);
  GraphPoint p = point_from_key_in_space(file, "e@1/6");
  CHECK_FALSE(p.is_vertex());
  CHECK(point_key(*file.laakso, p) == "e@1/6");
}

TEST_CASE("metric space json mirrors the table") {
  FiniteMetricSpace space = shortest_path_metric(*diamond(1).graph);
  FiniteMetricSpace parsed = metric_space_from_json(to_json(space));
  REQUIRE(parsed.size() == space.size());
  for (int i = 0; i < space.size(); ++i)
    for (int j = 0; j < space.size(); ++j)
      CHECK(parsed.distance(parsed.index(space.id(i)), parsed.index(space.id(j))) ==
            space.distance(i, j));
}

TEST_CASE("embedding round trip") {
  StegallEmbedding se = stegall_diamond_embedding(dyadic_l1_tree(2), diamond(2));
  std::string text = to_json(se.embedding, "d2.json");
  Embedding parsed = embedding_from_json(text);
  CHECK(parsed.norm.kind == NormKind::WeightedL1);
  CHECK(parsed.certified_lower == se.embedding.certified_lower);
  CHECK(parsed.certified_upper == se.embedding.certified_upper);
  CHECK(parsed.certified_pairs == "all");
  for (const auto& [key, v] : se.embedding.points) CHECK(parsed.at(key) == v);
}

TEST_CASE("delta tree round trip") {
  SeparatedTreeSystem sys = dyadic_l1_tree(2);
  DeltaTree parsed = delta_tree_from_json(to_json(sys.tree));
  CHECK(parsed.depth == 2);
  DeltaTreeReport r = verify_delta_tree(parsed);
  CHECK(r.valid);
  CHECK(r.delta == 1);
}

TEST_CASE("iso witness file round trip") {
  IsoWitnessFile f;
  f.base = {"top", "bottom"};
  f.ext = {"top", "e:a", "bottom"};
  f.ext_tilde = {"top", "e:b", "bottom"};
  f.common = {0, 2};
  f.distinct = {1};
  f.C = make_rational(3, 2);
  IsoWitnessFile parsed = iso_witness_from_json(iso_witness_to_json(f));
  CHECK(parsed.base == f.base);
  CHECK(parsed.ext == f.ext);
  CHECK(parsed.ext_tilde == f.ext_tilde);
  CHECK(parsed.common == f.common);
  CHECK(parsed.distinct == f.distinct);
  CHECK(parsed.C == f.C);
}

TEST_CASE("malformed input is rejected with InvalidInput") {
  CHECK_THROWS_AS(metric_graph_from_json("not json"), InvalidInput);
  CHECK_THROWS_AS(metric_graph_from_json("{}"), InvalidInput);
  CHECK_THROWS_AS(embedding_from_json("{\"norm\":\"nope\",\"points\":{}}"), InvalidInput);
  CHECK_THROWS_AS(read_file("/nonexistent/path.json"), InvalidInput);
}

TEST_CASE("trace csv lists every interval with exact endpoints") {
  StegallEmbedding se = stegall_diamond_embedding(dyadic_l1_tree(2), diamond(2));
  auto family = std::make_shared<DiamondFamily>();
  MartingaleTrace trace = extract_martingale(se.embedding, diamond_oracle(family), "top",
                                             "bottom", 2, ExtractionMode::Geodesic,
                                             Rational(1));
  std::string csv = trace_to_csv(trace);
  // Header + one line per interval of M_0, M_1, M_2 (1 + 1 + 2).
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
  CHECK(csv.find("step,interval_start_num") == 0);
  TraceCheck check = verify_martingale_trace(trace);
  std::string cert = trace_certificate_json(trace, check);
  nlohmann::json j = nlohmann::json::parse(cert);
  CHECK(j["verification"]["pass"].get<bool>());
}
