#include "metricgeo/serialization.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "metricgeo/errors.hpp"

namespace metricgeo {

using nlohmann::json;

namespace {

json rational_to_json(const Rational& r) {
  json out;
  mpz_class num = r.get_num(), den = r.get_den();
  if (num.fits_slong_p())
    out["num"] = num.get_si();
  else
    out["num"] = num.get_str();
  if (den.fits_slong_p())
    out["den"] = den.get_si();
  else
    out["den"] = den.get_str();
  return out;
}

mpz_class integer_from_json(const json& j, const char* what) {
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return mpz_class(j.get<std::string>(), 10);
    } catch (const std::invalid_argument&) {
      throw InvalidInput(std::string("malformed integer in ") + what);
    }
  }
  throw InvalidInput(std::string("expected an integer for ") + what);
}

Rational rational_from_json(const json& j, const char* what = "rational") {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_number_float()) return rational_from_double(j.get<double>());
  if (j.is_object() && j.contains("num") && j.contains("den"))
    return make_rational(integer_from_json(j.at("num"), what),
                         integer_from_json(j.at("den"), what));
  throw InvalidInput(std::string("expected {num, den} for ") + what);
}

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (const Rational& x : v) out.push_back(rational_to_json(x));
  return out;
}

Vec vec_from_json(const json& j, const char* what = "vector") {
  if (!j.is_array()) throw InvalidInput(std::string("expected an array for ") + what);
  Vec v;
  for (const json& x : j) v.push_back(rational_from_json(x, what));
  return v;
}

json graph_to_json(const MetricGraph& g) {
  json out;
  out["vertices"] = json::array();
  for (int i = 0; i < g.vertex_count(); ++i) out["vertices"].push_back(g.vertex_id(i));
  out["edges"] = json::array();
  for (const Edge& e : g.edges()) {
    json je;
    je["u"] = g.vertex_id(e.u);
    je["v"] = g.vertex_id(e.v);
    je["len"] = rational_to_json(e.length);
    if (!e.address.empty()) je["address"] = e.address;
    out["edges"].push_back(std::move(je));
  }
  return out;
}

json parse(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InvalidInput(std::string("malformed JSON in ") + what);
  return j;
}

std::shared_ptr<MetricGraph> graph_from_json_value(const json& j) {
  if (!j.contains("vertices") || !j.contains("edges"))
    throw InvalidInput("graph JSON needs vertices and edges");
  auto g = std::make_shared<MetricGraph>();
  for (const json& v : j.at("vertices")) g->add_vertex(v.get<std::string>());
  for (const json& e : j.at("edges")) {
    int u = g->require_vertex(e.at("u").get<std::string>());
    int v = g->require_vertex(e.at("v").get<std::string>());
    std::string address = e.contains("address") ? e.at("address").get<std::string>() : "";
    g->add_edge(u, v, rational_from_json(e.at("len"), "edge length"), address);
  }
  return g;
}

json norm_to_json(const Norm& n) {
  json out;
  out["norm"] = n.name();
  if (n.kind == NormKind::WeightedL1) out["weights"] = vec_to_json(n.weights);
  return out;
}

Norm norm_from_json_fields(const json& j) {
  std::string name = j.at("norm").get<std::string>();
  Vec weights;
  if (j.contains("weights")) weights = vec_from_json(j.at("weights"), "weights");
  return norm_from_name(name, std::move(weights));
}

}  // namespace

std::string to_json(const MetricGraph& g) { return graph_to_json(g).dump(2); }

std::shared_ptr<MetricGraph> metric_graph_from_json(const std::string& text) {
  return graph_from_json_value(parse(text, "metric graph"));
}

std::string to_json(const DiamondGraph& d, bool active_root_pair) {
  json out = graph_to_json(*d.graph);
  out["family"] = "diamond";
  out["level"] = d.level;
  out["top"] = d.graph->vertex_id(d.top);
  out["bottom"] = d.graph->vertex_id(d.bottom);
  out["quadrilaterals"] = json::array();
  for (const Quadrilateral& q : d.quadrilaterals) {
    json jq;
    jq["level"] = q.level;
    jq["edge"] = q.edge_address;
    jq["u"] = d.graph->vertex_id(q.u);
    jq["a"] = d.graph->vertex_id(q.a);
    jq["v"] = d.graph->vertex_id(q.v);
    jq["b"] = d.graph->vertex_id(q.b);
    out["quadrilaterals"].push_back(std::move(jq));
  }
  out["active_pairs"] = json::array();
  for (const VertexPair& p : active_pairs(d, active_root_pair))
    out["active_pairs"].push_back(
        json::array({d.graph->vertex_id(p.first), d.graph->vertex_id(p.second)}));
  return out.dump(2);
}

std::string to_json(const LaaksoGraph& g) {
  json out = graph_to_json(*g.graph);
  out["family"] = "laakso2";
  out["level"] = g.level;
  out["u"] = g.graph->vertex_id(g.u);
  out["v"] = g.graph->vertex_id(g.v);
  out["pastings"] = json::array();
  for (const PastingRecord& rec : g.pastings) {
    json jr;
    jr["level"] = rec.level;
    jr["pasted"] = json::array();
    for (int v : rec.pasted) jr["pasted"].push_back(g.graph->vertex_id(v));
    jr["vertex_twins"] = json::object();
    for (const auto& [a, b] : rec.vertex_twin) jr["vertex_twins"][a] = b;
    jr["edge_twins"] = json::object();
    for (const auto& [a, b] : rec.edge_twin) jr["edge_twins"][a] = b;
    out["pastings"].push_back(std::move(jr));
  }
  return out.dump(2);
}

std::string to_json(const FiniteMetricSpace& space) {
  json out;
  out["points"] = json::array();
  for (int i = 0; i < space.size(); ++i) out["points"].push_back(space.id(i));
  out["distances"] = json::array();
  for (int i = 0; i < space.size(); ++i)
    for (int j = i + 1; j < space.size(); ++j) {
      json jd;
      jd["x"] = space.id(i);
      jd["y"] = space.id(j);
      jd["d"] = rational_to_json(space.distance(i, j));
      out["distances"].push_back(std::move(jd));
    }
  return out.dump(2);
}

FiniteMetricSpace metric_space_from_json(const std::string& text) {
  json j = parse(text, "metric space");
  std::vector<std::string> ids;
  for (const json& p : j.at("points")) ids.push_back(p.get<std::string>());
  size_t n = ids.size();
  std::vector<Rational> table(n * n, Rational(0));
  FiniteMetricSpace space(ids, table);
  for (const json& d : j.at("distances")) {
    int x = space.index(d.at("x").get<std::string>());
    int y = space.index(d.at("y").get<std::string>());
    if (x < 0 || y < 0) throw InvalidInput("distance entry names an unknown point");
    space.set_distance(x, y, rational_from_json(d.at("d"), "distance"));
  }
  return space;
}

std::string to_json(const Embedding& f, const std::string& space_ref) {
  json out;
  if (!space_ref.empty()) out["space"] = space_ref;
  out.update(norm_to_json(f.norm));
  json pts = json::object();
  for (const auto& [key, v] : f.points) pts[key] = vec_to_json(v);
  out["points"] = std::move(pts);
  json cert;
  cert["lower"] = rational_to_json(f.certified_lower);
  cert["upper"] = rational_to_json(f.certified_upper);
  cert["pairs"] = f.certified_pairs;
  out["certified"] = std::move(cert);
  return out.dump(2);
}

Embedding embedding_from_json(const std::string& text) {
  json j = parse(text, "embedding");
  Embedding f;
  f.norm = norm_from_json_fields(j);
  for (const auto& [key, v] : j.at("points").items()) {
    Vec vec = vec_from_json(v, "embedding point");
    f.dimension = static_cast<int>(vec.size());
    f.points.emplace(key, std::move(vec));
  }
  if (j.contains("certified")) {
    f.certified_lower = rational_from_json(j.at("certified").at("lower"), "lower constant");
    f.certified_upper = rational_from_json(j.at("certified").at("upper"), "upper constant");
    f.certified_pairs = j.at("certified").at("pairs").get<std::string>();
  }
  return f;
}

SpaceFile space_from_json(const std::string& text) {
  json j = parse(text, "space");
  SpaceFile out;
  auto graph = graph_from_json_value(j);
  out.family = j.contains("family") ? j.at("family").get<std::string>() : "";
  if (out.family == "diamond") {
    DiamondGraph d;
    d.level = j.at("level").get<int>();
    d.graph = graph;
    d.top = graph->require_vertex(j.at("top").get<std::string>());
    d.bottom = graph->require_vertex(j.at("bottom").get<std::string>());
    d.vertex_origin.assign(static_cast<size_t>(graph->vertex_count()), "");
    for (int i = 0; i < graph->vertex_count(); ++i) {
      const std::string& id = graph->vertex_id(i);
      size_t colon = id.rfind(':');
      if (colon != std::string::npos)
        d.vertex_origin[static_cast<size_t>(i)] = id.substr(0, colon);
    }
    d.edge_endpoints.emplace("e", std::make_pair(d.top, d.bottom));
    for (const json& q : j.at("quadrilaterals")) {
      Quadrilateral quad;
      quad.level = q.at("level").get<int>();
      quad.edge_address = q.at("edge").get<std::string>();
      quad.u = graph->require_vertex(q.at("u").get<std::string>());
      quad.a = graph->require_vertex(q.at("a").get<std::string>());
      quad.v = graph->require_vertex(q.at("v").get<std::string>());
      quad.b = graph->require_vertex(q.at("b").get<std::string>());
      d.quad_by_edge.emplace(quad.edge_address, static_cast<int>(d.quadrilaterals.size()));
      d.edge_endpoints[quad.edge_address + ".0"] = {quad.u, quad.a};
      d.edge_endpoints[quad.edge_address + ".1"] = {quad.a, quad.v};
      d.edge_endpoints[quad.edge_address + ".2"] = {quad.u, quad.b};
      d.edge_endpoints[quad.edge_address + ".3"] = {quad.b, quad.v};
      d.quadrilaterals.push_back(std::move(quad));
    }
    out.diamond = std::move(d);
  } else if (out.family == "laakso2") {
    LaaksoGraph g;
    g.level = j.at("level").get<int>();
    g.graph = graph;
    g.u = graph->require_vertex(j.at("u").get<std::string>());
    g.v = graph->require_vertex(j.at("v").get<std::string>());
    for (const json& r : j.at("pastings")) {
      PastingRecord rec;
      rec.level = r.at("level").get<int>();
      for (const json& p : r.at("pasted")) rec.pasted.push_back(graph->require_vertex(p.get<std::string>()));
      for (const auto& [a, b] : r.at("vertex_twins").items())
        rec.vertex_twin.emplace(a, b.get<std::string>());
      for (const auto& [a, b] : r.at("edge_twins").items())
        rec.edge_twin.emplace(a, b.get<std::string>());
      g.pastings.push_back(std::move(rec));
    }
    out.laakso = std::move(g);
  }
  out.graph = graph;
  return out;
}

GraphPoint point_from_key_in_space(const SpaceFile& space, const std::string& key) {
  if (space.laakso) return point_from_key(*space.laakso, key);
  size_t at = key.find('@');
  if (at == std::string::npos) return GraphPoint::at_vertex(space.graph->require_vertex(key));
  int e = space.graph->edge_index(key.substr(0, at));
  if (e < 0) throw InvalidInput("unknown edge address in point key: " + key);
  std::string off = key.substr(at + 1);
  size_t slash = off.find('/');
  Rational r = slash == std::string::npos
                   ? rational_from_strings(off, "1")
                   : rational_from_strings(off.substr(0, slash), off.substr(slash + 1));
  return GraphPoint::on_edge(*space.graph, e, r);
}

namespace {

json clauses_to_json(const WitnessReport& report) {
  json out;
  out["pass"] = report.pass;
  out["clauses"] = json::array();
  for (const ClauseResult& c : report.clauses) {
    json jc;
    jc["clause"] = c.clause;
    jc["pass"] = c.pass;
    if (!c.detail.empty()) jc["detail"] = c.detail;
    out["clauses"].push_back(std::move(jc));
  }
  out["width_sum"] = rational_to_json(report.width_sum);
  out["width_required"] = rational_to_json(report.width_required);
  return out;
}

}  // namespace

std::string report_to_json(const WitnessReport& report) { return clauses_to_json(report).dump(2); }

std::string witness_to_json(const ThickWitness& witness, const WitnessReport& report) {
  json out;
  out["kind"] = "thick";
  out["c"] = rational_to_json(witness.c);
  out["u0"] = witness.u0_key;
  out["v0"] = witness.v0_key;
  out["w"] = witness.w_keys;
  out["z"] = witness.z_keys;
  out["ztilde"] = witness.zt_keys;
  out["report"] = clauses_to_json(report);
  return out.dump(2);
}

IsoWitnessFile iso_witness_from_json(const std::string& text) {
  json j = parse(text, "iso witness");
  IsoWitnessFile out;
  for (const json& k : j.at("base")) out.base.push_back(k.get<std::string>());
  for (const json& k : j.at("ext")) out.ext.push_back(k.get<std::string>());
  for (const json& k : j.at("ext_tilde")) out.ext_tilde.push_back(k.get<std::string>());
  for (const json& k : j.at("common")) out.common.push_back(k.get<int>());
  for (const json& k : j.at("distinct")) out.distinct.push_back(k.get<int>());
  out.C = j.contains("C") ? rational_from_json(j.at("C"), "C") : Rational(1);
  return out;
}

std::string iso_witness_to_json(const IsoWitnessFile& file) {
  json out;
  out["base"] = file.base;
  out["ext"] = file.ext;
  out["ext_tilde"] = file.ext_tilde;
  out["common"] = file.common;
  out["distinct"] = file.distinct;
  out["C"] = rational_to_json(file.C);
  return out.dump(2);
}

std::string to_json(const DeltaTree& tree) {
  json out;
  out["depth"] = tree.depth;
  out.update(norm_to_json(tree.norm));
  out["vectors"] = json::array();
  for (int j = 1; j <= tree.max_index(); ++j)
    out["vectors"].push_back(vec_to_json(tree.vectors[static_cast<size_t>(j)]));
  return out.dump(2);
}

DeltaTree delta_tree_from_json(const std::string& text) {
  json j = parse(text, "delta tree");
  DeltaTree tree;
  tree.depth = j.at("depth").get<int>();
  tree.norm = norm_from_json_fields(j);
  tree.vectors.emplace_back();  // unused slot 0
  for (const json& v : j.at("vectors")) tree.vectors.push_back(vec_from_json(v, "tree vector"));
  if (static_cast<int>(tree.vectors.size()) != tree.max_index() + 1)
    throw InvalidInput("delta tree vector count does not match depth");
  return tree;
}

std::string to_json(const ReflexivityWitness& witness) {
  json out;
  out.update(norm_to_json(witness.norm));
  out["theta"] = rational_to_json(witness.theta);
  out["functional"] = vec_to_json(witness.functional);
  out["vectors"] = json::array();
  for (const Vec& v : witness.vectors) out["vectors"].push_back(vec_to_json(v));
  return out.dump(2);
}

std::string trace_to_csv(const MartingaleTrace& trace) {
  std::ostringstream out;
  int dim = trace.steps.empty() || trace.steps[0].function.values.empty()
                ? 0
                : static_cast<int>(trace.steps[0].function.values[0].size());
  out << "step,interval_start_num,interval_start_den,interval_end_num,interval_end_den";
  for (int d = 0; d < dim; ++d) out << ",v" << d << "_num,v" << d << "_den";
  out << "\n";
  for (size_t k = 0; k < trace.steps.size(); ++k) {
    const StepFunction& f = trace.steps[k].function;
    for (int i = 0; i < f.intervals(); ++i) {
      const Rational& lo = f.partition.breakpoints[static_cast<size_t>(i)];
      const Rational& hi = f.partition.breakpoints[static_cast<size_t>(i) + 1];
      out << k << "," << lo.get_num().get_str() << "," << lo.get_den().get_str() << ","
          << hi.get_num().get_str() << "," << hi.get_den().get_str();
      for (const Rational& x : f.values[static_cast<size_t>(i)])
        out << "," << x.get_num().get_str() << "," << x.get_den().get_str();
      out << "\n";
    }
  }
  return out.str();
}

std::string trace_certificate_json(const MartingaleTrace& trace, const TraceCheck& check) {
  json out;
  out["mode"] = trace.mode == ExtractionMode::Geodesic ? "geodesic" : "iso";
  out["ell"] = rational_to_json(trace.ell);
  out["c"] = rational_to_json(trace.c);
  out["d_uv"] = rational_to_json(trace.duv);
  out["steps"] = static_cast<int>(trace.steps.size()) - 1;
  out["max_sup_norm"] = rational_to_json(trace.max_sup_norm);
  out["sup_norm_bound"] = rational_to_json(trace.sup_norm_bound);
  json diffs = json::array();
  for (size_t k = 0; k < trace.steps.size(); ++k) {
    const MartingaleStep& s = trace.steps[k];
    if (!s.has_certificate) continue;
    json jd;
    jd["step"] = k;
    jd["l1_difference"] = rational_to_json(s.l1_difference);
    jd["required"] = rational_to_json(s.required_bound);
    jd["pass"] = s.certificate_pass;
    diffs.push_back(std::move(jd));
  }
  out["even_step_bounds"] = std::move(diffs);
  json jc;
  jc["nested"] = check.nested;
  jc["martingale_property"] = check.martingale_property;
  jc["bounded"] = check.bounded;
  jc["certificates"] = check.certificates;
  jc["contraction"] = check.contraction;
  jc["pass"] = check.pass;
  jc["failures"] = check.failures;
  out["verification"] = std::move(jc);
  out["flags"] = trace.flags;
  return out.dump(2);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write file: " + path);
  out << content;
}

}  // namespace metricgeo
