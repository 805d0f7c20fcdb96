// mgeo: generate the diamond and Laakso families, certify thick-family and
// iso witnesses, build parallelogram embeddings, extract martingales from
// bilipschitz embeddings, and run the reflexivity checks. All certification
// arithmetic is exact; reports carry the rationals behind every verdict.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <sstream>

#include "metricgeo/errors.hpp"
#include "metricgeo/inclusion.hpp"
#include "metricgeo/martingale.hpp"
#include "metricgeo/selfcheck.hpp"
#include "metricgeo/serialization.hpp"

using namespace metricgeo;
using nlohmann::json;

namespace {

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::int64_t cap = 10'000'000;
  double tolerance = 1e-9;
  std::string format = "json";
};

Rational parse_rational_arg(const std::string& text) {
  size_t slash = text.find('/');
  if (slash == std::string::npos) return rational_from_strings(text, "1");
  return rational_from_strings(text.substr(0, slash), text.substr(slash + 1));
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content << "\n";
  else
    write_file(out_path, content);
}

json rational_json(const Rational& r) {
  json j;
  mpz_class num = r.get_num(), den = r.get_den();
  if (num.fits_slong_p())
    j["num"] = num.get_si();
  else
    j["num"] = num.get_str();
  if (den.fits_slong_p())
    j["den"] = den.get_si();
  else
    j["den"] = den.get_str();
  return j;
}

SpaceFile load_space(const std::string& path) { return space_from_json(read_file(path)); }

int run_generate(const std::string& family, int level, const GlobalOptions& opts,
                 const std::string& out, bool root_pair) {
  GeneratorLimits limits;
  limits.max_vertices = opts.cap;
  if (family == "diamond") {
    DiamondGraph d = diamond(level, limits);
    emit(out, to_json(d, root_pair));
  } else {
    LaaksoGraph g = laakso2(level, limits);
    emit(out, to_json(g));
  }
  return 0;
}

int run_geodesics(const std::string& space_path, const std::string& u, const std::string& v,
                  int limit, const GlobalOptions& opts, const std::string& out) {
  SpaceFile space = load_space(space_path);
  int ui = space.graph->require_vertex(u);
  int vi = space.graph->require_vertex(v);
  auto walks = enumerate_geodesics(*space.graph, ui, vi, limit);
  if (opts.format == "csv") {
    std::ostringstream csv;
    csv << "index,length_num,length_den,vertices\n";
    for (size_t i = 0; i < walks.size(); ++i) {
      csv << i << "," << walks[i].length.get_num().get_str() << ","
          << walks[i].length.get_den().get_str() << ",";
      for (size_t t = 0; t < walks[i].vertex_seq.size(); ++t)
        csv << (t ? " " : "") << space.graph->vertex_id(walks[i].vertex_seq[t]);
      csv << "\n";
    }
    emit(out, csv.str());
    return 0;
  }
  json j;
  j["count"] = walks.size();
  j["geodesics"] = json::array();
  for (const Walk& w : walks) {
    json jw;
    jw["length"] = rational_json(w.length);
    jw["vertices"] = json::array();
    for (int x : w.vertex_seq) jw["vertices"].push_back(space.graph->vertex_id(x));
    jw["edges"] = json::array();
    for (int e : w.edge_seq) jw["edges"].push_back(space.graph->edge(e).address);
    j["geodesics"].push_back(std::move(jw));
  }
  emit(out, j.dump(2));
  return 0;
}

int run_partition(const std::string& geodesic_path, const GlobalOptions& opts,
                  const std::string& out) {
  json spec = json::parse(read_file(geodesic_path), nullptr, false);
  if (spec.is_discarded() || !spec.contains("space") || !spec.contains("points"))
    throw InvalidInput("geodesic file needs {space, points[, C]}");
  SpaceFile space = load_space(spec.at("space").get<std::string>());
  PointSequence seq;
  std::vector<std::string> keys;
  for (const json& k : spec.at("points")) {
    keys.push_back(k.get<std::string>());
    seq.points.push_back(point_from_key_in_space(space, keys.back()));
  }
  Rational C = spec.contains("C") ? parse_rational_arg(spec.at("C").is_string()
                                                           ? spec.at("C").get<std::string>()
                                                           : spec.at("C").dump())
                                  : Rational(1);
  GraphMetric m(space.graph);
  CGeodesicCheck check = is_c_geodesic(m, seq, C);
  if (!check.ok)
    throw InvalidInput("points form no C-geodesic: ratio " + to_string(check.ratio) +
                       " exceeds C = " + to_string(C));
  Partition p = partition_of(m, seq);
  if (opts.format == "csv") {
    std::ostringstream csv;
    csv << "index,breakpoint_num,breakpoint_den\n";
    for (size_t i = 0; i < p.breakpoints.size(); ++i)
      csv << i << "," << p.breakpoints[i].get_num().get_str() << ","
          << p.breakpoints[i].get_den().get_str() << "\n";
    emit(out, csv.str());
    return 0;
  }
  json j;
  j["C"] = rational_json(C);
  j["ratio"] = rational_json(check.ratio);
  j["breakpoints"] = json::array();
  for (const Rational& b : p.breakpoints) j["breakpoints"].push_back(rational_json(b));
  emit(out, j.dump(2));
  return 0;
}

int run_certify_thick(const std::string& space_path, const std::string& u0,
                      const std::string& v0, std::string family, const Rational& c,
                      const Rational& threshold, const GlobalOptions& opts,
                      const std::string& out) {
  GeneratorLimits limits;
  limits.max_vertices = opts.cap;
  if (family.empty()) {
    SpaceFile space = load_space(space_path);
    family = space.family;
  }
  ThickWitness witness = [&] {
    if (family == "laakso2") {
      LaaksoFamily lf(limits);
      return laakso_thick_witness(lf, u0, v0, threshold);
    }
    if (family == "diamond") {
      DiamondFamily df(limits);
      auto vertex_level = [](const std::string& id) {
        if (id == "top" || id == "bottom") return 0;
        size_t colon = id.rfind(':');
        if (colon == std::string::npos)
          throw InvalidInput("not a diamond vertex id: " + id);
        return static_cast<int>(
                   std::count(id.begin(), id.begin() + static_cast<long>(colon), '.')) +
               1;
      };
      int level = std::max(vertex_level(u0), vertex_level(v0));
      return diamond_thick_witness(df.at(level + 1), u0, v0);
    }
    throw InvalidInput("unknown family: " + family + " (expected diamond or laakso2)");
  }();
  Rational require_c = c > 0 ? c : witness.c;
  WitnessReport report = verify_thick_witness(witness, require_c);
  emit(out, witness_to_json(witness, report));
  return report.pass ? 0 : 1;
}

int run_certify_iso(const std::string& space_path, const std::string& witness_path,
                    const std::string& u0, const std::string& v0, const std::string& family,
                    const Rational& c, const Rational& threshold, const GlobalOptions& opts,
                    const std::string& out) {
  GeneratorLimits limits;
  limits.max_vertices = opts.cap;
  IsoWitness iso;
  Rational require_c = c;
  if (!witness_path.empty()) {
    IsoWitnessFile file = iso_witness_from_json(read_file(witness_path));
    SpaceFile space = load_space(space_path);
    iso.space = make_space(space.graph);
    for (const std::string& k : file.base)
      iso.base.points.push_back(point_from_key_in_space(space, k));
    for (const std::string& k : file.ext)
      iso.ext.points.push_back(point_from_key_in_space(space, k));
    for (const std::string& k : file.ext_tilde)
      iso.ext_tilde.points.push_back(point_from_key_in_space(space, k));
    iso.common = file.common;
    iso.distinct = file.distinct;
    iso.C = file.C;
    if (require_c <= 0) throw InvalidInput("certify iso --witness requires --c");
  } else {
    // Recast the stock thick witness as an iso witness.
    if (family == "laakso2") {
      LaaksoFamily lf(limits);
      iso = iso_from_thick(laakso_thick_witness(lf, u0, v0, threshold));
      if (require_c <= 0) require_c = threshold;
    } else if (family == "diamond") {
      DiamondFamily df(limits);
      auto vertex_level = [](const std::string& id) {
        if (id == "top" || id == "bottom") return 0;
        size_t colon = id.rfind(':');
        if (colon == std::string::npos)
          throw InvalidInput("not a diamond vertex id: " + id);
        return static_cast<int>(
                   std::count(id.begin(), id.begin() + static_cast<long>(colon), '.')) +
               1;
      };
      int level = std::max(vertex_level(u0), vertex_level(v0));
      iso = iso_from_thick(diamond_thick_witness(df.at(level + 1), u0, v0));
      if (require_c <= 0) require_c = 1;
    } else {
      throw InvalidInput("certify iso needs --witness or --family with --u0/--v0");
    }
  }
  WitnessReport report = verify_iso_witness(iso, require_c);
  emit(out, report_to_json(report));
  return report.pass ? 0 : 1;
}

int run_embed_stegall(int depth, int tree_depth, const std::string& out,
                      const GlobalOptions& opts) {
  GeneratorLimits limits;
  limits.max_vertices = opts.cap;
  if (tree_depth < depth) tree_depth = depth;
  DiamondGraph d = diamond(depth, limits);
  StegallEmbedding se = stegall_diamond_embedding(dyadic_l1_tree(tree_depth), d);
  emit(out, to_json(se.embedding, "diamond level " + std::to_string(depth)));
  std::cerr << "certified lower = " << to_string(se.embedding.certified_lower)
            << ", upper = " << to_string(se.embedding.certified_upper) << "\n";
  return 0;
}

int run_embed_from_tree(const std::string& tree_path, int depth, const std::string& out,
                        const GlobalOptions& opts) {
  GeneratorLimits limits;
  limits.max_vertices = opts.cap;
  DeltaTree tree = delta_tree_from_json(read_file(tree_path));
  DiamondGraph d = diamond(depth, limits);
  PartialEmbeddingResult r = tree_to_diamond_partial_embedding(tree, d);
  emit(out, to_json(r.embedding, "diamond level " + std::to_string(depth)));
  std::cerr << "shift r = " << to_string(r.shift_r)
            << ", lambda = " << to_string(r.lambda)
            << ", C = " << to_string(r.upper_c) << " over " << r.active.size()
            << " active pairs\n";
  return 0;
}

int run_distortion(const std::string& embedding_path, const std::string& space_path,
                   const std::string& pairs, const GlobalOptions& opts,
                   const std::string& out) {
  Embedding f = embedding_from_json(read_file(embedding_path));
  SpaceFile space = load_space(space_path);
  FiniteMetricSpace metric = shortest_path_metric(*space.graph);
  std::vector<VertexPair> active;
  const std::vector<VertexPair>* selected = nullptr;
  if (pairs == "active") {
    if (!space.diamond) throw InvalidInput("--pairs active needs a diamond space file");
    active = active_pairs(*space.diamond);
    selected = &active;
  }
  DistortionResult r = distortion(f, metric, selected);
  json j;
  j["pairs"] = pairs;
  j["pair_count"] = r.pair_count;
  j["exact"] = r.exact;
  j["lower"] = rational_json(r.lower);
  j["upper"] = rational_json(r.upper);
  j["distortion"] = rational_json(r.distortion);
  j["min_pair"] = json::array({r.min_pair.first, r.min_pair.second});
  j["max_pair"] = json::array({r.max_pair.first, r.max_pair.second});
  emit(out, j.dump(2));
  return 0;
}

int run_martingale(const std::string& embedding_path, const std::string& space_path,
                   const std::string& oracle_name, int steps, const std::string& mode_name,
                   Rational c, const Rational& threshold, const GlobalOptions& opts,
                   const std::string& trace_path, const std::string& certificate_path) {
  Embedding f = embedding_from_json(read_file(embedding_path));
  GeneratorLimits limits;
  limits.max_vertices = opts.cap;
  std::string u_key, v_key;
  WitnessOracle oracle;
  if (oracle_name == "diamond") {
    oracle = diamond_oracle(std::make_shared<DiamondFamily>(limits));
    u_key = "top";
    v_key = "bottom";
    if (c <= 0) c = 1;
  } else if (oracle_name == "laakso2") {
    oracle = laakso_oracle(std::make_shared<LaaksoFamily>(limits), threshold);
    u_key = "u";
    v_key = "v";
    if (c <= 0) c = threshold;
  } else {
    throw InvalidInput("unknown oracle: " + oracle_name);
  }
  if (!space_path.empty()) {
    SpaceFile space = load_space(space_path);
    if (!space.family.empty() && space.family != oracle_name)
      throw InvalidInput("space family " + space.family + " does not match oracle " +
                         oracle_name);
  }
  ExtractionMode mode =
      mode_name == "iso" ? ExtractionMode::Iso : ExtractionMode::Geodesic;
  MartingaleTrace trace =
      extract_martingale(f, oracle, u_key, v_key, steps, mode, c, opts.tolerance);
  TraceCheck check = verify_martingale_trace(trace);
  if (!trace_path.empty()) write_file(trace_path, trace_to_csv(trace));
  emit(certificate_path, trace_certificate_json(trace, check));
  return check.pass && trace.certificates_pass ? 0 : 1;
}

int run_reflexivity(const std::string& witness_path, int prefix_n, const Rational& delta,
                    long samples, int resolution, const GlobalOptions& opts,
                    const std::string& out) {
  ReflexivityWitness witness;
  if (!witness_path.empty()) {
    json j = json::parse(read_file(witness_path), nullptr, false);
    if (j.is_discarded()) throw InvalidInput("malformed witness JSON");
    Vec weights;
    std::string norm_name = j.at("norm").get<std::string>();
    witness.norm = norm_from_name(norm_name, weights);
    Embedding helper;  // reuse the vector parser via embedding_from_json shape
    for (const json& v : j.at("vectors")) {
      Vec vec;
      for (const json& x : v) {
        if (x.is_object())
          vec.push_back(make_rational(mpz_class(x.at("num").dump()),
                                      mpz_class(x.at("den").dump())));
        else if (x.is_number_float())
          vec.push_back(rational_from_double(x.get<double>()));
        else
          vec.push_back(Rational(static_cast<long>(x.get<std::int64_t>())));
      }
      witness.vectors.push_back(std::move(vec));
    }
    for (const json& x : j.at("functional")) {
      if (x.is_object())
        witness.functional.push_back(
            make_rational(mpz_class(x.at("num").dump()), mpz_class(x.at("den").dump())));
      else if (x.is_number_float())
        witness.functional.push_back(rational_from_double(x.get<double>()));
      else
        witness.functional.push_back(Rational(static_cast<long>(x.get<std::int64_t>())));
    }
    const json& th = j.at("theta");
    witness.theta = th.is_object() ? make_rational(mpz_class(th.at("num").dump()),
                                                   mpz_class(th.at("den").dump()))
                                   : Rational(static_cast<long>(th.get<std::int64_t>()));
  } else {
    witness = prefix_vector_witness(prefix_n);
  }
  validate_reflexivity_witness(witness);
  BasicConstantResult B = basic_constant(witness.vectors, witness.norm, resolution, opts.seed);
  ForwardCheckReport fwd =
      forward_embedding_check(witness, delta, B.value, samples, opts.seed);
  json j;
  j["basic_constant"] = rational_json(B.value);
  j["basic_constant_method"] = B.method;
  j["basic_constant_exact"] = B.exact;
  j["delta"] = rational_json(delta);
  j["theta"] = rational_json(witness.theta);
  j["lower_factor"] = rational_json(fwd.lower_factor);
  j["samples"] = fwd.samples;
  j["violations"] = fwd.violations;
  j["pass"] = fwd.pass;
  j["details"] = fwd.details;
  emit(out, j.dump(2));
  return fwd.pass ? 0 : 1;
}

int run_selftest(const GlobalOptions& opts, const std::string& out) {
  auto start = std::chrono::steady_clock::now();
  std::vector<CriterionResult> results = run_acceptance(opts.seed);
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  emit(out, selftest_report_json(results, opts.seed));
  bool all = true;
  for (const CriterionResult& r : results) {
    std::cerr << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ": " << r.name << "\n";
    all = all && r.pass;
  }
  std::cerr << "selftest finished in " << elapsed << " ms\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"metricgeo: exact finite models of diamond and Laakso geometry"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions opts;
  app.add_option("--seed", opts.seed, "seed for every sampled check")->capture_default_str();
  app.add_option("--cap", opts.cap, "generation vertex cap")->capture_default_str();
  app.add_option("--tolerance", opts.tolerance, "comparison tolerance for l2 norms")
      ->capture_default_str();
  app.add_option("--format", opts.format, "output format for tabular results")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  // generate
  auto* generate = app.add_subcommand("generate", "emit a generated space as JSON");
  std::string gen_family;
  int gen_level = 0;
  std::string gen_out;
  bool gen_root_pair = true;
  generate->add_option("family", gen_family, "diamond or laakso2")
      ->required()
      ->check(CLI::IsMember({"diamond", "laakso2"}));
  generate->add_option("--level", gen_level, "construction level")->required();
  generate->add_option("--out", gen_out, "output path (stdout when omitted)");
  generate->add_flag("--root-pair,!--no-root-pair", gen_root_pair,
                     "count the level-0 edge pair as active");

  // geodesics
  auto* geod = app.add_subcommand("geodesics", "enumerate shortest walks");
  std::string geo_space, geo_u, geo_v, geo_out;
  int geo_limit = 16;
  geod->add_option("--space", geo_space)->required();
  geod->add_option("--u", geo_u)->required();
  geod->add_option("--v", geo_v)->required();
  geod->add_option("--limit", geo_limit)->capture_default_str();
  geod->add_option("--out", geo_out);

  // partition
  auto* part = app.add_subcommand("partition", "breakpoints of a C-geodesic");
  std::string part_geodesic, part_out;
  part->add_option("--geodesic", part_geodesic, "JSON file {space, points, C}")->required();
  part->add_option("--out", part_out);

  // certify
  auto* certify = app.add_subcommand("certify", "verify witnesses");
  certify->require_subcommand(1);
  auto* thick = certify->add_subcommand("thick", "build and verify a thick-family witness");
  std::string th_space, th_u0, th_v0, th_family, th_out, th_c, th_threshold = "1/2";
  thick->add_option("--space", th_space);
  thick->add_option("--u0", th_u0)->required();
  thick->add_option("--v0", th_v0)->required();
  thick->add_option("--family", th_family)->check(CLI::IsMember({"diamond", "laakso2"}));
  thick->add_option("--c", th_c, "required width constant (defaults per family)");
  thick->add_option("--threshold", th_threshold, "trisection span threshold in (0,1)");
  thick->add_option("--out", th_out);
  auto* iso = certify->add_subcommand("iso", "verify an iso witness");
  std::string iso_space, iso_witness, iso_u0, iso_v0, iso_family, iso_out, iso_c,
      iso_threshold = "1/2";
  iso->add_option("--space", iso_space);
  iso->add_option("--witness", iso_witness, "iso witness JSON file");
  iso->add_option("--u0", iso_u0);
  iso->add_option("--v0", iso_v0);
  iso->add_option("--family", iso_family)->check(CLI::IsMember({"diamond", "laakso2"}));
  iso->add_option("--c", iso_c);
  iso->add_option("--threshold", iso_threshold);
  iso->add_option("--out", iso_out);

  // embed
  auto* embed = app.add_subcommand("embed", "build embeddings");
  embed->require_subcommand(1);
  auto* stegall = embed->add_subcommand("stegall", "parallelogram embedding of a diamond");
  int st_depth = 3, st_tree_depth = 0;
  std::string st_out;
  stegall->add_option("--depth", st_depth, "diamond level")->required();
  stegall->add_option("--tree-depth", st_tree_depth, "tree depth (defaults to --depth)");
  stegall->add_option("--out", st_out);
  auto* from_tree = embed->add_subcommand("from-tree", "backward construction from a tree");
  std::string ft_tree, ft_out;
  int ft_depth = 2;
  from_tree->add_option("--tree", ft_tree, "delta-tree JSON")->required();
  from_tree->add_option("--depth", ft_depth, "diamond level")->required();
  from_tree->add_option("--out", ft_out);

  // distortion
  auto* dist = app.add_subcommand("distortion", "Lipschitz constants of an embedding");
  std::string d_embedding, d_space, d_pairs = "all", d_out;
  dist->add_option("--embedding", d_embedding)->required();
  dist->add_option("--space", d_space)->required();
  dist->add_option("--pairs", d_pairs)->check(CLI::IsMember({"all", "active"}));
  dist->add_option("--out", d_out);

  // martingale extract
  auto* mart = app.add_subcommand("martingale", "martingale machinery");
  mart->require_subcommand(1);
  auto* extract = mart->add_subcommand("extract", "extract a divergent martingale");
  std::string mx_embedding, mx_space, mx_oracle, mx_mode = "geodesic", mx_trace, mx_cert,
              mx_c, mx_threshold = "1/2";
  int mx_steps = 4;
  extract->add_option("--embedding", mx_embedding)->required();
  extract->add_option("--space", mx_space);
  extract->add_option("--oracle", mx_oracle)->required()
      ->check(CLI::IsMember({"diamond", "laakso2"}));
  extract->add_option("--steps", mx_steps)->capture_default_str();
  extract->add_option("--mode", mx_mode)->check(CLI::IsMember({"geodesic", "iso"}));
  extract->add_option("--c", mx_c, "oracle width constant");
  extract->add_option("--threshold", mx_threshold);
  extract->add_option("--trace", mx_trace, "trace CSV path");
  extract->add_option("--certificate", mx_cert, "certificate JSON path (stdout when omitted)");

  // reflexivity check
  auto* refl = app.add_subcommand("reflexivity", "submetric reflexivity checks");
  refl->require_subcommand(1);
  auto* check = refl->add_subcommand("check", "forward embedding check");
  std::string rf_witness, rf_delta = "2", rf_out;
  int rf_prefix = 16, rf_resolution = 2000;
  long rf_samples = 10000;
  check->add_option("--witness", rf_witness, "witness JSON (prefix witness when omitted)");
  check->add_option("--prefix", rf_prefix, "size of the stock prefix witness")
      ->capture_default_str();
  check->add_option("--delta", rf_delta)->capture_default_str();
  check->add_option("--samples", rf_samples)->capture_default_str();
  check->add_option("--resolution", rf_resolution)->capture_default_str();
  check->add_option("--out", rf_out);

  // selftest
  auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
  std::string sf_out;
  selftest->add_option("--out", sf_out, "report path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*generate) return run_generate(gen_family, gen_level, opts, gen_out, gen_root_pair);
    if (*geod) return run_geodesics(geo_space, geo_u, geo_v, geo_limit, opts, geo_out);
    if (*part) return run_partition(part_geodesic, opts, part_out);
    if (*thick)
      return run_certify_thick(th_space, th_u0, th_v0, th_family,
                               th_c.empty() ? Rational(0) : parse_rational_arg(th_c),
                               parse_rational_arg(th_threshold), opts, th_out);
    if (*iso)
      return run_certify_iso(iso_space, iso_witness, iso_u0, iso_v0, iso_family,
                             iso_c.empty() ? Rational(0) : parse_rational_arg(iso_c),
                             parse_rational_arg(iso_threshold), opts, iso_out);
    if (*stegall) return run_embed_stegall(st_depth, st_tree_depth, st_out, opts);
    if (*from_tree) return run_embed_from_tree(ft_tree, ft_depth, ft_out, opts);
    if (*dist) return run_distortion(d_embedding, d_space, d_pairs, opts, d_out);
    if (*extract)
      return run_martingale(mx_embedding, mx_space, mx_oracle, mx_steps, mx_mode,
                            mx_c.empty() ? Rational(0) : parse_rational_arg(mx_c),
                            parse_rational_arg(mx_threshold), opts, mx_trace, mx_cert);
    if (*check)
      return run_reflexivity(rf_witness, rf_prefix, parse_rational_arg(rf_delta), rf_samples,
                             rf_resolution, opts, rf_out);
    if (*selftest) return run_selftest(opts, sf_out);
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
