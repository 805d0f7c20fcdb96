#include "metricgeo/witness.hpp"

#include <algorithm>

#include "metricgeo/errors.hpp"
#include "metricgeo/partition.hpp"

namespace metricgeo {

namespace {

std::string rat(const Rational& r) { return to_string(r); }

void clause(WitnessReport& report, const std::string& name, bool pass,
            const std::string& detail) {
  report.clauses.push_back(ClauseResult{name, pass, detail});
}

}  // namespace

WitnessReport verify_thick_witness(const ThickWitness& witness, const Rational& c) {
  WitnessReport report;
  const GraphMetric& m = *witness.space;
  const auto& w = witness.w;
  const auto& z = witness.z;
  const auto& zt = witness.ztilde;

  bool shape = w.size() >= 2 && z.size() == zt.size() && z.size() + 1 == w.size() &&
               w.front() == witness.u0 && w.back() == witness.v0 &&
               !(witness.u0 == witness.v0);
  clause(report, "shape", shape,
         "n = " + std::to_string(z.size()) + ", w points = " + std::to_string(w.size()));
  if (!shape) return report;

  Rational duv = m.distance(witness.u0, witness.v0);
  int n = witness.forks();

  Rational w_total(0);
  for (int i = 1; i <= n; ++i) w_total += m.distance(w[i - 1], w[i]);
  clause(report, "w-chain geodesic order", w_total == duv,
         "sum = " + rat(w_total) + ", d(u0,v0) = " + rat(duv));

  Rational z_total(0), zt_total(0);
  for (int i = 1; i <= n; ++i) {
    z_total += m.distance(w[i - 1], z[i - 1]) + m.distance(z[i - 1], w[i]);
    zt_total += m.distance(w[i - 1], zt[i - 1]) + m.distance(zt[i - 1], w[i]);
  }
  clause(report, "z-chain geodesic order", z_total == duv,
         "sum = " + rat(z_total) + ", d(u0,v0) = " + rat(duv));
  clause(report, "ztilde-chain geodesic order", zt_total == duv,
         "sum = " + rat(zt_total) + ", d(u0,v0) = " + rat(duv));

  bool distinct = true;
  std::string distinct_detail;
  for (int i = 0; i < n && distinct; ++i)
    if (z[i] == zt[i]) {
      distinct = false;
      distinct_detail = "z_" + std::to_string(i + 1) + " equals its twin; the two "
                        "geodesics must be different";
    }
  clause(report, "forks distinct", distinct, distinct_detail);

  bool equal = true;
  std::string equal_detail;
  for (int i = 1; i <= n && equal; ++i) {
    Rational right_z = m.distance(w[i], z[i - 1]);
    Rational right_t = m.distance(w[i], zt[i - 1]);
    Rational left_z = m.distance(w[i - 1], z[i - 1]);
    Rational left_t = m.distance(w[i - 1], zt[i - 1]);
    if (right_z != right_t || left_z != left_t) {
      equal = false;
      equal_detail = "at i = " + std::to_string(i) + ": d(w_i,z_i) = " + rat(right_z) +
                     " vs " + rat(right_t) + ", d(w_{i-1},z_i) = " + rat(left_z) + " vs " +
                     rat(left_t);
    }
  }
  clause(report, "equal fork distances", equal, equal_detail);

  Rational width(0);
  for (int i = 0; i < n; ++i) width += m.distance(z[i], zt[i]);
  report.width_sum = width;
  report.width_required = c * duv;
  clause(report, "width", width >= report.width_required,
         "sum d(z_i, ztilde_i) = " + rat(width) + " >= c d(u0,v0) = " +
             rat(report.width_required));

  if (witness.family_u && witness.family_v) {
    Rational total = m.distance(*witness.family_u, *witness.family_v);
    Rational a = m.distance(*witness.family_u, witness.u0) + duv +
                 m.distance(witness.v0, *witness.family_v);
    Rational b = m.distance(*witness.family_u, witness.v0) + duv +
                 m.distance(witness.u0, *witness.family_v);
    clause(report, "extends to a uv-geodesic", a == total || b == total,
           "through-lengths " + rat(a) + " / " + rat(b) + ", d(u,v) = " + rat(total));
  }

  report.pass = std::all_of(report.clauses.begin(), report.clauses.end(),
                            [](const ClauseResult& r) { return r.pass; });
  return report;
}

const DiamondGraph& DiamondFamily::at(int level) {
  auto it = cache_.find(level);
  if (it == cache_.end()) it = cache_.emplace(level, diamond(level, limits_)).first;
  return it->second;
}

const LaaksoGraph& LaaksoFamily::at(int level) {
  auto it = cache_.find(level);
  if (it == cache_.end()) it = cache_.emplace(level, laakso2(level, limits_)).first;
  return it->second;
}

namespace {

// One traversed stretch of an edge; from/to are edge-local offsets and either
// may be interior for the first and last segment of a geodesic.
struct OrientedSegment {
  int edge = -1;
  Rational from_off;
  Rational to_off;

  Rational length() const { return abs(to_off - from_off); }
};

std::vector<std::pair<int, Rational>> point_exits(const MetricGraph& g, const GraphPoint& p) {
  if (p.is_vertex()) return {{p.vertex, Rational(0)}};
  const Edge& e = g.edge(p.edge);
  return {{e.u, p.offset}, {e.v, e.length - p.offset}};
}

// A geodesic p -> q as oriented segments; deterministic because vertex walks
// break ties on edge addresses and exit combinations are scanned in a fixed
// order.
std::vector<OrientedSegment> geodesic_segments(const GraphMetric& m, const GraphPoint& p,
                                               const GraphPoint& q) {
  const MetricGraph& g = m.graph();
  Rational d = m.distance(p, q);
  if (d == 0) throw InvalidInput("geodesic between coincident points");

  if (!p.is_vertex() && !q.is_vertex() && p.edge == q.edge &&
      abs(p.offset - q.offset) == d)
    return {OrientedSegment{p.edge, p.offset, q.offset}};

  for (const auto& [a, ca] : point_exits(g, p))
    for (const auto& [b, cb] : point_exits(g, q)) {
      if (ca + m.vertex_distance(a, b) + cb != d) continue;
      std::vector<OrientedSegment> segments;
      if (!p.is_vertex() && ca > 0) {
        const Edge& e = g.edge(p.edge);
        segments.push_back({p.edge, p.offset, a == e.u ? Rational(0) : e.length});
      }
      int cur = a;
      for (int e : m.shortest_walk(a, b)) {
        const Edge& ed = g.edge(e);
        int next = ed.u == cur ? ed.v : ed.u;
        segments.push_back({e, cur == ed.u ? Rational(0) : ed.length,
                            next == ed.u ? Rational(0) : ed.length});
        cur = next;
      }
      if (!q.is_vertex() && cb > 0) {
        const Edge& e = g.edge(q.edge);
        segments.push_back({q.edge, b == e.u ? Rational(0) : e.length, q.offset});
      }
      return segments;
    }
  throw Error("internal: exit scan found no geodesic decomposition");
}

long floor_of(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q.get_si();
}

long ceil_of(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q.get_si();
}

struct ArcPoint {
  Rational global;
  int segment = -1;
  Rational local;  // edge-local offset
};

// Point of the segment chain at a given arc position.
ArcPoint locate_arc(const std::vector<OrientedSegment>& segments,
                    const std::vector<Rational>& arc_start, const Rational& global) {
  for (size_t s = 0; s < segments.size(); ++s) {
    Rational end = arc_start[s] + segments[s].length();
    if (global > end) continue;
    Rational along = global - arc_start[s];
    Rational local = segments[s].from_off < segments[s].to_off
                         ? Rational(segments[s].from_off + along)
                         : Rational(segments[s].from_off - along);
    return ArcPoint{global, static_cast<int>(s), local};
  }
  throw Error("internal: arc position outside the geodesic");
}

}  // namespace

ThickWitness laakso_thick_witness(LaaksoFamily& family, const std::string& u0_key,
                                  const std::string& v0_key, const Rational& threshold) {
  if (threshold <= 0 || threshold >= 1)
    throw InvalidInput("witness threshold must lie in (0,1)");
  if (u0_key == v0_key) throw InvalidInput("witness endpoints must be distinct");

  int j = std::max(min_level_of_key(u0_key), min_level_of_key(v0_key));
  const LaaksoGraph& base = family.at(j);
  GraphMetric base_metric(base.graph);
  GraphPoint pu = point_from_key(base, u0_key);
  GraphPoint pv = point_from_key(base, v0_key);
  if (pu == pv) throw InvalidInput("witness endpoints must be distinct");

  GraphPoint fu = GraphPoint::at_vertex(base.u);
  GraphPoint fv = GraphPoint::at_vertex(base.v);
  Rational total = base_metric.distance(fu, fv);
  Rational L = base_metric.distance(pu, pv);
  Rational through_a = base_metric.distance(fu, pu) + L + base_metric.distance(pv, fv);
  Rational through_b = base_metric.distance(fu, pv) + L + base_metric.distance(pu, fv);
  if (through_a != total && through_b != total)
    throw InvalidInput("points " + u0_key + ", " + v0_key +
                       " do not lie on a common uv-geodesic");

  std::vector<OrientedSegment> segments = geodesic_segments(base_metric, pu, pv);
  std::vector<Rational> arc_start;
  Rational acc(0);
  for (const OrientedSegment& s : segments) {
    arc_start.push_back(acc);
    acc += s.length();
  }
  if (acc != L) throw Error("internal: geodesic decomposition length mismatch");

  // Trisect until the new vertices on the geodesic span threshold * L.
  int k = 0;
  std::vector<ArcPoint> marks;
  for (k = 1; k <= 64; ++k) {
    marks.clear();
    Rational h = pow3(-(j + k));
    for (size_t s = 0; s < segments.size(); ++s) {
      Rational lo = std::min(segments[s].from_off, segments[s].to_off);
      Rational hi = std::max(segments[s].from_off, segments[s].to_off);
      for (long mm = ceil_of(lo / h); mm <= floor_of(hi / h); ++mm) {
        if (mm % 3 == 0) continue;
        Rational local = mm * h;
        Rational global = arc_start[s] + abs(local - segments[s].from_off);
        marks.push_back(ArcPoint{global, static_cast<int>(s), local});
      }
    }
    std::sort(marks.begin(), marks.end(),
              [](const ArcPoint& a, const ArcPoint& b) { return a.global < b.global; });
    if (marks.size() >= 2 && marks.back().global - marks.front().global >= threshold * L)
      break;
  }
  if (k > 64) throw Error("internal: trisection depth runaway");

  const LaaksoGraph& fine = family.at(j + k);
  SpaceHandle space = make_space(fine.graph);

  auto locate_in_fine = [&](const ArcPoint& ap) {
    const std::string& addr = base.graph->edge(segments[static_cast<size_t>(ap.segment)].edge).address;
    return locate_on_edge(fine, addr, ap.local);
  };

  ThickWitness witness;
  witness.space = space;
  witness.c = threshold;
  witness.u0 = point_from_key(fine, u0_key);
  witness.v0 = point_from_key(fine, v0_key);
  witness.u0_key = u0_key;
  witness.v0_key = v0_key;
  witness.family_u = GraphPoint::at_vertex(fine.u);
  witness.family_v = GraphPoint::at_vertex(fine.v);

  int n = static_cast<int>(marks.size()) - 1;
  witness.w.push_back(witness.u0);
  for (int i = 1; i < n; ++i) {
    GraphPoint p = locate_in_fine(marks[static_cast<size_t>(i)]);
    if (!p.is_vertex()) throw Error("internal: trisection mark is not a vertex");
    witness.w.push_back(p);
  }
  witness.w.push_back(witness.v0);

  for (int i = 1; i <= n; ++i) {
    Rational mid = (marks[static_cast<size_t>(i - 1)].global +
                    marks[static_cast<size_t>(i)].global) /
                   2;
    GraphPoint zp = locate_in_fine(locate_arc(segments, arc_start, mid));
    witness.z.push_back(zp);
    witness.ztilde.push_back(twin_point(fine, zp));
  }

  for (const GraphPoint& p : witness.w) witness.w_keys.push_back(point_key(fine, p));
  for (const GraphPoint& p : witness.z) witness.z_keys.push_back(point_key(fine, p));
  for (const GraphPoint& p : witness.ztilde) witness.zt_keys.push_back(point_key(fine, p));
  return witness;
}

namespace {

int diamond_vertex_level(const DiamondGraph& d, int vertex) {
  const std::string& origin = d.vertex_origin[static_cast<size_t>(vertex)];
  if (origin.empty()) return 0;
  return static_cast<int>(std::count(origin.begin(), origin.end(), '.')) + 1;
}

}  // namespace

ThickWitness diamond_thick_witness(const DiamondGraph& d_next, const std::string& u0_id,
                                   const std::string& v0_id) {
  if (d_next.level < 1) throw InvalidInput("diamond witness needs a level >= 1 graph");
  if (u0_id == v0_id) throw InvalidInput("witness endpoints must be distinct");
  int n = d_next.level - 1;

  int u0_next = d_next.graph->require_vertex(u0_id);
  int v0_next = d_next.graph->require_vertex(v0_id);
  if (diamond_vertex_level(d_next, u0_next) > n || diamond_vertex_level(d_next, v0_next) > n)
    throw InvalidInput("witness endpoints must be vertices of level " + std::to_string(n));

  DiamondGraph dn = diamond(n);
  GraphMetric mn(dn.graph);
  int u0 = dn.graph->require_vertex(u0_id);
  int v0 = dn.graph->require_vertex(v0_id);
  Rational total = mn.vertex_distance(dn.top, dn.bottom);
  Rational L = mn.vertex_distance(u0, v0);
  Rational through_a =
      mn.vertex_distance(dn.top, u0) + L + mn.vertex_distance(v0, dn.bottom);
  Rational through_b =
      mn.vertex_distance(dn.top, v0) + L + mn.vertex_distance(u0, dn.bottom);
  if (through_a != total && through_b != total)
    throw InvalidInput("vertices " + u0_id + ", " + v0_id +
                       " do not lie on a common top-bottom geodesic");

  ThickWitness witness;
  witness.space = make_space(d_next.graph);
  witness.c = 1;
  witness.u0 = GraphPoint::at_vertex(u0_next);
  witness.v0 = GraphPoint::at_vertex(v0_next);
  witness.u0_key = u0_id;
  witness.v0_key = v0_id;
  witness.family_u = GraphPoint::at_vertex(d_next.top);
  witness.family_v = GraphPoint::at_vertex(d_next.bottom);

  witness.w.push_back(witness.u0);
  witness.w_keys.push_back(u0_id);
  int cur = u0;
  for (int e : mn.shortest_walk(u0, v0)) {
    const Edge& edge = dn.graph->edge(e);
    int next = edge.u == cur ? edge.v : edge.u;
    auto quad_it = d_next.quad_by_edge.find(edge.address);
    if (quad_it == d_next.quad_by_edge.end())
      throw Error("internal: level-" + std::to_string(n) + " edge " + edge.address +
                  " has no quadrilateral at level " + std::to_string(n + 1));
    const Quadrilateral& q = d_next.quadrilaterals[static_cast<size_t>(quad_it->second)];
    witness.z.push_back(GraphPoint::at_vertex(q.a));
    witness.ztilde.push_back(GraphPoint::at_vertex(q.b));
    witness.z_keys.push_back(d_next.graph->vertex_id(q.a));
    witness.zt_keys.push_back(d_next.graph->vertex_id(q.b));
    std::string next_id = dn.graph->vertex_id(next);
    witness.w.push_back(GraphPoint::at_vertex(d_next.graph->require_vertex(next_id)));
    witness.w_keys.push_back(next_id);
    cur = next;
  }
  return witness;
}

WitnessOracle diamond_oracle(std::shared_ptr<DiamondFamily> family) {
  return [family](const std::string& u0, const std::string& v0) {
    auto vertex_level = [](const std::string& id) {
      if (id == "top" || id == "bottom") return 0;
      size_t colon = id.rfind(':');
      if (colon == std::string::npos) throw InvalidInput("malformed diamond vertex id: " + id);
      return static_cast<int>(std::count(id.begin(), id.begin() + static_cast<long>(colon), '.')) + 1;
    };
    int level = std::max(vertex_level(u0), vertex_level(v0));
    return diamond_thick_witness(family->at(level + 1), u0, v0);
  };
}

WitnessOracle laakso_oracle(std::shared_ptr<LaaksoFamily> family, Rational threshold) {
  return [family, threshold](const std::string& u0, const std::string& v0) {
    return laakso_thick_witness(*family, u0, v0, threshold);
  };
}

IsoWitness iso_from_thick(const ThickWitness& thick, Rational C) {
  IsoWitness iso;
  iso.space = thick.space;
  iso.C = std::move(C);
  for (const GraphPoint& p : thick.w) iso.base.points.push_back(p);
  int n = thick.forks();
  for (int i = 0; i < n; ++i) {
    iso.ext.points.push_back(thick.w[static_cast<size_t>(i)]);
    iso.ext.points.push_back(thick.z[static_cast<size_t>(i)]);
    iso.ext_tilde.points.push_back(thick.w[static_cast<size_t>(i)]);
    iso.ext_tilde.points.push_back(thick.ztilde[static_cast<size_t>(i)]);
    iso.common.push_back(2 * i);
    iso.distinct.push_back(2 * i + 1);
  }
  iso.ext.points.push_back(thick.w.back());
  iso.ext_tilde.points.push_back(thick.w.back());
  iso.common.push_back(2 * n);
  return iso;
}

WitnessReport verify_iso_witness(const IsoWitness& witness, const Rational& c) {
  WitnessReport report;
  const GraphMetric& m = *witness.space;
  const auto& ext = witness.ext.points;
  const auto& ext_t = witness.ext_tilde.points;

  size_t mcount = ext.size();
  std::vector<char> is_common(mcount, 0), is_distinct(mcount, 0);
  bool shape = ext.size() == ext_t.size() && mcount >= 2 &&
               witness.common.size() + witness.distinct.size() == mcount;
  if (shape) {
    for (int i : witness.common) {
      if (i < 0 || i >= static_cast<int>(mcount)) shape = false;
      else is_common[static_cast<size_t>(i)] = 1;
    }
    for (int i : witness.distinct) {
      if (i < 0 || i >= static_cast<int>(mcount)) shape = false;
      else is_distinct[static_cast<size_t>(i)] = 1;
    }
    for (size_t i = 0; i < mcount && shape; ++i)
      shape = (is_common[i] ^ is_distinct[i]) != 0;
    shape = shape && is_common[0] && is_common[mcount - 1];
  }
  clause(report, "shape", shape,
         "m = " + std::to_string(mcount) + ", common = " + std::to_string(witness.common.size()) +
             ", distinct = " + std::to_string(witness.distinct.size()));
  if (!shape) return report;

  bool agree = true;
  std::string agree_detail;
  for (size_t i = 0; i < mcount && agree; ++i) {
    bool same = ext[i] == ext_t[i];
    if (is_common[i] && !same) {
      agree = false;
      agree_detail = "common index " + std::to_string(i) + " differs between extensions";
    }
    if (is_distinct[i] && same) {
      agree = false;
      agree_detail = "distinct index " + std::to_string(i) + " holds equal points";
    }
  }
  clause(report, "common/distinct split", agree, agree_detail);
  if (!agree) return report;

  PointSequence common_seq;
  for (int i : witness.common) common_seq.points.push_back(ext[static_cast<size_t>(i)]);

  bool base_ok = true;
  std::string base_detail;
  try {
    subsequence_positions(witness.base, common_seq);
  } catch (const InvalidInput& e) {
    base_ok = false;
    base_detail = e.what();
  }
  clause(report, "base within common points", base_ok, base_detail);

  GraphPoint u = witness.base.points.front();
  GraphPoint v = witness.base.points.back();
  Rational duv = m.distance(u, v);
  Rational budget = witness.C * duv;

  auto chain_total = [&](const std::vector<GraphPoint>& pts) {
    Rational t(0);
    for (size_t i = 1; i < pts.size(); ++i) t += m.distance(pts[i - 1], pts[i]);
    return t;
  };
  Rational base_total = chain_total(witness.base.points);
  Rational common_total = chain_total(common_seq.points);
  Rational ext_total = chain_total(ext);
  Rational ext_t_total = chain_total(ext_t);

  // The worst mix replaces, fork by fork, the two adjacent segments by the
  // larger of the z and ztilde detours; mixes decompose per fork because
  // forks are isolated.
  bool isolated = true;
  std::string isolated_detail;
  for (int i : witness.distinct) {
    if (i == 0 || i + 1 >= static_cast<int>(mcount) || !is_common[static_cast<size_t>(i - 1)] ||
        !is_common[static_cast<size_t>(i + 1)]) {
      isolated = false;
      isolated_detail = "distinct index " + std::to_string(i) + " is not between common points";
      break;
    }
  }
  clause(report, "forks isolated between common points", isolated, isolated_detail);

  Rational mix_total = ext_total;
  if (isolated) {
    mix_total = 0;
    for (size_t i = 1; i < mcount; ++i) mix_total += m.distance(ext[i - 1], ext[i]);
    for (int i : witness.distinct) {
      size_t t = static_cast<size_t>(i);
      Rational via_z = m.distance(ext[t - 1], ext[t]) + m.distance(ext[t], ext[t + 1]);
      Rational via_t = m.distance(ext[t - 1], ext_t[t]) + m.distance(ext_t[t], ext[t + 1]);
      if (via_t > via_z) mix_total += via_t - via_z;
    }
  }
  clause(report, "C-geodesic budget", base_total <= budget && common_total <= budget &&
             ext_total <= budget && ext_t_total <= budget && mix_total <= budget,
         "base " + rat(base_total) + ", common " + rat(common_total) + ", ext " +
             rat(ext_total) + ", ext~ " + rat(ext_t_total) + ", worst mix " + rat(mix_total) +
             " vs C d(u,v) = " + rat(budget));

  bool proportional = isolated;
  std::string prop_detail;
  if (isolated)
    for (int i : witness.distinct) {
      size_t t = static_cast<size_t>(i);
      Rational lhs = m.distance(ext[t], ext[t - 1]) * m.distance(ext_t[t], ext[t + 1]);
      Rational rhs = m.distance(ext_t[t], ext[t - 1]) * m.distance(ext[t], ext[t + 1]);
      if (lhs != rhs) {
        proportional = false;
        prop_detail = "proportion identity fails at index " + std::to_string(i) + ": " +
                      rat(lhs) + " != " + rat(rhs);
        break;
      }
    }
  clause(report, "proportional forks", proportional, prop_detail);

  Rational width(0);
  for (int i : witness.distinct)
    width += m.distance(ext[static_cast<size_t>(i)], ext_t[static_cast<size_t>(i)]);
  report.width_sum = width;
  report.width_required = c * duv;
  clause(report, "width", width >= report.width_required,
         "sum over distinct = " + rat(width) + " >= c d(u,v) = " + rat(report.width_required));

  report.pass = std::all_of(report.clauses.begin(), report.clauses.end(),
                            [](const ClauseResult& r) { return r.pass; });
  return report;
}

}  // namespace metricgeo
