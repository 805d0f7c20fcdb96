#include "metricgeo/martingale.hpp"

#include <algorithm>

#include "metricgeo/errors.hpp"

namespace metricgeo {

IntervalBound interval_lower_bound(const Rational& A, const Rational& B, const Vec& x,
                                   const Vec& y, const Vec& z, const Norm& norm) {
  if (A <= 0 || B <= 0) throw InvalidInput("interval weights must be positive");
  IntervalBound out;
  out.lhs = A * value_norm(sub(x, z), norm) + B * value_norm(sub(y, z), norm);
  Rational minw = A < B ? A : B;
  out.rhs = value_norm(sub(x, y), norm) * minw / 2;
  out.pass = out.lhs >= out.rhs;
  return out;
}

BranchDecision choose_branch(const Vec& f_wprev, const Vec& f_z, const Vec& f_ztilde,
                             const Vec& f_wnext, const Rational& A, const Rational& B,
                             const Rational& dz_ztilde, const Rational& ell, const Norm& norm) {
  if (A <= 0 || B <= 0) throw InvalidInput("branch weights must be positive");
  if (dz_ztilde <= 0) throw InvalidInput("fork separation must be positive");
  BranchDecision out;
  Rational fork_norm = value_norm(sub(f_z, f_ztilde), norm);
  out.precondition_ok = fork_norm >= ell * dz_ztilde;

  auto side = [&](const Vec& fz) {
    Vec left = scale(sub(fz, f_wprev), 1 / A);
    Vec right = scale(sub(f_wnext, fz), 1 / B);
    return value_norm(sub(right, left), norm);
  };
  out.side_z = side(f_z);
  out.side_tilde = side(f_ztilde);
  out.chose_tilde = out.side_tilde > out.side_z;  // ties go to z
  out.bound = ell / 2 * dz_ztilde * (1 / A + 1 / B);
  Rational winner = out.chose_tilde ? out.side_tilde : out.side_z;
  out.dichotomy_ok = winner >= out.bound;
  return out;
}

namespace {

struct NormalizedEmbedding {
  const Embedding* f = nullptr;
  Rational inv_upper;

  Vec value(const std::string& key, const std::string& context) const {
    if (!f->has(key))
      throw Error("embedding lacks a value for witness point " + key + " (" + context + ")");
    return scale(f->at(key), inv_upper);
  }
};

}  // namespace

MartingaleTrace extract_martingale(const Embedding& f, const WitnessOracle& oracle,
                                   const std::string& u_key, const std::string& v_key,
                                   int steps, ExtractionMode mode, const Rational& c,
                                   double tolerance) {
  if (steps < 0) throw InvalidInput("steps must be >= 0");
  if (c <= 0) throw InvalidInput("width constant must be positive");
  if (f.certified_upper <= 0 || f.certified_lower <= 0)
    throw InvalidInput(
        "embedding must carry positive certified Lipschitz constants; a constant map has "
        "ell = 0 and admits no extraction");
  if (f.certified_lower > f.certified_upper)
    throw InvalidInput("embedding certificate has lower > upper");

  MartingaleTrace trace;
  trace.mode = mode;
  trace.norm = f.norm;
  trace.ell = f.certified_lower / f.certified_upper;
  trace.c = c;

  NormalizedEmbedding nf{&f, 1 / f.certified_upper};
  Rational tol = f.norm.exact() ? Rational(0) : rational_from_double(tolerance);

  auto call_oracle = [&](size_t segment, const std::string& a, const std::string& b) {
    try {
      return oracle(a, b);
    } catch (const ResourceLimit&) {
      throw;
    } catch (const std::exception& e) {
      throw Error("witness oracle failed at segment " + std::to_string(segment) + " (" + a +
                  " .. " + b + "): " + e.what());
    }
  };

  ThickWitness probe = call_oracle(0, u_key, v_key);
  const Rational duv = probe.space->distance(probe.u0, probe.v0);
  if (duv <= 0) throw InvalidInput("extraction endpoints must be distinct");
  trace.duv = duv;

  std::vector<std::string> keys{u_key, v_key};
  std::vector<Rational> seglens{duv};
  Partition part;
  part.breakpoints = {Rational(0), Rational(1)};

  auto make_step = [&](const std::vector<std::string>& ks, const std::vector<Rational>& segs,
                       const Partition& p) {
    StepFunction sf;
    sf.norm = f.norm;
    if (mode == ExtractionMode::Geodesic) {
      sf.partition.breakpoints.push_back(Rational(0));
      Rational prefix(0);
      for (size_t k = 0; k < segs.size(); ++k) {
        prefix += segs[k];
        sf.partition.breakpoints.push_back(prefix / duv);
        Vec diff = sub(nf.value(ks[k + 1], "chain"), nf.value(ks[k], "chain"));
        sf.values.push_back(scale(diff, 1 / segs[k]));
      }
    } else {
      sf.partition = p;
      for (int i = 0; i < p.intervals(); ++i) {
        Vec diff = sub(nf.value(ks[static_cast<size_t>(i) + 1], "chain"),
                       nf.value(ks[static_cast<size_t>(i)], "chain"));
        sf.values.push_back(scale(diff, 1 / p.interval_length(i)));
      }
    }
    sf.validate();
    return sf;
  };

  MartingaleStep m0;
  m0.function = make_step(keys, seglens, part);
  m0.point_keys = keys;
  trace.steps.push_back(std::move(m0));

  Rational cert_bound = mode == ExtractionMode::Geodesic
                            ? Rational(trace.ell * c / 4)
                            : Rational(trace.ell * c * duv / 4);

  trace.b_ratio_observed = 1;
  bool used_probe = false;
  std::vector<ThickWitness> witnesses;

  while (static_cast<int>(trace.steps.size()) <= steps) {
    // Odd step: run the oracle over every consecutive pair and splice the
    // w-chains. Witness distances must telescope to the segment lengths,
    // which pins the chains to geodesics across levels.
    witnesses.clear();
    std::vector<std::string> new_keys{keys.front()};
    std::vector<Rational> new_segs;
    std::vector<int> anchors{0};
    for (size_t t = 0; t + 1 < keys.size(); ++t) {
      ThickWitness wt = (!used_probe && t == 0 && keys.size() == 2)
                            ? std::move(probe)
                            : call_oracle(t, keys[t], keys[t + 1]);
      if (t == 0) used_probe = true;
      WitnessReport rep = verify_thick_witness(wt, c);
      if (!rep.pass) {
        std::string why;
        for (const ClauseResult& cl : rep.clauses)
          if (!cl.pass) {
            why = cl.clause + (cl.detail.empty() ? "" : ": " + cl.detail);
            break;
          }
        throw Error("oracle witness fails verification at segment " + std::to_string(t) +
                    " (" + keys[t] + " .. " + keys[t + 1] + "): " + why);
      }
      if (wt.w_keys.front() != keys[t] || wt.w_keys.back() != keys[t + 1])
        throw Error("oracle witness endpoints disagree at segment " + std::to_string(t));
      Rational total(0);
      std::vector<Rational> wsegs;
      for (size_t i = 1; i < wt.w.size(); ++i) {
        wsegs.push_back(wt.space->distance(wt.w[i - 1], wt.w[i]));
        total += wsegs.back();
      }
      if (total != seglens[t])
        throw Error("oracle witness changed the segment length at segment " +
                    std::to_string(t) + ": " + to_string(total) + " vs " +
                    to_string(seglens[t]));
      for (size_t i = 1; i < wt.w_keys.size(); ++i) {
        new_keys.push_back(wt.w_keys[i]);
        new_segs.push_back(wsegs[i - 1]);
      }
      anchors.push_back(static_cast<int>(new_keys.size()) - 1);
      witnesses.push_back(std::move(wt));
    }
    if (mode == ExtractionMode::Iso) part = refine_partition(part, anchors, new_segs);
    keys = std::move(new_keys);
    seglens = std::move(new_segs);

    MartingaleStep odd;
    odd.function = make_step(keys, seglens, part);
    odd.point_keys = keys;
    trace.steps.push_back(std::move(odd));
    if (static_cast<int>(trace.steps.size()) > steps) break;

    // Even step: pick a branch at every fork; the partition does not depend
    // on the choices because fork distances agree on both sides.
    std::vector<std::string> ext_keys{keys.front()};
    std::vector<Rational> ext_segs;
    std::vector<BranchRecord> records;
    size_t base = 0;
    for (size_t wi = 0; wi < witnesses.size(); ++wi) {
      const ThickWitness& wt = witnesses[wi];
      for (int i = 1; i <= wt.forks(); ++i) {
        const GraphPoint& zp = wt.z[static_cast<size_t>(i) - 1];
        const GraphPoint& tp = wt.ztilde[static_cast<size_t>(i) - 1];
        Rational A = wt.space->distance(wt.w[static_cast<size_t>(i) - 1], zp);
        Rational B = wt.space->distance(zp, wt.w[static_cast<size_t>(i)]);
        ext_segs.push_back(A);
        ext_segs.push_back(B);
        BranchRecord rec;
        rec.segment = static_cast<int>(base + static_cast<size_t>(i) - 1);
        rec.fork = i;
        rec.z_key = wt.z_keys[static_cast<size_t>(i) - 1];
        rec.zt_key = wt.zt_keys[static_cast<size_t>(i) - 1];
        records.push_back(rec);
        ext_keys.push_back(rec.z_key);  // placeholder, replaced after the decision
        ext_keys.push_back(wt.w_keys[static_cast<size_t>(i)]);
      }
      base += wt.w.size() - 1;
    }

    Partition ext_part;
    std::vector<int> even_anchors(keys.size());
    for (size_t k = 0; k < keys.size(); ++k) even_anchors[k] = static_cast<int>(2 * k);
    if (mode == ExtractionMode::Iso) ext_part = refine_partition(part, even_anchors, ext_segs);

    size_t slot = 1;  // position of the current fork key inside ext_keys
    size_t rec_i = 0;
    for (size_t wi = 0; wi < witnesses.size(); ++wi) {
      const ThickWitness& wt = witnesses[wi];
      for (int i = 1; i <= wt.forks(); ++i, ++rec_i, slot += 2) {
        BranchRecord& rec = records[rec_i];
        const GraphPoint& zp = wt.z[static_cast<size_t>(i) - 1];
        const GraphPoint& tp = wt.ztilde[static_cast<size_t>(i) - 1];
        std::string ctx = "segment " + std::to_string(rec.segment) + ", fork " +
                          std::to_string(rec.fork);
        Rational A, B;
        if (mode == ExtractionMode::Geodesic) {
          A = ext_segs[slot - 1];
          B = ext_segs[slot];
        } else {
          A = ext_part.interval_length(static_cast<int>(slot) - 1);
          B = ext_part.interval_length(static_cast<int>(slot));
        }
        Rational dzzt = wt.space->distance(zp, tp);
        std::string wprev_key = ext_keys[slot - 1];
        std::string wnext_key = ext_keys[slot + 1];
        rec.decision = choose_branch(nf.value(wprev_key, ctx), nf.value(rec.z_key, ctx),
                                     nf.value(rec.zt_key, ctx), nf.value(wnext_key, ctx), A, B,
                                     dzzt, trace.ell, f.norm);
        if (!rec.decision.precondition_ok)
          throw Error("embedding violates its certified lower constant on the fork pair (" +
                      rec.z_key + ", " + rec.zt_key + ") at " + ctx);
        if (!rec.decision.dichotomy_ok)
          trace.flags.push_back("branch dichotomy below bound at " + ctx +
                                "; the certified lower constant looks wrong");
        if (rec.decision.chose_tilde) ext_keys[slot] = rec.zt_key;
      }
    }

    keys = std::move(ext_keys);
    seglens = std::move(ext_segs);
    if (mode == ExtractionMode::Iso) part = std::move(ext_part);

    MartingaleStep even;
    even.function = make_step(keys, seglens, part);
    even.point_keys = keys;
    even.choices = std::move(records);
    even.has_certificate = true;
    even.l1_difference =
        l1_distance(even.function, trace.steps.back().function);
    even.required_bound = cert_bound;
    even.certificate_pass = even.l1_difference + tol >= cert_bound;
    trace.steps.push_back(std::move(even));

    if (mode == ExtractionMode::Iso) {
      Rational b = b_equivalence_ratio(part, partition_from_lengths(seglens));
      if (b > trace.b_ratio_observed) trace.b_ratio_observed = b;
    }
  }

  trace.max_sup_norm = 0;
  for (const MartingaleStep& s : trace.steps) {
    Rational n = sup_norm(s.function);
    if (n > trace.max_sup_norm) trace.max_sup_norm = n;
  }
  trace.sup_norm_bound = mode == ExtractionMode::Geodesic
                             ? Rational(1)
                             : Rational(trace.b_ratio_observed * duv);
  if (trace.max_sup_norm > trace.sup_norm_bound + tol)
    trace.flags.push_back("sup norm " + to_string(trace.max_sup_norm) +
                          " exceeds the expected bound " + to_string(trace.sup_norm_bound));

  trace.certificates_pass = true;
  for (const MartingaleStep& s : trace.steps)
    if (s.has_certificate && !s.certificate_pass) trace.certificates_pass = false;
  return trace;
}

TraceCheck verify_martingale_trace(const MartingaleTrace& trace) {
  TraceCheck check;
  check.nested = true;
  check.martingale_property = true;
  check.bounded = true;
  check.certificates = true;
  check.contraction = true;

  for (size_t k = 0; k + 1 < trace.steps.size(); ++k) {
    const Partition& coarse = trace.steps[k].function.partition;
    const Partition& fine = trace.steps[k + 1].function.partition;
    if (!std::includes(fine.breakpoints.begin(), fine.breakpoints.end(),
                       coarse.breakpoints.begin(), coarse.breakpoints.end())) {
      check.nested = false;
      check.failures.push_back("partition of step " + std::to_string(k) +
                               " is not refined by step " + std::to_string(k + 1));
      continue;
    }
    StepFunction projected = conditional_expectation(trace.steps[k + 1].function, coarse);
    if (!(projected == trace.steps[k].function)) {
      check.martingale_property = false;
      check.failures.push_back("conditional expectation of step " + std::to_string(k + 1) +
                               " differs from step " + std::to_string(k));
    }
  }

  Rational tol = trace.norm.exact() ? Rational(0) : rational_from_double(1e-9);
  for (size_t k = 0; k < trace.steps.size(); ++k) {
    Rational n = sup_norm(trace.steps[k].function);
    if (n > trace.sup_norm_bound + tol) {
      check.bounded = false;
      check.failures.push_back("step " + std::to_string(k) + " sup norm " + to_string(n) +
                               " exceeds bound " + to_string(trace.sup_norm_bound));
    }
  }

  for (size_t k = 0; k < trace.steps.size(); ++k) {
    const MartingaleStep& s = trace.steps[k];
    if (!s.has_certificate) continue;
    Rational diff = l1_distance(s.function, trace.steps[k - 1].function);
    if (diff != s.l1_difference)
      check.failures.push_back("recorded L1 difference at step " + std::to_string(k) +
                               " does not match recomputation");
    if (diff + tol < s.required_bound) {
      check.certificates = false;
      check.failures.push_back("step " + std::to_string(k) + " difference " + to_string(diff) +
                               " misses the bound " + to_string(s.required_bound));
    }
  }

  for (size_t k = 3; k < trace.steps.size(); k += 2) {
    // |M_{2n+1} - M_{2n-1}| >= |M_{2n} - M_{2n-1}|: conditional expectation is
    // a contraction.
    Rational lhs = l1_distance(trace.steps[k].function, trace.steps[k - 2].function);
    Rational rhs = l1_distance(trace.steps[k - 1].function, trace.steps[k - 2].function);
    if (lhs + tol < rhs) {
      check.contraction = false;
      check.failures.push_back("contraction fails between steps " + std::to_string(k - 2) +
                               ", " + std::to_string(k - 1) + ", " + std::to_string(k));
    }
  }

  check.pass = check.nested && check.martingale_property && check.bounded &&
               check.certificates && check.contraction && check.failures.empty();
  return check;
}

}  // namespace metricgeo
