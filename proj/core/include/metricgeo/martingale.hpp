#pragma once

#include <string>
#include <vector>

#include "metricgeo/embedding.hpp"
#include "metricgeo/step_function.hpp"
#include "metricgeo/witness.hpp"

namespace metricgeo {

// The per-fork lower estimate: A|x-z| + B|y-z| >= (1/2)|x-y| min{A,B}. Holds
// for every input by the triangle inequality; pass is reported, not assumed.
struct IntervalBound {
  Rational lhs;
  Rational rhs;
  bool pass = false;
};

IntervalBound interval_lower_bound(const Rational& A, const Rational& B, const Vec& x,
                                   const Vec& y, const Vec& z, const Norm& norm);

// The branch dichotomy at one fork. Side values are the two normalized
// difference norms; the winner must reach (ell/2) d(z,ztilde)(1/A + 1/B)
// whenever the certified ell is honest. Ties pick z.
struct BranchDecision {
  bool precondition_ok = false;  // |f(z)-f(ztilde)| >= ell d(z,ztilde)
  bool chose_tilde = false;
  Rational side_z;
  Rational side_tilde;
  Rational bound;
  bool dichotomy_ok = false;
};

BranchDecision choose_branch(const Vec& f_wprev, const Vec& f_z, const Vec& f_ztilde,
                             const Vec& f_wnext, const Rational& A, const Rational& B,
                             const Rational& dz_ztilde, const Rational& ell, const Norm& norm);

enum class ExtractionMode { Geodesic, Iso };

struct BranchRecord {
  int segment = 0;  // which consecutive pair of the previous chain
  int fork = 0;
  std::string z_key, zt_key;
  BranchDecision decision;
};

struct MartingaleStep {
  StepFunction function;
  std::vector<std::string> point_keys;
  std::vector<BranchRecord> choices;  // even steps only
  bool has_certificate = false;       // even steps carry the lower bound
  Rational l1_difference;
  Rational required_bound;
  bool certificate_pass = false;
};

struct MartingaleTrace {
  ExtractionMode mode = ExtractionMode::Geodesic;
  Norm norm;
  Rational ell;  // certified lower / certified upper
  Rational c;
  Rational duv;  // raw d(u,v) before normalization
  std::vector<MartingaleStep> steps;  // M_0 .. M_k
  bool certificates_pass = false;
  Rational max_sup_norm;
  Rational sup_norm_bound;       // 1 in geodesic mode, B*C*d(u,v) reading in iso mode
  Rational b_ratio_observed;     // iso mode: worst iterated-vs-direct ratio seen
  std::vector<std::string> flags;  // non-fatal observations
};

// Runs the proof's construction: odd steps refine every consecutive pair
// through the oracle, even steps choose a branch at every fork and carry the
// (1/4) ell c d(u,v) certificate. The embedding is normalized to upper
// constant 1 (and the metric to d(u,v) = 1 in geodesic mode) before use.
MartingaleTrace extract_martingale(const Embedding& f, const WitnessOracle& oracle,
                                   const std::string& u_key, const std::string& v_key,
                                   int steps, ExtractionMode mode,
                                   const Rational& c, double tolerance = 1e-9);

struct TraceCheck {
  bool nested = false;
  bool martingale_property = false;  // conditional expectations match exactly
  bool bounded = false;
  bool certificates = false;
  bool contraction = false;  // |M_{2n+1} - M_{2n-1}| >= |M_{2n} - M_{2n-1}|
  bool pass = false;
  std::vector<std::string> failures;
};

// Independent re-verification of a finished trace.
TraceCheck verify_martingale_trace(const MartingaleTrace& trace);

}  // namespace metricgeo
