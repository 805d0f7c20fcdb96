#pragma once

#include <string>
#include <vector>

#include "metricgeo/rational.hpp"

namespace metricgeo {

using Vec = std::vector<Rational>;

enum class NormKind { L1, L2, Linf, WeightedL1, Summing };

// A norm tag for finite coordinate vectors. The summing norm is
// sup_k |sum_{i<=k} x_i|; weighted l1 carries one positive weight per
// coordinate, fixed for the space.
struct Norm {
  NormKind kind = NormKind::L1;
  Vec weights;

  static Norm l1() { return {NormKind::L1, {}}; }
  static Norm l2() { return {NormKind::L2, {}}; }
  static Norm linf() { return {NormKind::Linf, {}}; }
  static Norm weighted_l1(Vec w) { return {NormKind::WeightedL1, std::move(w)}; }
  static Norm summing() { return {NormKind::Summing, {}}; }

  // Every kind except l2 evaluates exactly on rational coordinates.
  bool exact() const { return kind != NormKind::L2; }
  std::string name() const;
};

Norm norm_from_name(const std::string& name, Vec weights = {});

// Exact value; throws InvalidInput for l2 or on weight-count mismatch.
Rational norm_exact(const Vec& v, const Norm& n);

double norm_l2(const Vec& v);

// Double view of any norm.
double norm_value(const Vec& v, const Norm& n);

Rational l1_norm(const Vec& v);
Rational linf_norm(const Vec& v);
Rational summing_norm(const Vec& v);
Rational weighted_l1_norm(const Vec& v, const Vec& weights);

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rational& s);
bool is_zero(const Vec& a);

// <v, x> weighted by the space's weights (empty = plain dot product); this is
// how l_inf functionals pair with weighted-l1 vectors.
Rational pairing(const Vec& v, const Vec& x, const Vec& weights);

}  // namespace metricgeo
