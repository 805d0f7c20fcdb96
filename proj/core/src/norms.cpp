#include "metricgeo/norms.hpp"

#include <cmath>

namespace metricgeo {

std::string Norm::name() const {
  switch (kind) {
    case NormKind::L1: return "l1";
    case NormKind::L2: return "l2";
    case NormKind::Linf: return "linf";
    case NormKind::WeightedL1: return "weighted_l1";
    case NormKind::Summing: return "summing";
  }
  return "?";
}

Norm norm_from_name(const std::string& name, Vec weights) {
  if (name == "l1") return Norm::l1();
  if (name == "l2") return Norm::l2();
  if (name == "linf") return Norm::linf();
  if (name == "summing") return Norm::summing();
  if (name == "weighted_l1") {
    if (weights.empty()) throw InvalidInput("weighted_l1 norm requires weights");
    for (const Rational& w : weights)
      if (w <= 0) throw InvalidInput("weighted_l1 weights must be positive");
    return Norm::weighted_l1(std::move(weights));
  }
  throw InvalidInput("unknown norm: " + name);
}

Rational l1_norm(const Vec& v) {
  Rational s(0);
  for (const Rational& x : v) s += abs(x);
  return s;
}

Rational linf_norm(const Vec& v) {
  Rational m(0);
  for (const Rational& x : v) {
    Rational a = abs(x);
    if (a > m) m = a;
  }
  return m;
}

Rational summing_norm(const Vec& v) {
  Rational prefix(0), m(0);
  for (const Rational& x : v) {
    prefix += x;
    Rational a = abs(prefix);
    if (a > m) m = a;
  }
  return m;
}

Rational weighted_l1_norm(const Vec& v, const Vec& weights) {
  if (weights.size() != v.size())
    throw InvalidInput("weighted_l1: weight count " + std::to_string(weights.size()) +
                       " does not match dimension " + std::to_string(v.size()));
  Rational s(0);
  for (size_t i = 0; i < v.size(); ++i) s += weights[i] * abs(v[i]);
  return s;
}

Rational norm_exact(const Vec& v, const Norm& n) {
  switch (n.kind) {
    case NormKind::L1: return l1_norm(v);
    case NormKind::Linf: return linf_norm(v);
    case NormKind::Summing: return summing_norm(v);
    case NormKind::WeightedL1: return weighted_l1_norm(v, n.weights);
    case NormKind::L2: throw InvalidInput("l2 norm has no exact rational value");
  }
  throw InvalidInput("bad norm kind");
}

double norm_l2(const Vec& v) {
  double s = 0;
  for (const Rational& x : v) {
    double d = to_double(x);
    s += d * d;
  }
  return std::sqrt(s);
}

double norm_value(const Vec& v, const Norm& n) {
  if (n.kind == NormKind::L2) return norm_l2(v);
  return to_double(norm_exact(v, n));
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InvalidInput("vector dimension mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InvalidInput("vector dimension mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Vec& a, const Rational& s) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

bool is_zero(const Vec& a) {
  for (const Rational& x : a)
    if (x != 0) return false;
  return true;
}

Rational pairing(const Vec& v, const Vec& x, const Vec& weights) {
  if (v.size() != x.size()) throw InvalidInput("pairing dimension mismatch");
  if (!weights.empty() && weights.size() != v.size())
    throw InvalidInput("pairing weight count mismatch");
  Rational s(0);
  for (size_t i = 0; i < v.size(); ++i) {
    Rational term = v[i] * x[i];
    if (!weights.empty()) term *= weights[i];
    s += term;
  }
  return s;
}

}  // namespace metricgeo
