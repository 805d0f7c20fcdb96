#include "metricgeo/reflexivity.hpp"

#include <algorithm>

#include "metricgeo/errors.hpp"
#include "metricgeo/rng.hpp"
#include "metricgeo/simplex.hpp"

namespace metricgeo {

bool is_active(const Vec& x, const Vec& y, const Rational& delta) {
  if (delta < 1) throw InvalidInput("Delta must be >= 1");
  Vec diff = sub(x, y);
  return l1_norm(diff) <= delta * summing_norm(diff);
}

namespace {

int exact_rank(std::vector<std::vector<Rational>> m) {
  size_t rows = m.size();
  if (rows == 0) return 0;
  size_t cols = m[0].size();
  int rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[row]);
    Rational inv = 1 / m[row][col];
    for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

// Exact inverse by Gauss-Jordan; empty when singular.
std::vector<std::vector<Rational>> exact_inverse(std::vector<std::vector<Rational>> m) {
  size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return {};
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    Rational d = 1 / m[col][col];
    for (size_t j = 0; j < n; ++j) {
      m[col][j] *= d;
      inv[col][j] *= d;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

Rational prefix_ratio(const std::vector<Vec>& vectors, const Norm& norm, const Vec& a) {
  size_t n = vectors.size();
  size_t dim = vectors[0].size();
  Vec partial(dim, Rational(0));
  Rational best(0);
  std::vector<Rational> prefix_norms;
  for (size_t k = 0; k < n; ++k) {
    for (size_t t = 0; t < dim; ++t) partial[t] += a[k] * vectors[k][t];
    prefix_norms.push_back(norm_exact(partial, norm));
  }
  const Rational& full = prefix_norms.back();
  if (full == 0) return Rational(0);
  for (const Rational& p : prefix_norms) {
    Rational r = p / full;
    if (r > best) best = r;
  }
  return best;
}

}  // namespace

BasicConstantResult basic_constant(const std::vector<Vec>& vectors, const Norm& norm,
                                   int resolution, std::uint64_t seed) {
  if (vectors.empty()) throw InvalidInput("basic_constant needs at least one vector");
  if (!norm.exact()) throw InvalidInput("basic_constant supports the exact norms only");
  size_t n = vectors.size();
  size_t dim = vectors[0].size();
  for (const Vec& v : vectors)
    if (v.size() != dim) throw InvalidInput("vectors must share one dimension");

  std::vector<std::vector<Rational>> columns(dim, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < dim; ++t) columns[t][i] = vectors[i][t];
  if (exact_rank(columns) != static_cast<int>(n))
    throw InvalidInput("basic_constant requires linearly independent vectors");

  BasicConstantResult out;
  if (n == 1) {
    out.value = 1;
    out.method = "vertex-enumeration";
    out.exact = true;
    return out;
  }

  if (norm.kind == NormKind::Linf && dim == n && n <= 20) {
    // The unit ball of |sum a_i y_i|_inf in a-coordinates is the polytope
    // |(Y a)_t| <= 1; the ratio is a convex max over it, so the maximum sits
    // at a vertex a = Y^{-1} s with s in {-1,1}^n. Exact.
    auto inv = exact_inverse(columns);
    if (inv.empty()) throw InvalidInput("basic_constant: singular vector matrix");
    Rational best(1);
    Vec a(n);
    // s and -s give the same ratio; fix the first sign.
    for (std::uint64_t mask = 0; mask < (1ull << (n - 1)); ++mask) {
      for (size_t i = 0; i < n; ++i) {
        bool negative = i > 0 && ((mask >> (i - 1)) & 1ull);
        Rational acc(0);
        for (size_t t = 0; t < n; ++t)
          acc += inv[i][t] * (t > 0 && ((mask >> (t - 1)) & 1ull) ? -1 : 1);
        a[i] = acc;
        (void)negative;
      }
      Rational r = prefix_ratio(vectors, norm, a);
      if (r > best) best = r;
    }
    out.value = best;
    out.method = "vertex-enumeration";
    out.exact = true;
    return out;
  }

  Rng rng(seed);
  Rational best(1);
  for (int s = 0; s < resolution; ++s) {
    Vec a(n, Rational(0));
    bool nonzero = false;
    for (size_t i = 0; i < n; ++i) {
      if (rng.below(3) == 0) continue;
      a[i] = rng.rational(9, 9);
      nonzero = nonzero || a[i] != 0;
    }
    if (!nonzero) continue;
    Rational r = prefix_ratio(vectors, norm, a);
    if (r > best) best = r;
  }
  out.value = best;
  out.method = "sampled";
  out.exact = false;
  return out;
}

void validate_reflexivity_witness(const ReflexivityWitness& witness) {
  if (witness.vectors.empty()) throw InvalidInput("witness needs vectors");
  if (witness.norm.kind != NormKind::Linf && witness.norm.kind != NormKind::L1)
    throw InvalidInput("witness norm must be linf or l1 so the dual norm is exact");
  if (witness.theta <= 0 || witness.theta > 1)
    throw InvalidInput("theta must lie in (0, 1]");
  size_t dim = witness.vectors[0].size();
  if (witness.functional.size() != dim)
    throw InvalidInput("functional dimension mismatch");
  Rational dual = witness.norm.kind == NormKind::Linf ? l1_norm(witness.functional)
                                                      : linf_norm(witness.functional);
  if (dual != 1)
    throw InvalidInput("functional must have dual norm 1, got " + to_string(dual));
  for (size_t i = 0; i < witness.vectors.size(); ++i) {
    const Vec& y = witness.vectors[i];
    if (y.size() != dim) throw InvalidInput("witness vectors must share one dimension");
    Rational n = norm_exact(y, witness.norm);
    if (n != 1)
      throw InvalidInput("witness vector " + std::to_string(i + 1) + " has norm " +
                         to_string(n) + ", expected 1");
    Rational fy = pairing(y, witness.functional, {});
    if (fy != witness.theta)
      throw InvalidInput("f(y_" + std::to_string(i + 1) + ") = " + to_string(fy) +
                         " differs from theta = " + to_string(witness.theta));
  }
}

ForwardCheckReport forward_embedding_check(const ReflexivityWitness& witness,
                                           const Rational& delta, const Rational& B,
                                           long samples, std::uint64_t seed) {
  validate_reflexivity_witness(witness);
  if (B < 1) throw InvalidInput("basic constant must be >= 1");
  ForwardCheckReport report;
  report.lower_factor = witness.theta / (B * delta);

  size_t n = witness.vectors.size();
  size_t dim = witness.vectors[0].size();
  Vec zero(n, Rational(0));
  Rng rng(seed);
  while (report.samples < samples) {
    Vec z(n, Rational(0));
    bool nonneg = rng.coin();
    bool nonzero = false;
    for (size_t i = 0; i < n; ++i) {
      if (rng.below(2) == 0) continue;
      Rational r = rng.rational(9, 9);
      if (nonneg) r = abs(r);
      z[i] = r;
      nonzero = nonzero || r != 0;
    }
    if (!nonzero || !is_active(z, zero, delta)) continue;
    ++report.samples;

    Vec image(dim, Rational(0));
    for (size_t i = 0; i < n; ++i)
      for (size_t t = 0; t < dim; ++t) image[t] += z[i] * witness.vectors[i][t];
    Rational image_norm = norm_exact(image, witness.norm);
    Rational z1 = l1_norm(z);
    if (image_norm < report.lower_factor * z1 || image_norm > z1) {
      ++report.violations;
      if (report.details.size() < 5)
        report.details.push_back("sample " + std::to_string(report.samples) + ": |Tz| = " +
                                 to_string(image_norm) + ", |z|_1 = " + to_string(z1));
    }
  }
  report.pass = report.violations == 0;
  return report;
}

std::pair<Vec, Vec> positive_decomposition(const Vec& z) {
  Vec pos(z.size(), Rational(0)), neg(z.size(), Rational(0));
  for (size_t i = 0; i < z.size(); ++i) {
    if (z[i] > 0) pos[i] = z[i];
    if (z[i] < 0) neg[i] = -z[i];
  }
  return {pos, neg};
}

Rational convex_hull_separation(const std::vector<Vec>& points, int split, const Norm& norm) {
  int m = static_cast<int>(points.size());
  if (m < 2 || split < 1 || split >= m)
    throw InvalidInput("convex_hull_separation needs 1 <= split < point count");
  size_t dim = points[0].size();
  for (const Vec& p : points)
    if (p.size() != dim) throw InvalidInput("points must share one dimension");
  if (norm.kind == NormKind::L2)
    throw InvalidInput("convex_hull_separation supports the polyhedral norms only");
  if (norm.kind == NormKind::WeightedL1 && norm.weights.size() != dim)
    throw InvalidInput("weight count mismatch");

  // diff_d(a, b) = sum_i a_i points[i][d] - sum_j b_j points[split+j][d];
  // for summing we bound prefix sums of diff instead of coordinates.
  bool prefix = norm.kind == NormKind::Summing;
  bool single_t = prefix || norm.kind == NormKind::Linf;
  size_t tcount = single_t ? 1 : dim;

  auto coefficient = [&](int point, size_t d) {
    if (!prefix) return points[static_cast<size_t>(point)][d];
    Rational acc(0);
    for (size_t t = 0; t <= d; ++t) acc += points[static_cast<size_t>(point)][t];
    return acc;
  };

  size_t na = static_cast<size_t>(split);
  size_t nb = static_cast<size_t>(m - split);
  size_t nvars = na + nb + tcount + 2 * dim;  // a, b, t, two slack blocks
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> rhs;

  for (size_t d = 0; d < dim; ++d) {
    for (int sign = 0; sign < 2; ++sign) {
      std::vector<Rational> row(nvars, Rational(0));
      Rational flip = sign == 0 ? 1 : -1;
      for (size_t i = 0; i < na; ++i) row[i] = flip * coefficient(static_cast<int>(i), d);
      for (size_t j = 0; j < nb; ++j)
        row[na + j] = -flip * coefficient(split + static_cast<int>(j), d);
      row[na + nb + (single_t ? 0 : d)] = -1;
      row[na + nb + tcount + static_cast<size_t>(sign) * dim + d] = 1;
      A.push_back(std::move(row));
      rhs.emplace_back(0);
    }
  }
  {
    std::vector<Rational> row(nvars, Rational(0));
    for (size_t i = 0; i < na; ++i) row[i] = 1;
    A.push_back(std::move(row));
    rhs.emplace_back(1);
  }
  {
    std::vector<Rational> row(nvars, Rational(0));
    for (size_t j = 0; j < nb; ++j) row[na + j] = 1;
    A.push_back(std::move(row));
    rhs.emplace_back(1);
  }

  std::vector<Rational> cost(nvars, Rational(0));
  for (size_t t = 0; t < tcount; ++t) {
    Rational w(1);
    if (norm.kind == NormKind::WeightedL1) w = norm.weights[t];
    cost[na + nb + t] = w;
  }

  LpResult lp = solve_lp(std::move(A), std::move(rhs), std::move(cost));
  if (lp.status != LpResult::Status::Optimal)
    throw Error("internal: hull-separation program did not reach an optimum");
  return lp.objective;
}

ReflexivityWitness prefix_vector_witness(int n) {
  if (n < 1) throw InvalidInput("prefix witness needs n >= 1");
  ReflexivityWitness w;
  w.norm = Norm::linf();
  w.theta = 1;
  w.functional.assign(static_cast<size_t>(n), Rational(0));
  w.functional[0] = 1;
  for (int i = 1; i <= n; ++i) {
    Vec y(static_cast<size_t>(n), Rational(0));
    for (int t = 0; t < i; ++t) y[static_cast<size_t>(t)] = 1;
    w.vectors.push_back(std::move(y));
  }
  return w;
}

}  // namespace metricgeo
