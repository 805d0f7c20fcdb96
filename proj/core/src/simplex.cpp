#include "metricgeo/simplex.hpp"

#include "metricgeo/errors.hpp"

namespace metricgeo {

namespace {

// Tableau rows carry the constraint coefficients plus the rhs in the last
// column; `cost` is the reduced-cost row with the negated objective value in
// its last slot.
struct Tableau {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> cost;
  std::vector<int> basis;

  size_t cols() const { return cost.size(); }

  void pivot(size_t r, size_t c) {
    Rational inv = 1 / rows[r][c];
    for (Rational& x : rows[r]) x *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational factor = rows[i][c];
      for (size_t j = 0; j < cols(); ++j) rows[i][j] -= factor * rows[r][j];
    }
    if (cost[c] != 0) {
      Rational factor = cost[c];
      for (size_t j = 0; j < cols(); ++j) cost[j] -= factor * rows[r][j];
    }
    basis[r] = static_cast<int>(c);
  }

  // Bland's rule: first negative reduced cost enters; leaving row breaks
  // ratio ties on the smallest basis column. Returns false when optimal,
  // throws Unbounded via the result status sentinel.
  enum class StepResult { Optimal, Pivoted, Unbounded };

  StepResult step(size_t usable_cols) {
    size_t enter = usable_cols;
    for (size_t j = 0; j < usable_cols; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == usable_cols) return StepResult::Optimal;
    size_t leave = rows.size();
    Rational best_ratio;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i][enter] <= 0) continue;
      Rational ratio = rows[i].back() / rows[i][enter];
      if (leave == rows.size() || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == rows.size()) return StepResult::Unbounded;
    pivot(leave, enter);
    return StepResult::Pivoted;
  }
};

}  // namespace

LpResult solve_lp(std::vector<std::vector<Rational>> A, std::vector<Rational> b,
                  std::vector<Rational> c) {
  size_t m = A.size();
  size_t n = c.size();
  if (b.size() != m) throw InvalidInput("lp: row count mismatch");
  for (const auto& row : A)
    if (row.size() != n) throw InvalidInput("lp: column count mismatch");

  for (size_t i = 0; i < m; ++i)
    if (b[i] < 0) {
      for (Rational& x : A[i]) x = -x;
      b[i] = -b[i];
    }

  Tableau t;
  size_t total = n + m + 1;  // artificials + rhs
  t.rows.assign(m, std::vector<Rational>(total, Rational(0)));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) t.rows[i][j] = A[i][j];
    t.rows[i][n + i] = 1;
    t.rows[i].back() = b[i];
    t.basis.push_back(static_cast<int>(n + i));
  }

  // Phase 1: minimize the artificial sum. Reduced costs of the original
  // columns are the negated column sums.
  t.cost.assign(total, Rational(0));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < m; ++i) t.cost[j] -= t.rows[i][j];
  for (size_t i = 0; i < m; ++i) t.cost.back() -= t.rows[i].back();

  while (true) {
    auto r = t.step(n + m);
    if (r == Tableau::StepResult::Optimal) break;
    if (r == Tableau::StepResult::Unbounded) throw Error("internal: phase-1 unbounded");
  }
  LpResult result;
  if (-t.cost.back() > 0) {
    result.status = LpResult::Status::Infeasible;
    return result;
  }

  // Drive leftover artificials out of the basis; rows that cannot pivot are
  // redundant and harmless with a zero rhs.
  for (size_t i = 0; i < m; ++i) {
    if (t.basis[i] < static_cast<int>(n)) continue;
    for (size_t j = 0; j < n; ++j)
      if (t.rows[i][j] != 0) {
        t.pivot(i, j);
        break;
      }
  }

  // Phase 2 over the original columns only.
  t.cost.assign(total, Rational(0));
  for (size_t j = 0; j < n; ++j) t.cost[j] = c[j];
  for (size_t i = 0; i < m; ++i) {
    int bj = t.basis[i];
    if (bj < static_cast<int>(n) && c[static_cast<size_t>(bj)] != 0) {
      Rational factor = c[static_cast<size_t>(bj)];
      for (size_t j = 0; j < total; ++j) t.cost[j] -= factor * t.rows[i][j];
    }
  }

  while (true) {
    auto r = t.step(n);
    if (r == Tableau::StepResult::Optimal) break;
    if (r == Tableau::StepResult::Unbounded) {
      result.status = LpResult::Status::Unbounded;
      return result;
    }
  }

  result.status = LpResult::Status::Optimal;
  result.objective = -t.cost.back();
  result.x.assign(n, Rational(0));
  for (size_t i = 0; i < m; ++i)
    if (t.basis[i] < static_cast<int>(n))
      result.x[static_cast<size_t>(t.basis[i])] = t.rows[i].back();
  return result;
}

}  // namespace metricgeo
