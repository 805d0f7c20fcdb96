#pragma once

#include <vector>

#include "metricgeo/rational.hpp"

namespace metricgeo {

// Exact rational linear programming:
//   minimize c^T x  subject to  A x = b, x >= 0.
// Two-phase primal simplex with Bland's rule, so it terminates on every
// input. Intended for small certification programs, not bulk solving.
struct LpResult {
  enum class Status { Optimal, Infeasible, Unbounded } status = Status::Infeasible;
  Rational objective;
  std::vector<Rational> x;
};

LpResult solve_lp(std::vector<std::vector<Rational>> A, std::vector<Rational> b,
                  std::vector<Rational> c);

}  // namespace metricgeo
