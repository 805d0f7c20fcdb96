#include <doctest.h>

#include "metricgeo/errors.hpp"
#include "metricgeo/reflexivity.hpp"
#include "metricgeo/rng.hpp"
#include "metricgeo/simplex.hpp"

using namespace metricgeo;

TEST_CASE("exact lp solves a textbook instance") {
  // min -x - y s.t. x + y + s = 2, x + 2y + t = 3: optimum -2 at (2, 0) or
  // any point on x + y = 2 ... the objective favors x + y = 2, value -2.
  std::vector<std::vector<Rational>> A{{Rational(1), Rational(1), Rational(1), Rational(0)},
                                       {Rational(1), Rational(2), Rational(0), Rational(1)}};
  std::vector<Rational> b{Rational(2), Rational(3)};
  std::vector<Rational> c{Rational(-1), Rational(-1), Rational(0), Rational(0)};
  LpResult r = solve_lp(A, b, c);
  REQUIRE(r.status == LpResult::Status::Optimal);
  CHECK(r.objective == -2);

  // Infeasible: x = -1 with x >= 0.
  LpResult inf = solve_lp({{Rational(1)}}, {Rational(-1)}, {Rational(0)});
  CHECK(inf.status == LpResult::Status::Infeasible);

  // Unbounded: min -x s.t. x - s = 0.
  LpResult unb = solve_lp({{Rational(1), Rational(-1)}}, {Rational(0)},
                          {Rational(-1), Rational(0)});
  CHECK(unb.status == LpResult::Status::Unbounded);
}

TEST_CASE("active pair predicate") {
  Vec zero2{Rational(0), Rational(0)};
  CHECK(is_active(Vec{Rational(1), Rational(1)}, zero2, Rational(1)));
  Vec zero3{Rational(0), Rational(0), Rational(0)};
  // (1,-1,1): l1 = 3 > 2 * summing = 2.
  CHECK_FALSE(is_active(Vec{Rational(1), Rational(-1), Rational(1)}, zero3, Rational(2)));
  CHECK(is_active(zero3, zero3, Rational(2)));
  CHECK_THROWS_AS(is_active(zero2, zero2, make_rational(1, 2)), InvalidInput);
}

TEST_CASE("activity is monotone in Delta") {
  Rng rng(5150);
  for (int trial = 0; trial < 300; ++trial) {
    Vec z;
    size_t dim = 1 + rng.below(5);
    for (size_t i = 0; i < dim; ++i) z.push_back(rng.rational(9, 9));
    Vec zero(dim, Rational(0));
    for (long d = 1; d < 5; ++d)
      if (is_active(z, zero, Rational(d))) CHECK(is_active(z, zero, Rational(d + 1)));
  }
}

TEST_CASE("basic constant of disjoint unit vectors is 1") {
  std::vector<Vec> vectors;
  for (int i = 0; i < 4; ++i) {
    Vec v(4, Rational(0));
    v[static_cast<size_t>(i)] = 1;
    vectors.push_back(std::move(v));
  }
  BasicConstantResult r = basic_constant(vectors, Norm::linf(), 100);
  CHECK(r.value == 1);
  CHECK(r.exact);
  CHECK(r.method == "vertex-enumeration");
}

TEST_CASE("single vectors have basic constant 1") {
  BasicConstantResult r = basic_constant({Vec{Rational(2), Rational(1)}}, Norm::linf(), 10);
  CHECK(r.value == 1);
  CHECK(r.exact);
}

TEST_CASE("dependent vectors are rejected") {
  Vec v{Rational(1), Rational(1)};
  CHECK_THROWS_AS(basic_constant({v, v}, Norm::linf(), 10), InvalidInput);
}

TEST_CASE("prefix vectors have basic constant exactly 2") {
  for (int n : {2, 4, 8}) {
    ReflexivityWitness w = prefix_vector_witness(n);
    BasicConstantResult r = basic_constant(w.vectors, w.norm, 0);
    CHECK(r.exact);
    CHECK(r.value == 2);
  }
  // The sampled estimate can only fall below the exact value.
  ReflexivityWitness w6 = prefix_vector_witness(6);
  BasicConstantResult exact = basic_constant(w6.vectors, w6.norm, 0);
  std::vector<Vec> padded = w6.vectors;  // force the sampled path with l1
  BasicConstantResult sampled = basic_constant(padded, Norm::l1(), 2000, 7);
  CHECK_FALSE(sampled.method == "vertex-enumeration");
  CHECK(sampled.value >= 1);
  CHECK(exact.value == 2);
}

TEST_CASE("prefix witness validates and passes the forward check") {
  ReflexivityWitness w = prefix_vector_witness(8);
  CHECK_NOTHROW(validate_reflexivity_witness(w));
  ForwardCheckReport r = forward_embedding_check(w, Rational(2), Rational(2), 500, 11);
  CHECK(r.pass);
  CHECK(r.samples == 500);
  CHECK(r.violations == 0);
  CHECK(r.lower_factor == make_rational(1, 4));
}

TEST_CASE("corrupted witnesses are rejected before sampling") {
  ReflexivityWitness w = prefix_vector_witness(8);
  w.vectors[2][0] = 0;  // f(y_3) != theta
  CHECK_THROWS_AS(forward_embedding_check(w, Rational(2), Rational(2), 10, 1), InvalidInput);

  ReflexivityWitness bad_norm = prefix_vector_witness(4);
  bad_norm.vectors[1] = Vec{Rational(2), Rational(2), Rational(0), Rational(0)};
  CHECK_THROWS_AS(validate_reflexivity_witness(bad_norm), InvalidInput);

  ReflexivityWitness bad_f = prefix_vector_witness(4);
  bad_f.functional[0] = make_rational(1, 2);
  CHECK_THROWS_AS(validate_reflexivity_witness(bad_f), InvalidInput);
}

TEST_CASE("positive decomposition identities") {
  auto [pos, neg] = positive_decomposition(Vec{Rational(1), Rational(-2)});
  CHECK(pos == Vec{Rational(1), Rational(0)});
  CHECK(neg == Vec{Rational(0), Rational(2)});
  CHECK(l1_norm(Vec{Rational(1), Rational(-2)}) == l1_norm(pos) + l1_norm(neg));

  auto [p2, n2] = positive_decomposition(Vec{Rational(3), Rational(1)});
  CHECK(is_zero(n2));
  auto [p3, n3] = positive_decomposition(Vec{Rational(0), Rational(0)});
  CHECK(is_zero(p3));
  CHECK(is_zero(n3));

  Rng rng(60221023);
  for (int trial = 0; trial < 500; ++trial) {
    Vec z;
    size_t dim = 1 + rng.below(6);
    for (size_t i = 0; i < dim; ++i) z.push_back(rng.rational(9, 9));
    auto [x1, x2] = positive_decomposition(z);
    CHECK(l1_norm(x1) == summing_norm(x1));
    CHECK(l1_norm(x2) == summing_norm(x2));
    CHECK(l1_norm(z) == l1_norm(x1) + l1_norm(x2));
    CHECK(sub(x1, x2) == z);
  }
}

TEST_CASE("partially bilipschitz maps are lipschitz through the decomposition") {
  // T(y + z) - T(y) routes through y + x1 with both legs active, so
  // |T(y+z) - T(y)| <= C |z|_1 with the active-pair constant C = 1.
  ReflexivityWitness w = prefix_vector_witness(6);
  auto T = [&](const Vec& z) {
    Vec image(w.vectors[0].size(), Rational(0));
    for (size_t i = 0; i < z.size(); ++i)
      for (size_t t = 0; t < image.size(); ++t) image[t] += z[i] * w.vectors[i][t];
    return image;
  };
  Rng rng(8888);
  for (int trial = 0; trial < 300; ++trial) {
    Vec y, z;
    for (int i = 0; i < 6; ++i) {
      y.push_back(rng.rational(9, 9));
      z.push_back(rng.rational(9, 9));
    }
    auto [x1, x2] = positive_decomposition(z);
    Vec zero(6, Rational(0));
    CHECK(is_active(x1, zero, Rational(2)));
    CHECK(is_active(sub(z, x1), zero, Rational(2)));
    Vec diff = sub(T(add(y, z)), T(y));
    CHECK(norm_exact(diff, w.norm) <= l1_norm(z));
  }
}

TEST_CASE("hull separation on singletons and overlaps") {
  // Two points at l1 distance 5.
  std::vector<Vec> pts{Vec{Rational(0), Rational(0)}, Vec{Rational(3), Rational(2)}};
  CHECK(convex_hull_separation(pts, 1, Norm::l1()) == 5);
  CHECK(convex_hull_separation(pts, 1, Norm::linf()) == 3);

  // The same point on both sides collapses the distance.
  std::vector<Vec> overlap{Vec{Rational(1), Rational(1)}, Vec{Rational(5), Rational(0)},
                           Vec{Rational(1), Rational(1)}};
  CHECK(convex_hull_separation(overlap, 2, Norm::l1()) == 0);

  CHECK_THROWS_AS(convex_hull_separation(pts, 0, Norm::l1()), InvalidInput);
  CHECK_THROWS_AS(convex_hull_separation(pts, 2, Norm::l1()), InvalidInput);
  CHECK_THROWS_AS(convex_hull_separation(pts, 1, Norm::l2()), InvalidInput);
}

TEST_CASE("prefix/suffix simplices of the l1 basis sit at distance exactly 2") {
  for (int n : {4, 8}) {
    std::vector<Vec> basis;
    for (int i = 0; i < n; ++i) {
      Vec e(static_cast<size_t>(n), Rational(0));
      e[static_cast<size_t>(i)] = 1;
      basis.push_back(std::move(e));
    }
    for (int split : {1, n / 2, n - 1})
      CHECK(convex_hull_separation(basis, split, Norm::l1()) == 2);
  }
}

TEST_CASE("hull separation in the summing norm") {
  // conv{e1} vs conv{e2} in the summing norm: e1 - e2 has prefix sums 1, 0.
  std::vector<Vec> pts{Vec{Rational(1), Rational(0)}, Vec{Rational(0), Rational(1)}};
  CHECK(convex_hull_separation(pts, 1, Norm::summing()) == 1);
}
