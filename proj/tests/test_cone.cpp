// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

#include <doctest.h>

#include "oilo/cone.hpp"
#include "oilo/verify.hpp"

using namespace oilo;

namespace {

Vec v2(double a, double b) { return (Vec(2) << a, b).finished(); }

// Brute-force oracle: min ||l1 g1 + l2 g2 - x|| over a nonnegative grid,
// refined around the best cell.
Vec grid_nnls_2d(const Vec& g1, const Vec& g2, const Vec& x) {
  double best = 1e300;
  double b1 = 0, b2 = 0;
  double lo1 = 0, hi1 = 5, lo2 = 0, hi2 = 5;
  for (int refine = 0; refine < 6; ++refine) {
    const int n = 60;
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) {
        double l1 = lo1 + (hi1 - lo1) * i / n;
        double l2 = lo2 + (hi2 - lo2) * j / n;
        double r = (l1 * g1 + l2 * g2 - x).norm();
        if (r < best) {
          best = r;
          b1 = l1;
          b2 = l2;
        }
      }
    }
    double w1 = (hi1 - lo1) / n, w2 = (hi2 - lo2) / n;
    lo1 = std::max(0.0, b1 - 2 * w1);
    hi1 = b1 + 2 * w1;
    lo2 = std::max(0.0, b2 - 2 * w2);
    hi2 = b2 + 2 * w2;
  }
  return b1 * g1 + b2 * g2;
}

// 1-D oracle: nearest point on the ray {t g : t >= 0}.
Vec ray_project(const Vec& g, const Vec& x) {
  double t = std::max(0.0, g.dot(x) / g.squaredNorm());
  return t * g;
}

}  // namespace

TEST_CASE("dual cone projection: orthant examples") {
  ConeSpec W = ConeSpec::orthant(2);
  CHECK((dual_cone_project(v2(1, -1), W) - v2(1, 0)).norm() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK((dual_cone_project(v2(2, 3), W) - v2(2, 3)).norm() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("dual cone projection: linear image vs grid oracle") {
  // W = (M^T)^{-1} R^2_+ with M = [[1,0],[1,1]]; W° = M R^2_+ = cone{(1,1),(0,1)}
  Mat M(2, 2);
  M << 1, 0, 1, 1;
  ConeSpec W = ConeSpec::linear_image(M);
  Vec x = v2(1, -1);
  Vec expected = grid_nnls_2d(M.col(0), M.col(1), x);
  Vec got = dual_cone_project(x, W);
  CHECK((got - expected).norm() < 1e-4);  // grid oracle resolution
  CHECK(W.dual_contains(got, 1e-10));
  // Pythagorean inequality against a few dual points
  for (double a : {0.0, 0.5, 2.0})
    for (double b : {0.0, 1.0, 3.0}) {
      Vec y = a * M.col(0) + b * M.col(1);
      CHECK((got - x).dot(got - y) <= 1e-9);
    }
}

TEST_CASE("cone projection: orthant examples") {
  ConeSpec W = ConeSpec::orthant(2);
  CHECK((cone_project(v2(-1, -1), W) - v2(0, 0)).norm() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK((cone_project(v2(0.3, 0.7), W) - v2(0.3, 0.7)).norm() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("cone projection onto a generated cone vs ray oracle") {
  // W = cone{(1,1),(0,1)} expressed as {w : x >= 0, y - x >= 0}
  std::vector<Vec> normals{v2(1, 0), v2(-1, 1)};
  ConeSpec W = ConeSpec::halfspace_generated(normals, 2);
  CHECK(W.contains(v2(1, 1), 1e-12));
  CHECK(W.contains(v2(0, 1), 1e-12));
  CHECK(!W.contains(v2(1, 0.5)));

  Vec x = v2(1, -2);
  // candidates: the two extreme rays and the apex
  Vec cand1 = ray_project(v2(1, 1), x);
  Vec cand2 = ray_project(v2(0, 1), x);
  Vec expected = (cand1 - x).norm() <= (cand2 - x).norm() ? cand1 : cand2;
  Vec got = cone_project(x, W);
  CHECK((got - expected).norm() < 1e-9);
  // the spec's instance lands on the (1,1) ray (at the apex)
  CHECK((got - v2(0, 0)).norm() < 1e-9);
}

TEST_CASE("cone section membership") {
  ConeSection S(ConeSpec::orthant(2), 1.0);
  CHECK(S.contains(v2(0.5, 0.5)));
  CHECK(!S.contains(v2(0.9, 0.9)));  // norm > 1
  ConeSection S2(ConeSpec::orthant(2), 1.0);
  S2.add_cut({v2(1, -1), 0.0});
  CHECK(!S2.contains(v2(0.1, 0.8)));
  CHECK(S2.contains(v2(0.8, 0.1)));
}

TEST_CASE("dual of dual: orthant is self-dual") {
  auto r = check_orthant_self_dual(11, 200);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("lemma 1: projection inequality against random dual points") {
  auto r = check_pythagorean_dual_projection(17, 60, 100);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("lemma 6: cone projection step lies in the dual cone") {
  auto r = check_cone_project_dual(23, 1000);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("dual() is unsupported for halfspace_generated cones") {
  ConeSpec W = ConeSpec::halfspace_generated({v2(1, 0), v2(-1, 1)}, 2);
  CHECK_THROWS_AS(W.dual(), UnsupportedConeError);
}

TEST_CASE("linear image duality round-trips") {
  Mat M(2, 2);
  M << 2, 0.3, -0.1, 1.5;
  ConeSpec W = ConeSpec::linear_image(M);
  ConeSpec Wd = W.dual();
  // W° = M R^2_+: generators of the dual cone are M's columns
  CHECK(Wd.contains(M.col(0), 1e-12));
  CHECK(Wd.contains(M.col(1), 1e-12));
  ConeSpec Wdd = Wd.dual();
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    Vec x = rng.gaussian_vec(2);
    CHECK(W.contains(x, 1e-9) == Wdd.contains(x, 1e-9));
  }
}
