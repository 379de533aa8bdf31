// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

#include <doctest.h>

#include <cmath>

#include "oilo/decomposition.hpp"
#include "oilo/verify.hpp"

using namespace oilo;

namespace {

Vec v2(double a, double b) { return (Vec(2) << a, b).finished(); }

// Brute-force oracle: min over a refined grid of (p simplex, c >= 0 grid) for
// a single point V = {v}.
double grid_residual_single(const Vec& v, const Vec& x) {
  double lo1 = 0, hi1 = 4, lo2 = 0, hi2 = 4;
  double best = 1e300, b1 = 0, b2 = 0;
  for (int refine = 0; refine < 6; ++refine) {
    const int n = 50;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        double c1 = lo1 + (hi1 - lo1) * i / n;
        double c2 = lo2 + (hi2 - lo2) * j / n;
        double r = (v + v2(c1, c2) - x).norm();
        if (r < best) {
          best = r;
          b1 = c1;
          b2 = c2;
        }
      }
    double w1 = (hi1 - lo1) / n, w2 = (hi2 - lo2) / n;
    lo1 = std::max(0.0, b1 - 2 * w1);
    hi1 = b1 + 2 * w1;
    lo2 = std::max(0.0, b2 - 2 * w2);
    hi2 = b2 + 2 * w2;
  }
  return best;
}

// Exhaustive direction oracle over the quarter circle.
double exhaustive_domination_value(const std::vector<Vec>& V, const Vec& x) {
  double worst = -1e300;
  for (int i = 0; i <= 360; ++i) {
    double t = 0.5 * M_PI * i / 360.0;
    Vec w = v2(std::cos(t), std::sin(t));
    double best = 1e300;
    for (const Vec& v : V) best = std::min(best, w.dot(v - x));
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

TEST_CASE("symmetric two-point decomposition") {
  ConeSpec W = ConeSpec::orthant(2);
  std::vector<Vec> V{v2(1, 0), v2(0, 1)};
  Decomposition d = solve_decomposition(V, v2(0.5, 0.5), W, 1e-10);
  CHECK(d.residual < 1e-10);
  CHECK(d.weights[0] == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(d.weights[1] == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(d.certificate.norm() < 1e-10);
}

TEST_CASE("single point, certificate cannot absorb the deficit") {
  ConeSpec W = ConeSpec::orthant(2);
  const Vec v = v2(1, 0), x = v2(1, -1);
  const double oracle = grid_residual_single(v, x);
  CHECK(oracle == doctest::Approx(1.0).epsilon(1e-4));
  Decomposition d = solve_decomposition({v}, x, W, 1e-10);
  CHECK(d.weights[0] == doctest::Approx(1.0));
  CHECK(d.residual == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(d.certificate.norm() < 1e-9);
}

TEST_CASE("dominating point: residual sqrt(2) with zero certificate") {
  ConeSpec W = ConeSpec::orthant(2);
  const Vec v = v2(2, 2), x = v2(1, 1);
  const double oracle = grid_residual_single(v, x);
  CHECK(oracle == doctest::Approx(std::sqrt(2.0)).epsilon(1e-4));
  Decomposition d = solve_decomposition({v}, x, W, 1e-10);
  CHECK(d.residual == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  CHECK(d.certificate.norm() < 1e-9);
  // domination flips exactly at the residual
  CHECK(!verify_domination({v}, x, W, 1.0, 720));
  CHECK(verify_domination({v}, x, W, 1.5, 720));
}

TEST_CASE("verify_domination examples") {
  ConeSpec W = ConeSpec::orthant(2);
  CHECK(verify_domination({v2(1, 0), v2(0, 1)}, v2(0.5, 0.5), W, 1e-6, 720));

  std::vector<Vec> V{v2(1, 1)};
  const double dstar = exhaustive_domination_value(V, v2(0, 0));
  CHECK(dstar == doctest::Approx(std::sqrt(2.0)).epsilon(1e-4));
  CHECK(!verify_domination(V, v2(0, 0), W, 0.1, 720));

  CHECK(verify_domination({v2(0, 0)}, v2(1, 1), W, 0.0, 720));
}

TEST_CASE("residual is monotone when points are added") {
  Rng rng(7);
  ConeSpec W = ConeSpec::orthant(3);
  std::vector<Vec> V;
  Vec x = rng.gaussian_vec(3);
  double prev = 1e300;
  for (int k = 0; k < 6; ++k) {
    V.push_back(rng.gaussian_vec(3));
    Decomposition d = solve_decomposition(V, x, W, 1e-10);
    CHECK(d.residual <= prev + 1e-9);
    prev = d.residual;
  }
}

TEST_CASE("duplicate points are collapsed") {
  ConeSpec W = ConeSpec::orthant(2);
  std::vector<Vec> V{v2(1, 0), v2(1, 0), v2(1, 0), v2(0, 1)};
  Decomposition d = solve_decomposition(V, v2(0.5, 0.5), W, 1e-10);
  CHECK(d.points.size() == 2);
  CHECK(d.residual < 1e-9);
}

TEST_CASE("non-convergence surfaces as a solver error with the best iterate") {
  ConeSpec W = ConeSpec::orthant(2);
  std::vector<Vec> V{v2(1, 0), v2(0, 1)};
  try {
    solve_decomposition(V, v2(0.5, 0.5), W, -1.0);  // impossible tolerance
    CHECK(false);
  } catch (const SolverError& e) {
    CHECK(e.best_residual < 1e-9);  // the iterate is still good
  }
}

TEST_CASE("first-order optimality under perturbations") {
  auto r = check_decomposition_optimality(59, 40);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("lemma 7 equivalence on random instances") {
  auto r = check_lemma7_equivalence(61, 60);
  CHECK_MESSAGE(r.pass, r.detail);
}
