// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

#include <doctest.h>

#include <cmath>
#include <functional>

#include "oilo/sampling.hpp"
#include "oilo/verify.hpp"

using namespace oilo;

namespace {

Vec v2(double a, double b) { return (Vec(2) << a, b).finished(); }

SamplerKnobs light(int cloud, int burn, int thin) {
  SamplerKnobs k;
  k.cloud = cloud;
  k.burn = burn;
  k.thin = thin;
  return k;
}

// Simpson quadrature oracle on [0,1].
double simpson(const std::function<double(double)>& f, int n = 2000) {
  double s = f(0.0) + f(1.0);
  for (int i = 1; i < n; ++i) s += f(i / static_cast<double>(n)) * (i % 2 ? 4.0 : 2.0);
  return s / (3.0 * n);
}

}  // namespace

TEST_CASE("uniform box sampling: mean matches the center") {
  CutBody box = CutBody::box(Vec::Zero(2), Vec::Ones(2));
  auto pts = sample_body(box, 0.5 * Vec::Ones(2), 100000, 42, light(64, 128, 16));
  Vec mean = Vec::Zero(2);
  for (const Vec& p : pts) mean += p;
  mean /= static_cast<double>(pts.size());
  CHECK(std::abs(mean[0] - 0.5) < 0.01);
  CHECK(std::abs(mean[1] - 0.5) < 0.01);
  for (const Vec& p : pts) CHECK(box.contains(p, 0.0));
}

TEST_CASE("quarter-disk centroid matches the analytic value") {
  ConeSection quarter(ConeSpec::orthant(2), 1.0);
  CentroidEstimate est = estimate_centroid(quarter, 100000, 11, light(64, 128, 16));
  const double expected = 4.0 / (3.0 * M_PI);
  CHECK(std::abs(est.mean[0] - expected) < 0.01);
  CHECK(std::abs(est.mean[1] - expected) < 0.01);
  CHECK(quarter.contains(est.mean, 0.0));
}

TEST_CASE("1-d cone section centroid") {
  ConeSection seg(ConeSpec::orthant(1), 1.0);
  CentroidEstimate est = estimate_centroid(seg, 40000, 3, light(32, 64, 8));
  CHECK(std::abs(est.mean[0] - 0.5) < 0.01);
}

TEST_CASE("cut quarter-disk centroid vs rejection oracle") {
  // half-quarter-disk {x >= y}: brute-force rejection sampling as the oracle
  Rng rng(99);
  const long trials = 10000000;
  double sx = 0, sy = 0;
  long kept = 0;
  for (long i = 0; i < trials; ++i) {
    double x = rng.uniform(), y = rng.uniform();
    if (x * x + y * y <= 1.0 && x >= y) {
      sx += x;
      sy += y;
      ++kept;
    }
  }
  const Vec oracle_centroid = v2(sx / kept, sy / kept);

  ConeSection section(ConeSpec::orthant(2), 1.0);
  section.add_cut({v2(1, -1), 0.0});
  CentroidEstimate est = estimate_centroid(section, 60000, 13, light(64, 128, 16));
  CHECK((est.mean - oracle_centroid).norm() < 0.012);
  CHECK(est.mean[0] > est.mean[1]);
}

TEST_CASE("degenerate section raises") {
  ConeSection dead(ConeSpec::orthant(2), 1.0);
  dead.add_cut({v2(-1, -1), 1.0});  // -(x+y) >= 1 impossible in the orthant
  CHECK_THROWS_AS(estimate_centroid(dead, 100, 1, light(8, 8, 4)), DegenerateSectionError);
}

TEST_CASE("invalid body raises") {
  BodyOracle b;
  b.contains = [](const Vec& x) { return x.norm() < 0.5; };
  b.radius = 1.0;
  b.interior = Vec::Ones(2);  // fails its own membership
  CHECK_THROWS_AS(sample_body(b, 10, 1), InvalidBodyError);
}

TEST_CASE("log-linear mean: uniform limit and monotone concentration") {
  CutBody box = CutBody::box(Vec::Zero(2), Vec::Ones(2));
  BodyOracle oracle = box.as_oracle(0.5 * Vec::Ones(2));
  SamplerKnobs k = light(64, 128, 12);

  Vec m0 = loglinear_mean({oracle, Vec::Zero(2)}, 20000, 5, k);
  CHECK(std::abs(m0[0] - 0.5) < 0.02);
  CHECK(std::abs(m0[1] - 0.5) < 0.02);

  double prev = 1.0;
  for (double c : {1.0, 10.0, 100.0}) {
    Vec m = loglinear_mean({oracle, v2(c, 0.0)}, 20000, 7, k);
    CHECK(m[0] < prev);
    CHECK(std::abs(m[1] - 0.5) < 0.03);
    prev = m[0];
  }
  CHECK(prev < 0.05);  // c = 100 pushes the first coordinate to the wall
}

TEST_CASE("log-linear mean on [0,1] vs quadrature oracle") {
  const double num = simpson([](double x) { return x * std::exp(-x); });
  const double den = simpson([](double x) { return std::exp(-x); });
  const double expected = num / den;
  CHECK(expected == doctest::Approx(0.41802).epsilon(1e-3));  // frozen closed form

  BodyOracle seg;
  seg.contains = [](const Vec& x) { return x[0] >= 0.0 && x[0] <= 1.0; };
  seg.radius = 1.0 + 1e-9;
  seg.interior = 0.5 * Vec::Ones(1);
  Vec m = loglinear_mean({seg, Vec::Ones(1)}, 30000, 17, light(32, 64, 8));
  CHECK(std::abs(m[0] - expected) < 0.01);
}

TEST_CASE("halfspace mass: symmetric and box cases") {
  CutBody disk(2, 1.0);
  double se = 0.0;
  double m = halfspace_mass({disk.as_oracle(Vec::Zero(2)), Vec::Zero(2)}, {v2(1, 0), 0.0}, 20000,
                            23, light(64, 128, 12), &se);
  CHECK(std::abs(m - 0.5) < 0.01);

  CutBody box = CutBody::box(Vec::Zero(2), Vec::Ones(2));
  m = halfspace_mass({box.as_oracle(0.5 * Vec::Ones(2)), Vec::Zero(2)}, {v2(1, 0), 0.25}, 20000,
                     29, light(64, 128, 12), &se);
  CHECK(std::abs(m - 0.75) < 0.01);
}

TEST_CASE("lemma 3: half-space through the mean keeps 1/(2e) mass") {
  CutBody box = CutBody::box(Vec::Zero(2), Vec::Ones(2));
  BodyOracle oracle = box.as_oracle(0.5 * Vec::Ones(2));
  SamplerKnobs k = light(64, 128, 12);
  Vec g = v2(1, 0);
  Vec mean = loglinear_mean({oracle, g}, 20000, 31, k);
  double se = 0.0;
  // H = {x1 <= mean1}
  double mass = halfspace_mass({oracle, g}, {v2(-1, 0), -mean[0]}, 20000, 37, k, &se);
  CHECK(mass >= 1.0 / (2.0 * std::exp(1.0)) - 3.0 * se);
}

TEST_CASE("lemma 3 statistical suite over random polytopes") {
  auto r = check_lemma3_mass(43, 8, 2048, 1024);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("sampler determinism, membership, serial == parallel") {
  auto r = check_sampler_membership_determinism(47);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("mc error contracts at the square-root rate") {
  auto r = check_mc_rate(53);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("non-mixing diagnostic raises") {
  CutBody box = CutBody::box(Vec::Zero(2), Vec::Ones(2));
  SamplerKnobs k = light(8, 4, 2);
  k.drift_tol = 0.0;  // impossible target
  k.max_refresh = 3;
  CHECK_THROWS_AS(loglinear_mean({box.as_oracle(0.5 * Vec::Ones(2)), v2(3, 0)}, 4000, 3, k),
                  SamplerDiagnosticError);
}

TEST_CASE("warm-started cuts keep the cloud inside") {
  ConeSection s(ConeSpec::orthant(2), 1.0);
  CloudSampler cs(CutBody::from_section(s), section_interior_point(s), 61, light(32, 64, 8));
  CHECK(cs.add_cut({v2(1, -1), 0.0}));
  cs.refresh();
  for (const Vec& p : cs.cloud()) CHECK(cs.body().contains(p, 0.0));
  // a cut that empties the body reports degeneracy
  CHECK(!cs.add_cut({v2(-1, -1), 1.0}));
}
