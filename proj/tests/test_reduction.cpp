// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

#include <doctest.h>

#include <cmath>

#include "oilo/reduction.hpp"
#include "oilo/verify.hpp"

using namespace oilo;

namespace {
Vec v2(double a, double b) { return (Vec(2) << a, b).finished(); }
SamplerKnobs knobs() { return reduction_default_knobs(2); }
}  // namespace

TEST_CASE("pad returns immediately on an already dominated point") {
  // K = {(1,1)}, K* = {(2,2)}; y = (1,1) decomposes over itself exactly.
  Oracle o = Oracle::vertex_exact({v2(1, 1)}, 2.0, ConeSpec::orthant(2));
  Regularizer phi = Regularizer::euclidean(2);
  PadResult r = pad(v2(1, 1), 0.01, ConeSpec::orthant(2), phi, o, 7, knobs());
  CHECK(r.iterations == 1);
  CHECK((r.y_prime - v2(1, 1)).norm() < 1e-12);
  CHECK(r.decomp.residual < 1e-12);
  CHECK(r.decomp.weights.size() == 1);
  CHECK(r.decomp.weights[0] == doctest::Approx(1.0));
  CHECK(r.decomp.certificate.norm() < 1e-12);
  CHECK(r.oracle_calls == 1);
}

TEST_CASE("pad pulls a far point toward the dominated region") {
  Oracle o = Oracle::vertex_exact({v2(1, 1)}, 2.0, ConeSpec::orthant(2));
  Regularizer phi = Regularizer::euclidean(2);
  const Vec y = v2(0, 0);
  const double eps = 0.05;
  PadResult r = pad(y, eps, ConeSpec::orthant(2), phi, o, 11, knobs());
  // Def. 3 item 1 against the K* vertex
  const Vec xs = v2(2, 2);
  CHECK(phi.bregman(xs, r.y_prime) <= phi.bregman(xs, y) + 1e-10);
  // Def. 3 item 2
  CHECK(r.decomp.residual <= eps + eps / 10 + 1e-12);
  CHECK(ConeSpec::orthant(2).dual_contains(r.decomp.certificate, 1e-9));
  // the iterate moved up toward (1,1)
  CHECK(r.y_prime.minCoeff() > 0.5);
}

TEST_CASE("pad respects the iteration ceiling at eps = R") {
  Oracle o = Oracle::vertex_exact({v2(0.6, 0.2), v2(0.1, 0.7)}, 1.5, ConeSpec::orthant(2));
  Regularizer phi = Regularizer::euclidean(2);
  const Vec y = v2(-0.5, 0.8);
  const double eps = o.radius();
  PadResult r = pad(y, eps, ConeSpec::orthant(2), phi, o, 13, knobs());
  CHECK(r.iterations <= pad_iteration_ceiling(y, eps, phi, o));
}

TEST_CASE("pad precondition failures") {
  Oracle o = Oracle::vertex_exact({v2(1, 1)}, 1.0, ConeSpec::orthant(2));
  Regularizer phi = Regularizer::euclidean(2);
  CHECK_THROWS_AS(pad(v2(0, 0), 10.0 * o.radius(), ConeSpec::orthant(2), phi, o, 1, knobs()),
                  ConfigError);
  // unregistered PNIP pair: entropy over a linear-image cone
  Mat M(2, 2);
  M << 1, 0.5, 0, 1;
  Regularizer en = Regularizer::neg_entropy(2, 0.25);
  CHECK_THROWS_AS(pad(v2(1, 1), 0.1, ConeSpec::linear_image(M), en, o, 1, knobs()), ConfigError);
}

TEST_CASE("pad randomized invariants") {
  auto r = check_pad_invariants(67, 25);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("sod separates a point far below K*") {
  Oracle o = Oracle::vertex_exact({v2(1, 1)}, 2.0, ConeSpec::orthant(2));
  const double eps = 0.1;
  SodResult r = sod(v2(0, 0), eps, ConeSpec::orthant(2), o, 17, knobs());
  REQUIRE(r.is_separation);
  CHECK(std::abs(r.w.norm() - 1.0) < 1e-12);
  CHECK(r.w.dot(v2(0, 0)) <= r.b - eps + 1e-12);
  // the hyperplane does not cut into K* = {(2,2)}
  CHECK(r.b - eps <= r.w.dot(v2(2, 2)) + 1e-9);
  CHECK(r.oracle_calls == 1);
}

TEST_CASE("sod decomposes a dominating point, certificate absorbs the surplus") {
  Oracle o = Oracle::vertex_exact({v2(1, 1)}, 1.0, ConeSpec::orthant(2), /*radius=*/5.0);
  const double eps = 0.1;
  SodResult r = sod(v2(3, 3), eps, ConeSpec::orthant(2), o, 19, knobs());
  REQUIRE(!r.is_separation);
  CHECK(r.decomp.residual < 1e-9);
  CHECK((r.decomp.certificate - v2(2, 2)).norm() < 1e-8);
}

TEST_CASE("sod call ceiling formula") {
  CHECK(sod_call_ceiling(1.0, 0.05, 2) == 44);  // ceil(10 log 80)
  Oracle o = Oracle::vertex_exact({v2(0.5, 0.2), v2(0.1, 0.6)}, 1.0, ConeSpec::orthant(2),
                                  /*radius=*/1.0);
  SodResult r = sod(v2(0.2, 0.1), 0.05, ConeSpec::orthant(2), o, 23, knobs());
  CHECK(r.oracle_calls <= 44);
}

TEST_CASE("sod randomized invariants") {
  auto r = check_sod_invariants(71, 25);
  CHECK_MESSAGE(r.pass, r.detail);
}
