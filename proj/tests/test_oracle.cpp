// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "oilo/oracle.hpp"

using namespace oilo;

namespace {
Vec v2(double a, double b) { return (Vec(2) << a, b).finished(); }

std::vector<Vec> triangle() { return {v2(1, 0), v2(0, 1), v2(1, 1)}; }
}  // namespace

TEST_CASE("vertex oracle minimizes with deterministic tie-breaking") {
  Oracle o = Oracle::vertex_exact(triangle(), 2.0, ConeSpec::orthant(2));
  CHECK((o.query(v2(1, 2)) - v2(1, 0)).norm() == 0.0);  // value 1 <= 2*1
  CHECK((o.query(v2(1, 1)) - v2(1, 0)).norm() == 0.0);  // tie among {(1,0),(0,1)}
  CHECK((o.query(v2(0, 0)) - v2(1, 0)).norm() == 0.0);  // all tie: first vertex
}

TEST_CASE("oracle rejects directions outside W") {
  Oracle o = Oracle::vertex_exact(triangle(), 1.0, ConeSpec::orthant(2));
  CHECK_THROWS_AS(o.query(v2(-1, 0.5)), DomainError);
}

TEST_CASE("adversarially loose alpha approximation") {
  CHECK((simulate_alpha_approx({v2(1, 0), v2(3, 0)}, 2.0, v2(1, 0)) - v2(1, 0)).norm() == 0.0);
  CHECK((simulate_alpha_approx({v2(1, 0), v2(2, 0)}, 2.0, v2(1, 0)) - v2(2, 0)).norm() == 0.0);
  // alpha = 1 is the exact minimizer
  CHECK((simulate_alpha_approx(triangle(), 1.0, v2(1, 2)) - v2(1, 0)).norm() == 0.0);
}

TEST_CASE("contract audit over the transcript") {
  Rng rng(3);
  for (OracleKind kind : {OracleKind::vertex_exact, OracleKind::alpha_loose}) {
    Oracle o = kind == OracleKind::vertex_exact
                   ? Oracle::vertex_exact(triangle(), 2.0, ConeSpec::orthant(2))
                   : Oracle::alpha_loose(triangle(), 2.0, ConeSpec::orthant(2));
    for (int t = 0; t < 300; ++t) {
      o.counter().begin_round();
      Vec v = rng.gaussian_vec(2).cwiseAbs();
      o.query(v);
    }
    for (const auto& [v, y] : o.counter().transcript())
      CHECK(v.dot(y) <= o.kstar_support(v) + 1e-9);
    CHECK(o.counter().total() == static_cast<long>(o.counter().transcript().size()));
    long per_round_sum = 0;
    for (long c : o.counter().per_round()) per_round_sum += c;
    CHECK(per_round_sum == o.counter().total());
  }
}

TEST_CASE("returned points stay in the radius ball") {
  Oracle o = Oracle::vertex_exact(triangle(), 2.0, ConeSpec::orthant(2));
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    Vec y = o.query(rng.gaussian_vec(2).cwiseAbs());
    CHECK(y.norm() <= o.radius() + 1e-12);
  }
}

TEST_CASE("vertex file loader") {
  const std::string path = "oracle_vertices_test.txt";
  {
    std::ofstream f(path);
    f << "# fixture\n1 0\n0 1\n\n0.25 0.75\n";
  }
  auto verts = load_vertices_file(path);
  REQUIRE(verts.size() == 3);
  CHECK((verts[2] - v2(0.25, 0.75)).norm() == 0.0);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_vertices_file("does_not_exist_anywhere.txt"), IoError);
}

TEST_CASE("inline vertex parsing") {
  auto verts = parse_vertices_inline("1,0; 0,1; 0.5,0.5");
  REQUIRE(verts.size() == 3);
  CHECK((verts[1] - v2(0, 1)).norm() == 0.0);
  CHECK_THROWS_AS(parse_vertices_inline(";"), ConfigError);
}

TEST_CASE("oracle construction guards") {
  CHECK_THROWS_AS(Oracle::vertex_exact({}, 1.0, ConeSpec::orthant(2)), ConfigError);
  CHECK_THROWS_AS(Oracle::vertex_exact(triangle(), 0.5, ConeSpec::orthant(2)), ConfigError);
}
