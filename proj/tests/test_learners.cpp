// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

#include <doctest.h>

#include <cmath>

#include "oilo/learners.hpp"
#include "oilo/verify.hpp"

using namespace oilo;

namespace {

Vec v1(double a) { return (Vec(1) << a).finished(); }
Vec v2(double a, double b) { return (Vec(2) << a, b).finished(); }

LearnerConfig small_cfg(int d, long T, double alpha, uint64_t seed) {
  LearnerConfig c;
  c.d = d;
  c.T = T;
  c.alpha = alpha;
  c.seed = seed;
  c.reduction_knobs = reduction_default_knobs(d);
  c.mean_knobs.cloud = 96;
  c.mean_knobs.burn = 60 * d;
  c.mean_knobs.thin = 2 * d * d;
  c.mean_samples = 384;
  return c;
}

}  // namespace

TEST_CASE("parameter defaults follow the paper tunings") {
  LearnerConfig c = small_cfg(2, 400, 2.0, 1);
  Regularizer eu = Regularizer::euclidean(2);
  bounds::resolve_omd(c, eu);
  // euclidean: A = (alpha R)^2 / 2, mu = 1 -> eta = alpha R / (L sqrt(T))
  CHECK(c.eps == doctest::Approx(2.0 / 400.0));
  CHECK(c.eta == doctest::Approx(2.0 / std::sqrt(400.0)));

  LearnerConfig m = small_cfg(2, 2000, 1.0, 1);
  bounds::resolve_cmwu(m);
  CHECK(m.gamma == doctest::Approx(1.0 / 2000.0));
  CHECK(m.eta == doctest::Approx(std::min(1.0, std::sqrt(2.0 * std::log(2000.0) / 2000.0))));
  CHECK(m.eps == doctest::Approx(2.0 * m.gamma));

  LearnerConfig b = small_cfg(2, 1000, 2.0, 1);
  bounds::resolve_bandit(b, 1.0);
  CHECK(b.gamma == doctest::Approx(2.0 / 10.0));
  CHECK(b.eps == doctest::Approx(2.0 / 1000.0));
  CHECK(b.eta == doctest::Approx(2.0 / std::pow(1000.0, 2.0 / 3.0)));
  LearnerConfig bad = small_cfg(2, 8, 1.0, 1);
  CHECK_THROWS_AS(bounds::resolve_bandit(bad, 1.0), ConfigError);
}

TEST_CASE("omd one-dimensional hand trace") {
  LearnerConfig c = small_cfg(1, 10, 1.0, 3);
  c.eta = 0.1;
  c.eps = 0.01;
  OmdLearner learner(c, Oracle::vertex_exact({v1(1.0)}, 1.0, ConeSpec::orthant(1)),
                     ConeSpec::orthant(1), Regularizer::euclidean(1));
  Vec play = learner.round_play();
  CHECK(play[0] == doctest::Approx(1.0));
  learner.observe(v1(1.0));
  CHECK(learner.mirror_point()[0] == doctest::Approx(0.9));  // x_t - eta f
}

TEST_CASE("omd zero losses stabilize and stop calling the oracle") {
  LearnerConfig c = small_cfg(2, 10, 1.0, 5);
  OmdLearner learner(c, Oracle::vertex_exact({v2(0.5, 0.2), v2(0.1, 0.6)}, 1.0, ConeSpec::orthant(2)),
                     ConeSpec::orthant(2), Regularizer::euclidean(2));
  Vec first;
  long calls_after_first = -1;
  for (int t = 0; t < 10; ++t) {
    learner.round_play();
    if (t > 0) CHECK(learner.round_oracle_calls() == 0);  // replay path
    learner.observe(Vec::Zero(2));
    if (t == 0) {
      first = learner.mirror_point();
      calls_after_first = learner.oracle().counter().total();
    }
  }
  CHECK(learner.oracle().counter().total() == calls_after_first);
  CHECK((learner.mirror_point() - first).norm() < 1e-12);
}

TEST_CASE("omd alpha-regret stays under the corollary envelope at small scale") {
  const long T = 400;
  std::vector<Vec> K{v2(0.002, 0.001), v2(0.8, 0.1), v2(0.3, 0.6), v2(0.5, 0.5)};
  double worst = -1e300;
  for (uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    LearnerConfig c = small_cfg(2, T, 2.0, seed);
    OmdLearner learner(c, Oracle::vertex_exact(K, 2.0, ConeSpec::orthant(2)),
                       ConeSpec::orthant(2), Regularizer::euclidean(2));
    Rng adv(derive_seed(seed, 777));
    double cum = 0.0;
    Vec fsum = Vec::Zero(2);
    for (long t = 0; t < T; ++t) {
      Vec play = learner.round_play();
      Vec f = adv.gaussian_vec(2).cwiseAbs();
      f /= std::max(1.0, f.norm());
      learner.observe(f);
      cum += f.dot(play);
      fsum += f;
    }
    double best = 1e300;
    for (const Vec& v : K) best = std::min(best, 2.0 * fsum.dot(v));
    worst = std::max(worst, cum - best);
  }
  CHECK(worst <= bounds::corollary_regret(2.0, 1.0, 1.0, static_cast<double>(T)));
}

TEST_CASE("cmwu first round decomposes when the ball center is dominated") {
  std::vector<Vec> K{v2(0, 0), v2(0.7, 0.7)};
  LearnerConfig c = small_cfg(2, 50, 1.0, 7);
  CmwuLearner learner(c, Oracle::vertex_exact(K, 1.0, ConeSpec::orthant(2)), ConeSpec::orthant(2));
  learner.round_play();
  CHECK(learner.round_separations() == 0);
  CHECK(learner.last_decomposition().residual <= 3.0 * 2.0 * (1.0 / 50.0) * std::sqrt(2.0) + 1e-9);
}

TEST_CASE("cmwu cuts remove constant mass per separation") {
  // single vertex away from the center: round 1 must cut at least once
  std::vector<Vec> K{v2(0.6, 0.6)};
  LearnerConfig c = small_cfg(2, 50, 1.0, 9);
  c.mean_samples = 768;
  CmwuLearner learner(c, Oracle::vertex_exact(K, 1.0, ConeSpec::orthant(2)), ConeSpec::orthant(2));
  learner.round_play();
  const long s1 = learner.round_separations();
  CHECK(s1 >= 1);
  // claim (ii) of the oracle-complexity proof: delta_t >= s_t/5, with MC slack
  CHECK(learner.last_round_delta() >= s1 / 5.0 * 0.85);
  // domains only shrink: cuts accumulate across rounds
  const size_t cuts_before = learner.domain().cuts().size();
  learner.observe(v2(0.3, 0.1));
  learner.round_play();
  CHECK(learner.domain().cuts().size() >= cuts_before);
}

TEST_CASE("cmwu reference learner with constant domains has zero delta") {
  LearnerConfig c = small_cfg(2, 6, 1.0, 11);
  CmwuReferenceLearner ref(c, Oracle::vertex_exact({v2(0.5, 0.5)}, 1.0, ConeSpec::orthant(2)),
                           ConeSpec::orthant(2));
  for (int t = 0; t < 6; ++t) {
    ref.round_play();
    CHECK(ref.last_round_delta() == 0.0);
    ref.observe(Vec::Zero(2));
  }
}

TEST_CASE("cmwu reference learner measures a halving cut as log 2") {
  LearnerConfig c = small_cfg(2, 4, 1.0, 13);
  c.mean_samples = 2048;
  c.mean_knobs.cloud = 256;
  std::vector<std::vector<HalfspaceCut>> chain(4);
  chain[1].push_back({v2(1, 0), 0.0});  // halve the disk at round 2
  CmwuReferenceLearner ref(c, Oracle::vertex_exact({v2(0.5, 0.5)}, 1.0, ConeSpec::orthant(2)),
                           ConeSpec::orthant(2), chain);
  ref.round_play();
  ref.observe(Vec::Zero(2));
  ref.round_play();
  CHECK(std::abs(ref.last_round_delta() - std::log(2.0)) < 0.12);
}

TEST_CASE("cmwu reference rejects non-nested body chains") {
  CutBody b0(2, 1.0);
  CutBody b1(2, 1.0);
  b1.add_cut({v2(1, 0), 0.0});
  CutBody b2(2, 1.0);
  b2.add_cut({v2(0, 1), 0.5});  // not an extension of b1's cuts
  CHECK_THROWS_AS(CmwuReferenceLearner::cuts_from_bodies({b0, b1, b2}), ConfigError);
  auto ok = CmwuReferenceLearner::cuts_from_bodies({b0, b1});
  CHECK(ok.size() == 2);
  CHECK(ok[1].size() == 1);
}

TEST_CASE("barycentric spanner construction") {
  std::vector<Vec> basis{v2(1, 0), v2(0, 1)};
  BarycentricSpanner s = build_barycentric_spanner(basis, 2.0);
  CHECK(s.beta == doctest::Approx(1.0));

  std::vector<Vec> tri{v2(1, 0), v2(0, 1), v2(1, 1)};
  BarycentricSpanner s2 = build_barycentric_spanner(tri, 1.0);
  CHECK(s2.beta == doctest::Approx(1.0));
  for (const Vec& x : tri) CHECK((s2.M_inv * x).cwiseAbs().maxCoeff() <= s2.beta + 1e-12);

  std::vector<Vec> line{v2(1, 1), v2(2, 2), v2(3, 3)};
  CHECK_THROWS_AS(build_barycentric_spanner(line, 2.0), RankError);
}

TEST_CASE("bandit loss estimate formula") {
  std::vector<Vec> K{v2(1, 0), v2(0, 1), v2(0.6, 0.35), v2(0.02, 0.01)};
  LearnerConfig c = small_cfg(2, 1000, 2.0, 17);
  BanditLearner bandit(c, Oracle::vertex_exact(K, 2.0, ConeSpec::orthant(2)),
                       build_barycentric_spanner(K, 2.0));
  // spanner = basis here, Q = I: estimate is (d/gamma) l e_i
  const double gamma = 2.0 / 10.0;  // beta^{2/3} d / T^{1/3}
  Vec est = bandit.loss_estimate(0, 0.3);
  CHECK((est - (2.0 / gamma) * 0.3 * v2(1, 0)).norm() < 1e-12);
}

TEST_CASE("bandit estimator is unbiased with bounded second moment") {
  auto r = check_bandit_estimator(73, 200000);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("bandit zero losses keep the inner state constant") {
  std::vector<Vec> K{v2(1, 0), v2(0, 1), v2(0.6, 0.35)};
  LearnerConfig c = small_cfg(2, 1000, 1.0, 19);
  BanditLearner bandit(c, Oracle::vertex_exact(K, 1.0, ConeSpec::orthant(2)),
                       build_barycentric_spanner(K, 2.0));
  long total_calls = -1;
  for (int t = 0; t < 30; ++t) {
    bandit.round_play();
    bandit.observe(Vec::Zero(2));
    if (t == 0) total_calls = bandit.oracle().counter().total();
  }
  // zero losses mean every estimate is zero, so no oracle calls after round 1
  CHECK(bandit.oracle().counter().total() == total_calls);
}

TEST_CASE("bandit explore plays spanner members and exploits inner plays") {
  std::vector<Vec> K{v2(1, 0), v2(0, 1), v2(0.6, 0.35), v2(0.02, 0.01)};
  LearnerConfig c = small_cfg(2, 1000, 2.0, 23);
  BanditLearner bandit(c, Oracle::vertex_exact(K, 2.0, ConeSpec::orthant(2)),
                       build_barycentric_spanner(K, 2.0));
  Rng adv(5);
  int explores = 0;
  for (int t = 0; t < 200; ++t) {
    Vec play = bandit.round_play();
    bool is_vertex = false;
    for (const Vec& v : K)
      if ((play - v).norm() < 1e-12) is_vertex = true;
    CHECK(is_vertex);  // plays are always elements of K
    explores += bandit.explore_flag();
    Vec f = adv.gaussian_vec(2).cwiseAbs();
    f /= std::max(1.0, f.norm());
    bandit.observe(f);
  }
  // gamma = 0.2: explore count concentrates around 40
  CHECK(explores > 10);
  CHECK(explores < 100);
}
