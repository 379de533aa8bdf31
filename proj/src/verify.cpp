// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

#include "oilo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "oilo/learners.hpp"

namespace oilo {

namespace {

std::string fmt(double v) { return format_sig(v, 6); }

VerifyResult result(const std::string& name, bool pass, const std::string& detail) {
  return VerifyResult{name, pass, detail};
}

// Random cone of each supported kind, cycling deterministically.
ConeSpec random_cone(Rng& rng, int d, int which) {
  switch (which % 3) {
    case 0:
      return ConeSpec::orthant(d);
    case 1: {
      Mat M = Mat::Identity(d, d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) M(i, j) += 0.4 * rng.uniform(-1.0, 1.0);
      if (std::abs(M.determinant()) < 0.1) M += Mat::Identity(d, d);
      return ConeSpec::linear_image(M);
    }
    default: {
      std::vector<Vec> normals;
      for (int i = 0; i < d; ++i) {
        Vec e = Vec::Zero(d);
        e[i] = 1.0;
        Vec n = e + 0.3 * rng.gaussian_vec(d);
        normals.push_back(n / n.norm());
      }
      return ConeSpec::halfspace_generated(normals, d);
    }
  }
}

Vec random_dual_point(Rng& rng, const ConeSpec& W) {
  Vec y = Vec::Zero(W.dim());
  for (const Vec& g : W.dual_generators()) y += rng.uniform() * g;
  return y;
}

}  // namespace

VerifyResult check_pythagorean_dual_projection(uint64_t seed, int trials, int dual_dirs) {
  Rng rng(seed);
  double worst = -1e300;
  for (int t = 0; t < trials; ++t) {
    const int d = 2 + t % 3;
    ConeSpec W = random_cone(rng, d, t);
    Vec x = 2.0 * rng.gaussian_vec(d);
    Vec p = dual_cone_project(x, W);
    if (!W.dual_contains(p, 1e-8))
      return result("lemma1_dual_projection", false, "projection fails dual membership");
    for (int j = 0; j < dual_dirs; ++j) {
      Vec y = random_dual_point(rng, W);
      worst = std::max(worst, (p - x).dot(p - y));
    }
  }
  return result("lemma1_dual_projection", worst <= 1e-9, "max inner product " + fmt(worst));
}

VerifyResult check_cone_project_dual(uint64_t seed, int trials) {
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int d = 2 + t % 3;
    ConeSpec W = random_cone(rng, d, t);
    Vec x = 2.0 * rng.gaussian_vec(d);
    Vec p = cone_project(x, W);
    if (!W.contains(p, 1e-8)) return result("lemma6_step_in_dual", false, "projection not in W");
    if (!W.dual_contains(p - x, 1e-8))
      return result("lemma6_step_in_dual", false, "Pi_W(x) - x not in the dual cone");
  }
  return result("lemma6_step_in_dual", true, std::to_string(trials) + " trials");
}

VerifyResult check_orthant_self_dual(uint64_t seed, int trials) {
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int d = 1 + t % 4;
    ConeSpec W = ConeSpec::orthant(d);
    Vec x = 3.0 * rng.gaussian_vec(d);
    if ((dual_cone_project(x, W.dual()) - cone_project(x, W)).norm() > 1e-12)
      return result("orthant_self_dual", false, "dual-of-dual mismatch");
  }
  return result("orthant_self_dual", true, std::to_string(trials) + " trials");
}

namespace {

Regularizer regularizer_fixture(Rng& rng, int d, int which, Mat* m_out = nullptr) {
  switch (which % 3) {
    case 0:
      return Regularizer::euclidean(d);
    case 1:
      return Regularizer::neg_entropy(d, 1.0 / 3.0);  // valid for points in (0, 3]
    default: {
      Mat M = Mat::Identity(d, d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) M(i, j) += 0.4 * rng.uniform(-1.0, 1.0);
      if (std::abs(M.determinant()) < 0.1) M += Mat::Identity(d, d);
      if (m_out) *m_out = M;
      return Regularizer::barycentric(M * M.transpose());
    }
  }
}

Vec domain_point(Rng& rng, const Regularizer& phi) {
  Vec x(phi.dim());
  if (phi.kind() == RegKind::neg_entropy) {
    for (int i = 0; i < phi.dim(); ++i) x[i] = rng.uniform(0.05, 2.5);
  } else {
    x = 1.5 * rng.gaussian_vec(phi.dim());
  }
  return x;
}

}  // namespace

VerifyResult check_bregman_identities(uint64_t seed, int trials) {
  Rng rng(seed);
  double worst3 = 0.0, worst_inv = 0.0;
  for (int t = 0; t < trials; ++t) {
    const int d = 1 + t % 4;
    Regularizer phi = regularizer_fixture(rng, d, t);
    Vec x = domain_point(rng, phi), y = domain_point(rng, phi), z = domain_point(rng, phi);
    // three-point identity
    double lhs = (x - y).dot(phi.grad(z) - phi.grad(y));
    double rhs = phi.bregman(x, y) - phi.bregman(x, z) + phi.bregman(y, z);
    worst3 = std::max(worst3, std::abs(lhs - rhs));
    // mirror step with zero loss is the identity
    worst_inv = std::max(worst_inv, (phi.mirror_step(x, Vec::Zero(d), 1.0) - x).norm());
  }
  bool pass = worst3 <= 1e-9 && worst_inv <= 1e-12;
  return result("bregman_identities", pass,
                "three-point err " + fmt(worst3) + ", inverse err " + fmt(worst_inv));
}

VerifyResult check_generalized_pythagorean(uint64_t seed, int triples_per_reg) {
  Rng rng(seed);
  double worst = -1e300;
  for (int which = 0; which < 3; ++which) {
    for (int t = 0; t < triples_per_reg; ++t) {
      const int d = 1 + t % 3;
      Regularizer phi = regularizer_fixture(rng, d, which);
      Vec z = domain_point(rng, phi);
      Vec v = domain_point(rng, phi);
      Vec w = rng.sphere(d);
      if (phi.kind() == RegKind::neg_entropy) w = w.cwiseAbs();  // keep H within the domain
      Vec zp = phi.bregman_project_halfspace(z, w, v);
      // sample y in H (and the domain)
      for (int j = 0; j < 8; ++j) {
        Vec y = domain_point(rng, phi);
        if (w.dot(y - v) < 0) continue;
        worst = std::max(worst, phi.bregman(y, zp) + phi.bregman(zp, z) - phi.bregman(y, z));
      }
    }
  }
  return result("generalized_pythagorean", worst <= 1e-8, "max violation " + fmt(worst));
}

VerifyResult check_smoothness_bound(uint64_t seed, int trials) {
  Rng rng(seed);
  double worst = -1e300;
  for (int t = 0; t < trials; ++t) {
    const int d = 1 + t % 4;
    Regularizer phi = regularizer_fixture(rng, d, t);
    Vec x = domain_point(rng, phi), y = domain_point(rng, phi);
    double lhs = phi.bregman(x, y);
    double rhs = (phi.grad(x) - phi.grad(y)).squaredNorm() / (2.0 * phi.mu());
    worst = std::max(worst, lhs - rhs);
  }
  return result("smoothness_bound", worst <= 1e-8, "max violation " + fmt(worst));
}

VerifyResult check_pnip_pairs(uint64_t seed, int pairs) {
  Rng rng(seed);
  double worst = 1e300;
  // (euclidean, W subset of W°): orthant, H = I
  for (int t = 0; t < pairs; ++t) {
    const int d = 2 + t % 3;
    Vec w = rng.gaussian_vec(d).cwiseAbs(), wp = rng.gaussian_vec(d).cwiseAbs();
    worst = std::min(worst, w.dot(wp));
  }
  // (neg_entropy, orthant): H in CH{diag(1/x)}, so H^{-1} has positive diagonal
  for (int t = 0; t < pairs; ++t) {
    const int d = 2 + t % 3;
    Vec w = rng.gaussian_vec(d).cwiseAbs(), wp = rng.gaussian_vec(d).cwiseAbs();
    Vec h = Vec::Zero(d);
    double l1 = rng.uniform(), l2 = 1.0 - l1;
    for (int i = 0; i < d; ++i)
      h[i] = l1 / rng.uniform(0.05, 3.0) + l2 / rng.uniform(0.05, 3.0);
    double s = 0.0;
    for (int i = 0; i < d; ++i) s += w[i] * wp[i] / h[i];
    worst = std::min(worst, s);
  }
  // (barycentric Q^{-1}, (M^T)^{-1} R^d_+): H = Q^{-1}, H^{-1} = M M^T
  for (int t = 0; t < pairs; ++t) {
    const int d = 2 + t % 3;
    Mat M;
    Rng r2(derive_seed(seed, 1000 + t));
    regularizer_fixture(r2, d, 2, &M);
    Mat minv_t = M.inverse().transpose();
    Vec w = minv_t * rng.gaussian_vec(d).cwiseAbs();
    Vec wp = minv_t * rng.gaussian_vec(d).cwiseAbs();
    worst = std::min(worst, w.dot(M * M.transpose() * wp));
  }
  return result("pnip_pairs", worst >= -1e-9, "min w^T H^{-1} w' = " + fmt(worst));
}

VerifyResult check_sampler_membership_determinism(uint64_t seed) {
  ConeSection quarter(ConeSpec::orthant(2), 1.0);
  CutBody body = CutBody::from_section(quarter);
  SamplerKnobs k;
  k.cloud = 32;
  k.burn = 64;
  k.thin = 16;
  auto pts1 = sample_body(body, section_interior_point(quarter), 512, seed, k);
  auto pts2 = sample_body(body, section_interior_point(quarter), 512, seed, k);
  for (const Vec& p : pts1)
    if (!body.contains(p, 0.0)) return result("sampler_membership", false, "sample escapes the body");
  for (size_t i = 0; i < pts1.size(); ++i)
    if (pts1[i] != pts2[i]) return result("sampler_membership", false, "same seed, different stream");
  // serial vs parallel kernels agree point for point
  CloudSampler a(body, section_interior_point(quarter), seed, k);
  CloudSampler b(body, section_interior_point(quarter), seed, k);
  a.advance_chains(64, false);
  b.advance_chains(64, true);
  for (size_t i = 0; i < a.cloud().size(); ++i)
    if (a.cloud()[i] != b.cloud()[i])
      return result("sampler_membership", false, "serial and parallel kernels disagree");
  return result("sampler_membership", true, "membership, determinism, serial==parallel");
}

VerifyResult check_mc_rate(uint64_t seed) {
  ConeSection quarter(ConeSpec::orthant(2), 1.0);
  SamplerKnobs k;
  k.cloud = 16;
  k.burn = 64;
  k.thin = 24;
  const int reps = 24;
  auto spread = [&](int n, uint64_t salt) {
    std::vector<double> xs;
    for (int r = 0; r < reps; ++r)
      xs.push_back(estimate_centroid(quarter, n, derive_seed(seed, salt + r), k).mean[0]);
    double m = 0, v = 0;
    for (double x : xs) m += x;
    m /= reps;
    for (double x : xs) v += (x - m) * (x - m);
    return std::sqrt(v / (reps - 1));
  };
  const double s1 = spread(512, 11), s2 = spread(2048, 7777);
  const double ratio = s1 / s2;  // quadrupling n should halve the error
  bool pass = ratio > 2.0 * 0.8 && ratio < 2.0 * 1.2;
  return result("mc_convergence_rate", pass, "error ratio " + fmt(ratio) + " (expect ~2)");
}

VerifyResult check_lemma3_mass(uint64_t seed, int bodies, int n_mean, int n_mass) {
  Rng rng(seed);
  const double threshold_base = 1.0 / (2.0 * std::exp(1.0));
  double worst_margin = 1e300;
  for (int b = 0; b < bodies; ++b) {
    const int d = 2 + b % 3;  // 2..4
    CutBody poly = CutBody::box(-Vec::Ones(d), Vec::Ones(d));
    const int extra = 2 * d;
    for (int j = 0; j < extra; ++j) {
      Vec a = rng.sphere(d);
      double off = rng.uniform(0.3, 0.9);
      poly.add_cut({-a, -off});  // a.x <= off, keeps the origin
    }
    LogLinearDensity density{poly.as_oracle(Vec::Zero(d)), rng.uniform(0.0, 3.0) * rng.sphere(d)};
    SamplerKnobs k;
    k.cloud = 64;
    k.burn = 60 * d;
    k.thin = 2 * d * d;
    Vec mean = loglinear_mean(density, n_mean, derive_seed(seed, 100 + b), k);
    for (int h = 0; h < 6; ++h) {
      Vec w = rng.sphere(d);
      HalfspaceCut half{w, w.dot(mean)};
      double se = 0.0;
      double mass = halfspace_mass(density, half, n_mass, derive_seed(seed, 10000 + 100 * b + h), k, &se);
      worst_margin = std::min(worst_margin, mass - (threshold_base - 3.0 * se));
      if (mass < threshold_base - 3.0 * se)
        return result("lemma3_halfspace_mass", false,
                      "mass " + fmt(mass) + " below 1/(2e)-3se with se " + fmt(se));
    }
  }
  return result("lemma3_halfspace_mass", true, "worst margin " + fmt(worst_margin));
}

VerifyResult check_lemma7_equivalence(uint64_t seed, int instances) {
  Rng rng(seed);
  int false_checks = 0;
  for (int t = 0; t < instances; ++t) {
    const int d = 1 + t % 3;
    const int k = 1 + t % 5;
    ConeSpec W = ConeSpec::orthant(d);
    std::vector<Vec> V;
    for (int j = 0; j < k; ++j) V.push_back(rng.gaussian_vec(d));
    Vec x = rng.gaussian_vec(d);
    Decomposition dec = solve_decomposition(V, x, W, 1e-9);
    const double r = dec.residual;
    const int dirs = d == 1 ? 2 : (d == 2 ? 720 : 4000);
    // Angular resolution of the direction set over the orthant patch, and
    // the Lipschitz constant of w -> min_i w.(v_i - x).
    const double theta = d == 1 ? 0.0 : (d == 2 ? 2.0 * (M_PI / 2) / dirs : 1.5 * std::sqrt((M_PI / 2) / dirs));
    double lip = 0.0;
    for (const Vec& v : V) lip = std::max(lip, (v - x).norm());
    const double coverage = lip * theta;

    const double sampled = std::max(domination_value(V, x, W, dirs), 0.0);
    // (A) => (B) needs no coverage: every sampled direction obeys the bound.
    if (sampled > r + 1e-7)
      return result("lemma7_equivalence", false,
                    "sampled domination " + fmt(sampled) + " exceeds residual " + fmt(r));
    // (B) => (A): the witness direction is findable once r clears the
    // direction-set resolution.
    if (r > 4.0 * coverage + 1e-6) {
      ++false_checks;
      if (sampled < r - 2.0 * coverage)
        return result("lemma7_equivalence", false,
                      "directions miss the witness: sampled " + fmt(sampled) + " vs residual " +
                          fmt(r));
      if (verify_domination(V, x, W, 0.5 * r - coverage, dirs))
        return result("lemma7_equivalence", false, "domination holds strictly below the residual");
    }
    if (!verify_domination(V, x, W, std::max(2.0 * r, 1e-6), dirs))
      return result("lemma7_equivalence", false, "domination fails above the residual");
  }
  return result("lemma7_equivalence", true,
                std::to_string(instances) + " instances, " + std::to_string(false_checks) +
                    " with witness-resolution checks");
}

VerifyResult check_decomposition_optimality(uint64_t seed, int instances) {
  Rng rng(seed);
  for (int t = 0; t < instances; ++t) {
    const int d = 2 + t % 2;
    const int k = 1 + t % 5;
    ConeSpec W = random_cone(rng, d, t % 2);  // orthant / linear_image
    std::vector<Vec> V;
    for (int j = 0; j < k; ++j) V.push_back(rng.gaussian_vec(d));
    Vec x = rng.gaussian_vec(d);
    Decomposition dec = solve_decomposition(V, x, W, 1e-9);
    if (std::abs(dec.weights.sum() - 1.0) > 1e-12 || dec.weights.minCoeff() < -1e-12)
      return result("decomposition_optimality", false, "weights leave the simplex");
    if (!W.dual_contains(dec.certificate, 1e-9))
      return result("decomposition_optimality", false, "certificate leaves the dual cone");
    if (std::abs(dec.recompute_residual(x) - dec.residual) > 1e-10)
      return result("decomposition_optimality", false, "stored residual is stale");

    const int kk = static_cast<int>(dec.points.size());
    Mat A(d, kk);
    for (int j = 0; j < kk; ++j) A.col(j) = dec.points[j];
    auto resid = [&](const Vec& p, const Vec& c) { return (A * p + c - x).norm(); };
    const double base = dec.residual;
    const double delta = 1e-3;
    for (int i = 0; i < kk; ++i) {
      for (int j = 0; j < kk; ++j) {
        if (i == j || dec.weights[j] < delta) continue;
        Vec p = dec.weights;
        p[i] += delta;
        p[j] -= delta;
        if (resid(p, dec.certificate) < base - 1e-6)
          return result("decomposition_optimality", false, "simplex edge perturbation improves");
      }
    }
    for (const Vec& g : W.dual_generators()) {
      Vec up = dec.certificate + delta * g / g.norm();
      if (resid(dec.weights, up) < base - 1e-6)
        return result("decomposition_optimality", false, "certificate perturbation improves");
      Vec down = dec.certificate - delta * g / g.norm();
      if (W.dual_contains(down, 0.0) && resid(dec.weights, down) < base - 1e-6)
        return result("decomposition_optimality", false, "certificate perturbation improves");
    }
  }
  return result("decomposition_optimality", true, std::to_string(instances) + " instances");
}

namespace {

struct ReductionInstance {
  ConeSpec W;
  Regularizer phi;
  Oracle oracle;
  Vec y;
  double eps;
};

ReductionInstance random_reduction_instance(Rng& rng, int t) {
  const int d = 1 + t % 3;
  const int nv = 2 + t % 3;
  const double alpha = (t % 3 == 0) ? 1.0 : 1.0 + 0.5 * (t % 3);
  const int kind = t % 3;
  if (kind == 2) {
    // barycentric over a linear-image cone; K lives in the cone spanned by
    // M's columns so the exact-minimizer contract holds over W'.
    Mat M = Mat::Identity(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) M(i, j) += 0.3 * rng.uniform(-1.0, 1.0);
    if (std::abs(M.determinant()) < 0.1) M += Mat::Identity(d, d);
    std::vector<Vec> K;
    for (int j = 0; j < nv; ++j) {
      Vec z(d);
      for (int i = 0; i < d; ++i) z[i] = rng.uniform(0.0, 1.0);
      Vec v = M * z;
      if (v.norm() > 1.0) v /= v.norm() * 1.01;
      K.push_back(v);
    }
    ConeSpec W = ConeSpec::linear_image(M);
    Regularizer phi = Regularizer::barycentric(M * M.transpose());
    Oracle o = Oracle::vertex_exact(K, alpha, W);
    Vec y = 0.8 * rng.gaussian_vec(d);
    double eps = o.radius() * std::pow(10.0, rng.uniform(-2.0, 0.0));
    return {std::move(W), std::move(phi), std::move(o), std::move(y), eps};
  }
  std::vector<Vec> K;
  for (int j = 0; j < nv; ++j) {
    Vec v(d);
    for (int i = 0; i < d; ++i) v[i] = rng.uniform(0.0, 1.0);
    if (v.norm() > 1.0) v /= v.norm() * 1.01;
    K.push_back(v);
  }
  ConeSpec W = ConeSpec::orthant(d);
  Regularizer phi = (kind == 0) ? Regularizer::euclidean(d)
                                : Regularizer::neg_entropy(d, 1.0 / (2.0 * 2.0 + 2.0));
  Oracle o = Oracle::vertex_exact(K, alpha, W);
  Vec y(d);
  if (kind == 1) {
    for (int i = 0; i < d; ++i) y[i] = rng.uniform(0.05, 1.5);
  } else {
    y = 0.8 * rng.gaussian_vec(d);
  }
  double eps = o.radius() * std::pow(10.0, rng.uniform(-2.0, 0.0));
  return {std::move(W), std::move(phi), std::move(o), std::move(y), eps};
}

}  // namespace

VerifyResult check_pad_invariants(uint64_t seed, int instances) {
  Rng rng(seed);
  SamplerKnobs knobs = reduction_default_knobs(3);
  for (int t = 0; t < instances; ++t) {
    ReductionInstance inst = random_reduction_instance(rng, t);
    const double solver_tol = 0.1 * inst.eps;
    PadResult r = pad(inst.y, inst.eps, inst.W, inst.phi, inst.oracle,
                      derive_seed(seed, 50 + t), knobs);

    // Def. 3 item 1 at every iterate (generalized Pythagorean through the
    // oracle half-spaces).
    for (const Vec& xs : inst.oracle.kstar_vertices())
      for (size_t i = 0; i + 1 < r.iterates.size(); ++i)
        if (inst.phi.bregman(xs, r.iterates[i + 1]) >
            inst.phi.bregman(xs, r.iterates[i]) + 1e-8)
          return result("pad_invariants", false,
                        "divergence to a K* vertex increased at instance " + std::to_string(t));
    // Lemma 5: every step direction lies in the dual cone.
    for (size_t i = 0; i + 1 < r.iterates.size(); ++i)
      if (!inst.W.dual_contains(r.iterates[i + 1] - r.iterates[i], 1e-8))
        return result("pad_invariants", false, "step leaves W° at instance " + std::to_string(t));
    // Def. 3 item 2.
    if (r.decomp.residual > inst.eps + solver_tol + 1e-12)
      return result("pad_invariants", false,
                    "residual " + fmt(r.decomp.residual) + " exceeds eps " + fmt(inst.eps));
    if (!inst.W.dual_contains(r.decomp.certificate, 1e-9))
      return result("pad_invariants", false, "certificate outside W°");
    // Thm 2 iteration ceiling with the recorded divergence.
    if (r.iterations > pad_iteration_ceiling(inst.y, inst.eps, inst.phi, inst.oracle))
      return result("pad_invariants", false, "iteration ceiling exceeded");
    // Every queried direction stayed in W.
    for (const Vec& w : r.directions)
      if (!inst.W.contains(w, 1e-9))
        return result("pad_invariants", false, "queried direction escaped W");
  }
  return result("pad_invariants", true, std::to_string(instances) + " instances");
}

VerifyResult check_sod_invariants(uint64_t seed, int instances) {
  Rng rng(seed);
  SamplerKnobs knobs = reduction_default_knobs(3);
  int separations = 0, decomps = 0;
  for (int t = 0; t < instances; ++t) {
    ReductionInstance inst = random_reduction_instance(rng, t);
    const double R = inst.oracle.radius();
    Vec x = rng.sphere(inst.W.dim()) * rng.uniform(0.0, R);
    const double eps = std::min(inst.eps, 2.0 * R);
    SodResult r = sod(x, eps, inst.W, inst.oracle, derive_seed(seed, 90 + t), knobs);
    if (r.oracle_calls > sod_call_ceiling(R, eps, inst.W.dim()))
      return result("sod_invariants", false, "call ceiling exceeded");
    if (r.is_separation) {
      ++separations;
      if (std::abs(r.w.norm() - 1.0) > 1e-9)
        return result("sod_invariants", false, "separating normal is not unit");
      if (r.w.dot(x) > r.b - eps + 1e-9)
        return result("sod_invariants", false, "separation does not clear x by eps");
      double support = 1e300;
      for (const Vec& xs : inst.oracle.kstar_vertices()) support = std::min(support, r.w.dot(xs));
      if (r.b - eps > support + 1e-9)
        return result("sod_invariants", false, "separation cuts into K*");
    } else {
      ++decomps;
      const double budget = 3.0 * eps * 1.05 + 1e-9;
      if (r.decomp.residual > budget)
        return result("sod_invariants", false, "decomposition residual exceeds 3 eps");
      const int dirs = inst.W.dim() == 1 ? 2 : (inst.W.dim() == 2 ? 720 : 2000);
      if (!verify_domination(r.decomp.points, x, inst.W, budget, dirs))
        return result("sod_invariants", false, "decomposition fails directional domination at 3 eps");
    }
  }
  std::ostringstream ss;
  ss << instances << " instances (" << separations << " separations, " << decomps << " decompositions)";
  return result("sod_invariants", separations > 0 && decomps > 0, ss.str());
}

VerifyResult check_bandit_estimator(uint64_t seed, long rounds) {
  // d = 2 fixture with nonnegative spanner coordinates.
  std::vector<Vec> K;
  K.push_back((Vec(2) << 1.0, 0.0).finished());
  K.push_back((Vec(2) << 0.0, 1.0).finished());
  K.push_back((Vec(2) << 0.6, 0.35).finished());
  K.push_back((Vec(2) << 0.02, 0.01).finished());
  BarycentricSpanner sp = build_barycentric_spanner(K, 2.0);
  const int d = 2;
  const double L = 1.0, R = 1.0;
  const double gamma = 0.2;
  Vec f = (Vec(2) << 0.3, 0.7).finished();
  if (f.norm() > L) f *= L / f.norm();

  Mat qinv = sp.M_inv.transpose() * sp.M_inv;
  // Exact moments by enumeration over the explore branch.
  Vec exact_mean = Vec::Zero(d);
  double exact_second = 0.0;
  for (int i = 0; i < d; ++i) {
    const double li = sp.q[i].dot(f);
    Vec fh = (d / gamma) * li * (qinv * sp.q[i]);
    exact_mean += gamma * (1.0 / d) * fh;
    exact_second += gamma * (1.0 / d) * fh.dot(sp.Q * fh);
  }
  const double second_bound = L * L * R * R * d * d / gamma;
  if (exact_second > second_bound + 1e-9)
    return result("bandit_estimator", false, "exact second moment exceeds the bound");
  if ((exact_mean - f).norm() > 1e-9)
    return result("bandit_estimator", false, "estimator is not exactly unbiased in expectation");

  Rng rng(seed);
  Vec acc = Vec::Zero(d);
  Mat acc2 = Mat::Zero(d, 2);  // per-coordinate sum of squares for the SE
  double second_acc = 0.0;
  for (long t = 0; t < rounds; ++t) {
    Vec fh = Vec::Zero(d);
    if (rng.uniform() < gamma) {
      int i = rng.uniform_int(d);
      fh = (d / gamma) * sp.q[i].dot(f) * (qinv * sp.q[i]);
    }
    acc += fh;
    for (int j = 0; j < d; ++j) acc2(j, 0) += fh[j] * fh[j];
    second_acc += fh.dot(sp.Q * fh);
  }
  Vec mean = acc / static_cast<double>(rounds);
  bool pass = true;
  std::ostringstream ss;
  for (int j = 0; j < d; ++j) {
    const double var = acc2(j, 0) / rounds - mean[j] * mean[j];
    const double se = std::sqrt(std::max(var, 1e-30) / rounds);
    if (std::abs(mean[j] - f[j]) > 3.0 * se + 1e-12) pass = false;
  }
  const double emp_second = second_acc / static_cast<double>(rounds);
  if (emp_second > second_bound * (1.0 + 1e-6)) pass = false;
  ss << "mean err " << fmt((mean - f).norm()) << ", E[f~ Q f~] " << fmt(emp_second) << " <= "
     << fmt(second_bound);
  return result("bandit_estimator", pass, ss.str());
}

std::vector<VerifyResult> run_property_suite(uint64_t seed) {
  std::vector<VerifyResult> out;
  out.push_back(check_pythagorean_dual_projection(derive_seed(seed, 1), 60, 100));
  out.push_back(check_cone_project_dual(derive_seed(seed, 2), 1000));
  out.push_back(check_orthant_self_dual(derive_seed(seed, 3), 200));
  out.push_back(check_bregman_identities(derive_seed(seed, 4), 600));
  out.push_back(check_generalized_pythagorean(derive_seed(seed, 5), 500));
  out.push_back(check_smoothness_bound(derive_seed(seed, 6), 600));
  out.push_back(check_pnip_pairs(derive_seed(seed, 7), 1000));
  out.push_back(check_sampler_membership_determinism(derive_seed(seed, 8)));
  out.push_back(check_mc_rate(derive_seed(seed, 9)));
  out.push_back(check_lemma3_mass(derive_seed(seed, 10), 6, 2048, 1024));
  out.push_back(check_lemma7_equivalence(derive_seed(seed, 11), 60));
  out.push_back(check_decomposition_optimality(derive_seed(seed, 12), 40));
  out.push_back(check_pad_invariants(derive_seed(seed, 13), 25));
  out.push_back(check_sod_invariants(derive_seed(seed, 14), 25));
  out.push_back(check_bandit_estimator(derive_seed(seed, 15), 200000));
  return out;
}

}  // namespace oilo
