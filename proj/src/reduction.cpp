// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

#include "oilo/reduction.hpp"

#include <cmath>

namespace oilo {

bool pnip_compatible(const Regularizer& phi, const ConeSpec& W) {
  switch (phi.kind()) {
    case RegKind::euclidean: {
      // Need W subseteq W°, i.e. pairwise nonnegative generators.
      if (W.kind() == ConeKind::nonneg_orthant) return true;
      if (W.kind() == ConeKind::halfspace_generated) return false;  // generators unknown
      auto gens = W.generators();
      for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i; j < gens.size(); ++j)
          if (gens[i].dot(gens[j]) < -1e-12) return false;
      return true;
    }
    case RegKind::neg_entropy:
      return W.kind() == ConeKind::nonneg_orthant;
    case RegKind::barycentric: {
      if (W.kind() == ConeKind::nonneg_orthant)
        return (phi.Q() - Mat::Identity(W.dim(), W.dim())).norm() < 1e-9;
      if (W.kind() != ConeKind::linear_image) return false;
      const Mat& M = W.matrix();
      return (M * M.transpose() - phi.Q()).norm() <= 1e-9 * (1.0 + phi.Q().norm());
    }
  }
  return false;
}

SamplerKnobs reduction_default_knobs(int d) {
  SamplerKnobs k;
  k.cloud = 48;
  k.burn = 40 * d;
  k.thin = 3 * d * d;
  return k;
}

namespace {

// Shared loop state: the direction section W_i = W cap B(0,1) with cuts,
// sampled through a persistent warm cloud.
struct DirectionCone {
  CloudSampler sampler;
  bool dead = false;

  DirectionCone(const ConeSpec& W, uint64_t seed, const SamplerKnobs& knobs)
      : sampler(CutBody::from_section(ConeSection(W, 1.0)),
                W.interior_direction() * 0.5, seed, knobs) {}

  Vec centroid() {
    sampler.refresh();
    Vec w = sampler.mean().mean;
    if (!sampler.body().contains(w, 0.0)) w = sampler.snap_inside(w);
    return w;
  }

  void cut(const Vec& normal, double offset) {
    if (!sampler.add_cut({normal, offset})) dead = true;
  }
};

}  // namespace

long pad_iteration_ceiling(const Vec& y, double eps, const Regularizer& phi, const Oracle& oracle,
                           double radius) {
  double dmin = 1e300;
  for (const Vec& xs : oracle.kstar_vertices()) dmin = std::min(dmin, phi.bregman(xs, y));
  const double r = radius > 0 ? radius : oracle.radius();
  const double arg = (4.0 * r + 2.0 * std::sqrt(2.0 / phi.mu() * dmin)) / eps;
  return static_cast<long>(std::ceil(5.0 * phi.dim() * std::log(arg)));
}

PadResult pad(const Vec& y, double eps, const ConeSpec& W, const Regularizer& phi,
              Oracle& oracle, uint64_t seed, const SamplerKnobs& knobs,
              const ReductionOptions& opt) {
  const double R = opt.radius > 0 ? opt.radius : oracle.radius();
  if (!(eps > 0.0) || eps > R) throw ConfigError("pad: eps must lie in (0, R]");
  if (!pnip_compatible(phi, W)) throw ConfigError("pad: (phi, W) is not a registered PNIP pair");
  if (!phi.in_domain(y, /*interior=*/true)) throw DomainError("pad: y not in the regularizer domain");

  const int d = W.dim();
  const long calls_before = oracle.counter().total();
  DirectionCone cone(W, seed, knobs);

  PadResult res;
  Vec z = y;
  res.iterates.push_back(z);
  std::vector<Vec> V;
  Decomposition best;
  bool have_decomp = false;
  const double solver_tol = opt.solver_tol_factor * eps;

  int i = 0;
  while (true) {
    ++i;
    Vec w = cone.centroid();
    res.directions.push_back(w);
    Vec v = oracle.query(w);
    V.push_back(v);

    Vec z_next = phi.bregman_project_halfspace(z, w, v);
    Vec cut_normal = v - z_next;
    if (cut_normal.norm() > 1e-13 * (1.0 + z_next.norm())) {
      cone.cut(cut_normal, 0.0);
    }
    z = z_next;
    res.iterates.push_back(z);

    if (opt.early_exit || cone.dead) {
      try {
        best = solve_decomposition(V, z, W, solver_tol, have_decomp ? &best : nullptr);
        have_decomp = true;
        if (opt.early_exit && best.residual <= eps) {
          res.early_stop = true;
          break;
        }
      } catch (const SolverError&) {
        // keep iterating; the final solve below will surface persistent failures
      }
    }
    if (cone.dead) {
      res.degenerate_stop = true;
      break;
    }
    if (static_cast<double>(i) >= 5.0 * d * std::log(2.0 * (R + z.norm()) / eps)) break;
  }

  if (!have_decomp) best = solve_decomposition(V, z, W, solver_tol);
  res.y_prime = z;
  res.decomp = best;
  res.iterations = i;
  res.oracle_calls = oracle.counter().total() - calls_before;
  return res;
}

long sod_call_ceiling(double radius, double eps, int d) {
  return static_cast<long>(std::ceil(5.0 * d * std::log(4.0 * radius / eps)));
}

SodResult sod(const Vec& x, double eps, const ConeSpec& W, Oracle& oracle, uint64_t seed,
              const SamplerKnobs& knobs, const ReductionOptions& opt) {
  const double R = opt.radius > 0 ? opt.radius : oracle.radius();
  if (!(eps > 0.0) || eps > 2.0 * R) throw ConfigError("sod: eps must lie in (0, 2R]");
  if (x.norm() > R + 1e-9) throw DomainError("sod: x outside B(0, R)");

  const int d = W.dim();
  const long kmax = sod_call_ceiling(R, eps, d);
  const long calls_before = oracle.counter().total();
  DirectionCone cone(W, seed, knobs);

  SodResult res;
  std::vector<Vec> V;
  Decomposition best;
  bool have_decomp = false;
  const double solver_tol = opt.solver_tol_factor * eps;

  for (long i = 1; i <= kmax; ++i) {
    res.iterations = static_cast<int>(i);
    Vec w = cone.centroid();
    Vec v = oracle.query(w);

    if (w.dot(x) <= w.dot(v) - eps) {
      const double wn = w.norm();
      res.is_separation = true;
      res.w = w / wn;
      res.b = w.dot(v) / wn;
      res.oracle_calls = oracle.counter().total() - calls_before;
      return res;
    }
    V.push_back(v);

    if (opt.early_exit) {
      try {
        best = solve_decomposition(V, x, W, solver_tol, have_decomp ? &best : nullptr);
        have_decomp = true;
        if (best.residual <= 3.0 * eps) {
          res.early_stop = true;
          break;
        }
      } catch (const SolverError&) {
      }
    }
    cone.cut(v - x, eps);
    if (cone.dead) {
      res.degenerate_stop = true;
      break;
    }
  }

  if (!have_decomp || (!res.early_stop && !res.degenerate_stop))
    best = solve_decomposition(V, x, W, solver_tol, have_decomp ? &best : nullptr);
  res.is_separation = false;
  res.decomp = best;
  res.oracle_calls = oracle.counter().total() - calls_before;
  return res;
}

}  // namespace oilo
