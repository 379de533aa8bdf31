// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

#pragma once

#include "oilo/decomposition.hpp"
#include "oilo/oracle.hpp"
#include "oilo/regularizer.hpp"
#include "oilo/sampling.hpp"

namespace oilo {

// Registered PNIP pairs: (euclidean, W with pairwise-nonnegative generators),
// (neg_entropy, nonneg orthant), (barycentric Q = M M^T, (M^T)^{-1} R^d_+).
bool pnip_compatible(const Regularizer& phi, const ConeSpec& W);

struct ReductionOptions {
  bool early_exit = true;       // stop once the running decomposition certifies
  double solver_tol_factor = 0.1;  // decomposition tol = factor * eps
  // Ball radius R used by the guards (K, K* and queried points live in
  // B(0,R)); <= 0 takes the oracle's own bound.
  double radius = -1.0;
};

SamplerKnobs reduction_default_knobs(int d);

struct PadResult {
  Vec y_prime;
  Decomposition decomp;
  int iterations = 0;
  long oracle_calls = 0;
  bool degenerate_stop = false;
  bool early_stop = false;
  std::vector<Vec> iterates;    // z_1 .. z_{k+1}
  std::vector<Vec> directions;  // w_1 .. w_k
};

// Projection-and-decomposition oracle: Bregman-project y toward the
// half-spaces exposed by O_{K,K*} while cutting the direction cone at its
// centroid, then decompose the final iterate over the collected points.
// Guarantees (tested downstream): D_phi(x*, y') <= D_phi(x*, y) for every
// x* in K*, and || sum p_i v_i + c - y' || <= eps with c in W°.
PadResult pad(const Vec& y, double eps, const ConeSpec& W, const Regularizer& phi,
              Oracle& oracle, uint64_t seed, const SamplerKnobs& knobs,
              const ReductionOptions& opt = {});

// Iteration ceiling from the recorded divergence: the pad loop never exceeds
// ceil(5 d log((4R + 2 sqrt((2/mu) min_{x*} D(x*, y))) / eps)).
long pad_iteration_ceiling(const Vec& y, double eps, const Regularizer& phi, const Oracle& oracle,
                           double radius = -1.0);

struct SodResult {
  bool is_separation = false;
  Vec w;           // unit normal (separation branch)
  double b = 0.0;  // offset: w.x <= b - eps <= min_{K*} w.x* - eps
  Decomposition decomp;  // decomposition branch, residual <= 3 eps
  int iterations = 0;
  long oracle_calls = 0;
  bool degenerate_stop = false;
  bool early_stop = false;
};

// Separation-or-decomposition oracle; uses at most ceil(5 d log(4R/eps))
// oracle calls.
SodResult sod(const Vec& x, double eps, const ConeSpec& W, Oracle& oracle, uint64_t seed,
              const SamplerKnobs& knobs, const ReductionOptions& opt = {});

long sod_call_ceiling(double radius, double eps, int d);

}  // namespace oilo
