// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

#pragma once

#include <vector>

#include "oilo/cone.hpp"
#include "oilo/common.hpp"

namespace oilo {

// Output of min_{p in simplex, c in W°} || sum_i p_i v_i + c - x ||:
// the convex combination of feasible points plus a dual-cone certificate
// that together almost dominate the target.
struct Decomposition {
  std::vector<Vec> points;  // v_1..v_k
  Vec weights;              // p in the simplex
  Vec certificate;          // c in W°
  double residual = 0.0;

  Vec combination() const;  // sum_i p_i v_i
  double recompute_residual(const Vec& x) const;
};

// Alternating minimization: exact simplex-constrained least squares in p
// (active set) alternated with c <- Pi_{W°}(x - sum p_i v_i), iterated until
// the residual change drops below tol/10 (capped at 1e4 passes). Duplicate
// points in V are collapsed before solving and the weights re-expanded.
// Throws SolverError (carrying the best residual) on non-convergence.
Decomposition solve_decomposition(const std::vector<Vec>& V, const Vec& x, const ConeSpec& W,
                                  double tol, const Decomposition* warm = nullptr);

// Deterministic low-discrepancy unit directions inside W (golden-angle circle
// for d=2, Fibonacci sphere for d=3, Halton-Gaussian sphere otherwise), plus
// the canonical generators when the cone kind exposes them.
std::vector<Vec> domination_directions(const ConeSpec& W, int n_dirs);

// Brute-force side of the Lemma-7 equivalence: true iff every sampled unit
// direction w in W has min_i w.(v_i - x) <= eps.
bool verify_domination(const std::vector<Vec>& V, const Vec& x, const ConeSpec& W, double eps,
                       int n_dirs);

// max over sampled directions of min_i w.(v_i - x); the sampled analogue of
// the optimal decomposition residual when positive.
double domination_value(const std::vector<Vec>& V, const Vec& x, const ConeSpec& W, int n_dirs);

}  // namespace oilo
