// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

#pragma once

#include "oilo/common.hpp"

namespace oilo {

enum class RegKind { euclidean, neg_entropy, barycentric };

// A Legendre regularizer with closed-form gradient, inverse gradient and
// Bregman machinery. Three kinds:
//
//   euclidean    phi(x) = 1/2 ||x||^2            domain R^d,   mu = 1
//   neg_entropy  phi(x) = sum x_i (log x_i - 1)  domain R^d_+, mu supplied
//   barycentric  phi(x) = 1/2 x^T Q^{-1} x       domain R^d,   mu = 1/lambda_max(Q)
class Regularizer {
 public:
  static Regularizer euclidean(int d);
  // mu must lower-bound the Hessian diag(1/x_i) on the region of interest,
  // i.e. mu <= 1/x_max.
  static Regularizer neg_entropy(int d, double mu);
  static Regularizer barycentric(const Mat& Q);

  RegKind kind() const { return kind_; }
  int dim() const { return d_; }
  double mu() const { return mu_; }

  bool in_domain(const Vec& x, bool interior = false) const;

  double value(const Vec& x) const;
  Vec grad(const Vec& x) const;          // requires interior point
  Vec grad_inverse(const Vec& g) const;  // closed form per kind

  // D_phi(x, y) = phi(x) - phi(y) - grad(y).(x - y); y must be interior.
  double bregman(const Vec& x, const Vec& y) const;

  // x with grad(x') = grad(x) - eta g.
  Vec mirror_step(const Vec& x, const Vec& g, double eta) const;

  // argmin phi over the domain (the y_1 initialization).
  Vec argmin() const;

  // Bregman projection of z onto the half-space {y : w.(y - v) >= 0}.
  // Returns z unchanged when already feasible. For neg_entropy this solves
  // the KKT multiplier by bisection (tolerance 1e-12 on w.(y - v)).
  Vec bregman_project_halfspace(const Vec& z, const Vec& w, const Vec& v) const;

  const Mat& Q() const;
  const Mat& Q_inv() const;

 private:
  Regularizer(RegKind k, int d) : kind_(k), d_(d) {}
  RegKind kind_;
  int d_;
  double mu_ = 1.0;
  Mat q_, q_inv_;
};

// Conservative default for A >= max_{x* in K*} phi(x*) - phi(y_1), where
// K* lives in B(0, r_star). beta only matters for the barycentric kind.
double phi_diameter_bound(RegKind kind, double r_star, int d, double alpha = 1.0,
                          double beta = 1.0);

}  // namespace oilo
