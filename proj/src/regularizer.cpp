// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

#include "oilo/regularizer.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace oilo {

Regularizer Regularizer::euclidean(int d) {
  Regularizer r(RegKind::euclidean, d);
  r.mu_ = 1.0;
  return r;
}

Regularizer Regularizer::neg_entropy(int d, double mu) {
  if (mu <= 0) throw ConfigError("neg_entropy: mu must be positive");
  Regularizer r(RegKind::neg_entropy, d);
  r.mu_ = mu;
  return r;
}

Regularizer Regularizer::barycentric(const Mat& Q) {
  if (Q.rows() != Q.cols()) throw ConfigError("barycentric: Q must be square");
  Regularizer r(RegKind::barycentric, static_cast<int>(Q.rows()));
  Eigen::SelfAdjointEigenSolver<Mat> es(Q);
  if (es.eigenvalues().minCoeff() <= 0) throw ConfigError("barycentric: Q must be positive definite");
  r.q_ = Q;
  r.q_inv_ = es.operatorInverseSqrt() * es.operatorInverseSqrt();
  r.mu_ = 1.0 / es.eigenvalues().maxCoeff();
  return r;
}

bool Regularizer::in_domain(const Vec& x, bool interior) const {
  if (x.size() != d_) return false;
  if (kind_ != RegKind::neg_entropy) return true;
  if (interior) return (x.array() > 0.0).all();
  return (x.array() >= 0.0).all();
}

double Regularizer::value(const Vec& x) const {
  if (!in_domain(x)) throw DomainError("regularizer value: point outside domain");
  switch (kind_) {
    case RegKind::euclidean:
      return 0.5 * x.squaredNorm();
    case RegKind::neg_entropy: {
      double s = 0.0;
      for (int i = 0; i < d_; ++i) {
        if (x[i] > 0.0) s += x[i] * (std::log(x[i]) - 1.0);
        // x_i = 0 contributes 0 (limit)
      }
      return s;
    }
    case RegKind::barycentric:
      return 0.5 * x.dot(q_inv_ * x);
  }
  return 0.0;
}

Vec Regularizer::grad(const Vec& x) const {
  if (!in_domain(x, /*interior=*/true)) throw DomainError("regularizer grad: point not interior");
  switch (kind_) {
    case RegKind::euclidean:
      return x;
    case RegKind::neg_entropy:
      return x.array().log().matrix();
    case RegKind::barycentric:
      return q_inv_ * x;
  }
  return x;
}

Vec Regularizer::grad_inverse(const Vec& g) const {
  switch (kind_) {
    case RegKind::euclidean:
      return g;
    case RegKind::neg_entropy:
      return g.array().exp().matrix();
    case RegKind::barycentric:
      return q_ * g;
  }
  return g;
}

double Regularizer::bregman(const Vec& x, const Vec& y) const {
  if (!in_domain(x)) throw DomainError("bregman: first argument outside domain");
  if (!in_domain(y, /*interior=*/true)) throw DomainError("bregman: second argument not interior");
  switch (kind_) {
    case RegKind::euclidean:
      return 0.5 * (x - y).squaredNorm();
    case RegKind::neg_entropy: {
      // sum x_i log(x_i / y_i) - x_i + y_i
      double s = 0.0;
      for (int i = 0; i < d_; ++i) {
        if (x[i] > 0.0) s += x[i] * (std::log(x[i]) - std::log(y[i]));
        s += y[i] - x[i];
      }
      return std::max(s, 0.0);
    }
    case RegKind::barycentric: {
      Vec diff = x - y;
      return 0.5 * diff.dot(q_inv_ * diff);
    }
  }
  return 0.0;
}

Vec Regularizer::mirror_step(const Vec& x, const Vec& g, double eta) const {
  return grad_inverse(grad(x) - eta * g);
}

Vec Regularizer::argmin() const {
  switch (kind_) {
    case RegKind::euclidean:
    case RegKind::barycentric:
      return Vec::Zero(d_);
    case RegKind::neg_entropy:
      // grad = log x = 0 at the all-ones point, which is interior.
      return Vec::Ones(d_);
  }
  return Vec::Zero(d_);
}

Vec Regularizer::bregman_project_halfspace(const Vec& z, const Vec& w, const Vec& v) const {
  if (w.norm() == 0.0) throw DomainError("bregman_project_halfspace: zero normal");
  const double slack = w.dot(z - v);
  if (slack >= 0.0) return z;

  switch (kind_) {
    case RegKind::euclidean:
      return z + (w.dot(v - z) / w.squaredNorm()) * w;
    case RegKind::barycentric: {
      // KKT: y = z + lambda Q w with w.(y - v) = 0.
      double denom = w.dot(q_ * w);
      double lambda = w.dot(v - z) / denom;
      return z + lambda * (q_ * w);
    }
    case RegKind::neg_entropy: {
      // y(lambda)_i = z_i exp(lambda w_i); h(lambda) = w.(y(lambda) - v) is
      // strictly increasing. Double lambda_max until the constraint flips
      // sign, then bisect to 1e-12.
      auto h = [&](double lambda) {
        double s = -w.dot(v);
        for (int i = 0; i < d_; ++i) s += w[i] * z[i] * std::exp(lambda * w[i]);
        return s;
      };
      double lo = 0.0, hi = 1.0;
      int doublings = 0;
      while (h(hi) < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (++doublings > 200) throw InfeasibleError("bregman_project_halfspace: half-space misses the domain");
      }
      for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (h(mid) < 0.0)
          lo = mid;
        else
          hi = mid;
        if (std::abs(h(mid)) < 1e-12) break;
      }
      double lambda = 0.5 * (lo + hi);
      Vec y(d_);
      for (int i = 0; i < d_; ++i) y[i] = z[i] * std::exp(lambda * w[i]);
      return y;
    }
  }
  return z;
}

const Mat& Regularizer::Q() const {
  if (kind_ != RegKind::barycentric) throw ConfigError("Q(): not a barycentric regularizer");
  return q_;
}

const Mat& Regularizer::Q_inv() const {
  if (kind_ != RegKind::barycentric) throw ConfigError("Q_inv(): not a barycentric regularizer");
  return q_inv_;
}

double phi_diameter_bound(RegKind kind, double r_star, int d, double alpha, double beta) {
  switch (kind) {
    case RegKind::euclidean:
      return 0.5 * r_star * r_star;
    case RegKind::neg_entropy:
      // sup of sum x_i(log x_i - 1) over the r_star ball plus phi(ones) = -d.
      return r_star * d * (std::max(std::log(r_star), 0.0) + 1.0) + d;
    case RegKind::barycentric:
      return 0.5 * alpha * alpha * beta * beta * d;
  }
  return 1.0;
}

}  // namespace oilo
