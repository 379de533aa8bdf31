// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

#include "oilo/decomposition.hpp"

#include <algorithm>
#include <cmath>

namespace oilo {

Vec Decomposition::combination() const {
  Vec s = Vec::Zero(points.empty() ? 0 : points[0].size());
  for (size_t i = 0; i < points.size(); ++i) s += weights[static_cast<int>(i)] * points[i];
  return s;
}

double Decomposition::recompute_residual(const Vec& x) const {
  return (combination() + certificate - x).norm();
}

namespace {

// min_p ||A p - b|| s.t. p >= 0, sum p = 1. Active-set over the simplex; k is
// small here (duplicates are collapsed upstream).
Vec simplex_lsq(const Mat& A, const Vec& b, const Vec& warm) {
  const int k = static_cast<int>(A.cols());
  if (k == 1) return Vec::Ones(1);

  Vec p = warm;
  if (p.size() != k || p.minCoeff() < 0.0 || std::abs(p.sum() - 1.0) > 1e-9) {
    p = Vec::Zero(k);
    int best = 0;
    double bestn = (A.col(0) - b).squaredNorm();
    for (int j = 1; j < k; ++j) {
      double nj = (A.col(j) - b).squaredNorm();
      if (nj < bestn) {
        bestn = nj;
        best = j;
      }
    }
    p[best] = 1.0;
  }

  const double tol = 1e-12;
  std::vector<bool> active(k);
  for (int j = 0; j < k; ++j) active[j] = p[j] > tol;

  for (int outer = 0; outer < 50 * (k + 1); ++outer) {
    // Solve the equality-constrained LS on the active support via the
    // bordered KKT system; COD handles the rank-deficient case.
    std::vector<int> idx;
    for (int j = 0; j < k; ++j)
      if (active[j]) idx.push_back(j);
    const int m = static_cast<int>(idx.size());
    Mat As(A.rows(), m);
    for (int c = 0; c < m; ++c) As.col(c) = A.col(idx[c]);
    Mat kkt = Mat::Zero(m + 1, m + 1);
    kkt.topLeftCorner(m, m) = As.transpose() * As;
    kkt.topRightCorner(m, 1) = Vec::Ones(m);
    kkt.bottomLeftCorner(1, m) = Vec::Ones(m).transpose();
    Vec rhs(m + 1);
    rhs.head(m) = As.transpose() * b;
    rhs[m] = 1.0;
    Vec sol = kkt.completeOrthogonalDecomposition().solve(rhs);
    Vec q = sol.head(m);

    if (q.minCoeff() >= -tol) {
      Vec pn = Vec::Zero(k);
      for (int c = 0; c < m; ++c) pn[idx[c]] = std::max(q[c], 0.0);
      pn /= pn.sum();
      p = pn;
      // KKT check over the inactive set: gradient components must not beat
      // the support multiplier.
      Vec g = A.transpose() * (A * p - b);
      double nu = 1e300;
      for (int c = 0; c < m; ++c) nu = std::min(nu, g[idx[c]]);
      int enter = -1;
      double worst = -1e-10;
      for (int j = 0; j < k; ++j) {
        if (!active[j] && g[j] - nu < worst) {
          worst = g[j] - nu;
          enter = j;
        }
      }
      if (enter < 0) return p;
      active[enter] = true;
      continue;
    }

    // Step toward q until the first support weight hits zero; drop it.
    double alpha = 1.0;
    int drop = -1;
    for (int c = 0; c < m; ++c) {
      double pi = p[idx[c]];
      if (q[c] < tol && pi - q[c] > tol) {
        double a = pi / (pi - q[c]);
        if (a < alpha) {
          alpha = a;
          drop = idx[c];
        }
      }
    }
    for (int c = 0; c < m; ++c) p[idx[c]] += alpha * (q[c] - p[idx[c]]);
    if (drop >= 0) {
      p[drop] = 0.0;
      active[drop] = false;
    }
    for (int j = 0; j < k; ++j) p[j] = std::max(p[j], 0.0);
    p /= p.sum();
  }
  return p;
}

}  // namespace

Decomposition solve_decomposition(const std::vector<Vec>& V, const Vec& x, const ConeSpec& W,
                                  double tol, const Decomposition* warm) {
  if (V.empty()) throw SolverError("solve_decomposition: empty point set", 1e300);
  const int d = static_cast<int>(x.size());

  // Collapse duplicate points; remember one representative index per group.
  std::vector<Vec> distinct;
  std::vector<int> group(V.size());
  for (size_t i = 0; i < V.size(); ++i) {
    int found = -1;
    for (size_t j = 0; j < distinct.size(); ++j) {
      if ((V[i] - distinct[j]).lpNorm<Eigen::Infinity>() <= 1e-13) {
        found = static_cast<int>(j);
        break;
      }
    }
    if (found < 0) {
      distinct.push_back(V[i]);
      found = static_cast<int>(distinct.size()) - 1;
    }
    group[i] = found;
  }
  const int k = static_cast<int>(distinct.size());
  Mat A(d, k);
  for (int j = 0; j < k; ++j) A.col(j) = distinct[j];

  Vec p = Vec::Zero(k);
  Vec c = Vec::Zero(d);
  if (warm && static_cast<int>(warm->points.size()) <= k && warm->weights.size() > 0) {
    // Warm weights only make sense if the distinct set extends the old one.
    for (int j = 0; j < warm->weights.size() && j < k; ++j) p[j] = warm->weights[j];
    if (p.sum() > 0) p /= p.sum();
    c = warm->certificate;
    if (c.size() != d) c = Vec::Zero(d);
  }
  if (p.sum() <= 0) p = Vec::Ones(k) / k;

  double prev = (A * p + c - x).norm();
  const int max_pass = 10000;
  bool converged = false;
  for (int pass = 0; pass < max_pass; ++pass) {
    p = simplex_lsq(A, x - c, p);
    c = dual_cone_project(x - A * p, W);
    double r = (A * p + c - x).norm();
    if (prev - r < tol / 10.0 && pass > 0) {
      prev = r;
      converged = true;
      break;
    }
    prev = r;
  }
  if (!converged) throw SolverError("solve_decomposition: no convergence", prev);

  Decomposition out;
  out.points = distinct;
  out.weights = p;
  out.certificate = c;
  out.residual = (A * p + c - x).norm();
  return out;
}

namespace {

double halton(int index, int base) {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * (index % base);
    index /= base;
  }
  return r;
}

// Deterministic inverse-normal via Acklam's rational approximation; only
// used to spread quasi-random points over the sphere.
double inv_normal_cdf(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                             1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                             6.680131188771972e+01,  -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                             -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
  static const double dd[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                              3.754408661907416e+00};
  const double plow = 0.02425, phigh = 1 - plow;
  double q, r;
  if (p < plow) {
    q = std::sqrt(-2 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((dd[0] * q + dd[1]) * q + dd[2]) * q + dd[3]) * q + 1);
  }
  if (p > phigh) {
    q = std::sqrt(-2 * std::log(1 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((dd[0] * q + dd[1]) * q + dd[2]) * q + dd[3]) * q + 1);
  }
  q = p - 0.5;
  r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
}

}  // namespace

std::vector<Vec> domination_directions(const ConeSpec& W, int n_dirs) {
  const int d = W.dim();
  std::vector<Vec> dirs;
  if (W.kind() != ConeKind::halfspace_generated) {
    for (const Vec& g : W.generators()) dirs.push_back(g / g.norm());
  }
  const int primes[] = {2, 3, 5, 7, 11, 13};
  const double golden = 2.399963229728653;  // 2*pi*(1 - 1/phi)
  int attempts = 0;
  for (int i = 1; static_cast<int>(dirs.size()) < n_dirs && attempts < 200 * n_dirs; ++i, ++attempts) {
    Vec w(d);
    if (d == 2) {
      double theta = golden * i;
      w << std::cos(theta), std::sin(theta);
    } else if (d == 3) {
      // sphere map of the 2-D Halton sequence: uniform in (z, theta)
      double z = 1.0 - 2.0 * halton(i, 2);
      double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
      double theta = 2.0 * M_PI * halton(i, 3);
      w << rho * std::cos(theta), rho * std::sin(theta), z;
    } else {
      for (int j = 0; j < d; ++j) {
        double u = halton(i, primes[j % 6]);
        u = std::min(std::max(u, 1e-12), 1.0 - 1e-12);
        w[j] = inv_normal_cdf(u);
      }
      double n = w.norm();
      if (n < 1e-12) continue;
      w /= n;
    }
    if (W.contains(w, 0.0)) dirs.push_back(w);
  }
  return dirs;
}

double domination_value(const std::vector<Vec>& V, const Vec& x, const ConeSpec& W, int n_dirs) {
  double worst = -1e300;
  for (const Vec& w : domination_directions(W, n_dirs)) {
    double best = 1e300;
    for (const Vec& v : V) best = std::min(best, w.dot(v - x));
    worst = std::max(worst, best);
  }
  return worst;
}

bool verify_domination(const std::vector<Vec>& V, const Vec& x, const ConeSpec& W, double eps,
                       int n_dirs) {
  return domination_value(V, x, W, n_dirs) <= eps;
}

}  // namespace oilo
