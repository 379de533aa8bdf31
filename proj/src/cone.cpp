// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

#include "oilo/cone.hpp"

#include <algorithm>
#include <cmath>

namespace oilo {

ConeSpec ConeSpec::orthant(int d) { return ConeSpec(ConeKind::nonneg_orthant, d); }

ConeSpec ConeSpec::linear_image(const Mat& M) {
  if (M.rows() != M.cols()) throw UnsupportedConeError("linear_image: M must be square");
  Eigen::FullPivLU<Mat> lu(M);
  if (!lu.isInvertible()) throw UnsupportedConeError("linear_image: M must be invertible");
  ConeSpec c(ConeKind::linear_image, static_cast<int>(M.rows()));
  c.m_ = M;
  c.m_inv_t_ = lu.inverse().transpose();
  return c;
}

ConeSpec ConeSpec::halfspace_generated(std::vector<Vec> normals, int d) {
  if (normals.empty()) throw UnsupportedConeError("halfspace_generated: no normals");
  for (const Vec& a : normals)
    if (a.size() != d) throw UnsupportedConeError("halfspace_generated: normal dim mismatch");
  ConeSpec c(ConeKind::halfspace_generated, d);
  c.normals_ = std::move(normals);
  return c;
}

bool ConeSpec::contains(const Vec& w, double tol) const {
  switch (kind_) {
    case ConeKind::nonneg_orthant:
      return (w.array() >= -tol).all();
    case ConeKind::linear_image:
      return ((m_.transpose() * w).array() >= -tol).all();
    case ConeKind::halfspace_generated:
      for (const Vec& a : normals_)
        if (a.dot(w) < -tol) return false;
      return true;
  }
  return false;
}

bool ConeSpec::dual_contains(const Vec& y, double tol) const {
  switch (kind_) {
    case ConeKind::nonneg_orthant:
      return (y.array() >= -tol).all();
    case ConeKind::linear_image:
      // W° = M R^d_+, so y in W° iff M^{-1} y >= 0.
      return ((m_inv_t_.transpose() * y).array() >= -tol).all();
    case ConeKind::halfspace_generated: {
      // W° = cone{a_i}: check the NNLS residual.
      Vec p = nnls_cone_point(normals_, y);
      return (p - y).norm() <= std::max(tol, 1e-9 * (1.0 + y.norm()));
    }
  }
  return false;
}

ConeSpec ConeSpec::dual() const {
  switch (kind_) {
    case ConeKind::nonneg_orthant:
      return *this;
    case ConeKind::linear_image:
      // dual((M^T)^{-1} R^d_+) = M R^d_+ = ((M^{-T})^T)^{-1} R^d_+.
      return linear_image(m_inv_t_);
    case ConeKind::halfspace_generated:
      throw UnsupportedConeError("dual() not representable for halfspace_generated cones");
  }
  throw UnsupportedConeError("unknown cone kind");
}

std::vector<Vec> ConeSpec::generators() const {
  std::vector<Vec> g;
  switch (kind_) {
    case ConeKind::nonneg_orthant:
      for (int i = 0; i < d_; ++i) {
        Vec e = Vec::Zero(d_);
        e[i] = 1.0;
        g.push_back(e);
      }
      return g;
    case ConeKind::linear_image:
      // W = {w : M^T w >= 0} = M^{-T} R^d_+.
      for (int i = 0; i < d_; ++i) g.push_back(m_inv_t_.col(i));
      return g;
    case ConeKind::halfspace_generated:
      throw UnsupportedConeError("generators() not available for halfspace_generated cones");
  }
  return g;
}

std::vector<Vec> ConeSpec::dual_generators() const {
  switch (kind_) {
    case ConeKind::nonneg_orthant:
      return generators();
    case ConeKind::linear_image: {
      std::vector<Vec> g;
      for (int i = 0; i < d_; ++i) g.push_back(m_.col(i));
      return g;
    }
    case ConeKind::halfspace_generated:
      return normals_;
  }
  return {};
}

Vec ConeSpec::interior_direction() const {
  Vec v;
  switch (kind_) {
    case ConeKind::nonneg_orthant:
      v = Vec::Ones(d_);
      break;
    case ConeKind::linear_image:
      v = m_inv_t_ * Vec::Ones(d_);
      break;
    case ConeKind::halfspace_generated: {
      // Average of normalized inward normals is interior when the cone is
      // full-dimensional (all our use cases).
      v = Vec::Zero(d_);
      for (const Vec& a : normals_) v += a / a.norm();
      break;
    }
  }
  double n = v.norm();
  if (n < 1e-14) throw UnsupportedConeError("interior_direction: degenerate cone");
  return v / n;
}

const Mat& ConeSpec::matrix() const {
  if (kind_ != ConeKind::linear_image) throw UnsupportedConeError("matrix(): not a linear_image cone");
  return m_;
}

const Mat& ConeSpec::matrix_inv_t() const {
  if (kind_ != ConeKind::linear_image) throw UnsupportedConeError("matrix_inv_t(): not a linear_image cone");
  return m_inv_t_;
}

const std::vector<Vec>& ConeSpec::normals() const {
  if (kind_ != ConeKind::halfspace_generated)
    throw UnsupportedConeError("normals(): not a halfspace_generated cone");
  return normals_;
}

// ---------------------------------------------------------------------------
// NNLS over generators: Lawson-Hanson active set.
// ---------------------------------------------------------------------------

Vec nnls_cone_point(const std::vector<Vec>& generators, const Vec& x, double tol) {
  const int k = static_cast<int>(generators.size());
  const int d = static_cast<int>(x.size());
  Mat G(d, k);
  for (int j = 0; j < k; ++j) G.col(j) = generators[j];

  Vec lambda = Vec::Zero(k);
  std::vector<bool> passive(k, false);
  Vec resid = -x;  // G*lambda - x

  const int max_outer = 30 * (k + 1);
  for (int outer = 0; outer < max_outer; ++outer) {
    // w = -grad = G^T (x - G lambda)
    Vec w = -G.transpose() * resid;
    int best = -1;
    double best_w = tol;
    for (int j = 0; j < k; ++j) {
      if (!passive[j] && w[j] > best_w) {
        best_w = w[j];
        best = j;
      }
    }
    if (best < 0) break;  // KKT satisfied
    passive[best] = true;

    for (int inner = 0; inner < max_outer; ++inner) {
      std::vector<int> idx;
      for (int j = 0; j < k; ++j)
        if (passive[j]) idx.push_back(j);
      Mat Gp(d, idx.size());
      for (size_t c = 0; c < idx.size(); ++c) Gp.col(static_cast<int>(c)) = G.col(idx[c]);
      Vec z = Gp.completeOrthogonalDecomposition().solve(x);

      bool all_pos = true;
      for (int c = 0; c < z.size(); ++c)
        if (z[c] <= tol) all_pos = false;
      if (all_pos) {
        lambda.setZero();
        for (size_t c = 0; c < idx.size(); ++c) lambda[idx[c]] = z[static_cast<int>(c)];
        break;
      }
      // Step from lambda toward z until the first passive coefficient hits 0.
      double alpha = 1.0;
      for (size_t c = 0; c < idx.size(); ++c) {
        double zi = z[static_cast<int>(c)];
        double li = lambda[idx[c]];
        if (zi <= tol && li - zi > 0) alpha = std::min(alpha, li / (li - zi));
      }
      for (size_t c = 0; c < idx.size(); ++c) {
        int j = idx[c];
        lambda[j] += alpha * (z[static_cast<int>(c)] - lambda[j]);
        if (lambda[j] <= tol) {
          lambda[j] = 0.0;
          passive[j] = false;
        }
      }
    }
    resid = G * lambda - x;
  }
  return G * lambda;
}

Vec dual_cone_project(const Vec& x, const ConeSpec& W) {
  switch (W.kind()) {
    case ConeKind::nonneg_orthant:
      return x.cwiseMax(0.0);
    case ConeKind::linear_image:
    case ConeKind::halfspace_generated:
      return nnls_cone_point(W.dual_generators(), x);
  }
  throw UnsupportedConeError("dual_cone_project: unsupported cone kind");
}

Vec cone_project(const Vec& x, const ConeSpec& W) {
  if (W.kind() == ConeKind::nonneg_orthant) return x.cwiseMax(0.0);
  // Moreau: x = Pi_W(x) + Pi_{-W°}(x) and Pi_{-W°}(x) = -Pi_{W°}(-x).
  return x + dual_cone_project(-x, W);
}

bool ConeSection::contains(const Vec& w, double tol) const {
  if (!base_.contains(w, tol)) return false;
  if (w.norm() > radius_ + tol) return false;
  for (const HalfspaceCut& c : cuts_)
    if (c.normal.dot(w) < c.offset - tol) return false;
  return true;
}

}  // namespace oilo
