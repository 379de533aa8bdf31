// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

#pragma once

#include <optional>
#include <vector>

#include "oilo/common.hpp"

namespace oilo {

enum class ConeKind { nonneg_orthant, linear_image, halfspace_generated };

// A convex cone with an exact finite description.
//
//   nonneg_orthant      W = R^d_+
//   linear_image(M)     W = (M^T)^{-1} R^d_+ = {w : M^T w >= 0}, M invertible
//   halfspace_generated W = {w : a_i^T w >= 0 for all inward normals a_i}
//
// The first two kinds are closed under duality: the orthant is self-dual and
// dual(linear_image(M)) = M R^d_+ = linear_image(M^{-T}).
class ConeSpec {
 public:
  static ConeSpec orthant(int d);
  static ConeSpec linear_image(const Mat& M);
  static ConeSpec halfspace_generated(std::vector<Vec> normals, int d);

  int dim() const { return d_; }
  ConeKind kind() const { return kind_; }

  bool contains(const Vec& w, double tol = 0.0) const;

  // Membership in the dual cone W°.
  bool dual_contains(const Vec& y, double tol = 0.0) const;

  ConeSpec dual() const;  // throws UnsupportedConeError for halfspace_generated

  // Generators of the cone itself (W = cone{g_i}); defined for the orthant
  // and linear_image kinds.
  std::vector<Vec> generators() const;

  // Generators of the dual cone W° (defined for all kinds: the orthant is
  // self-generated, M R^d_+ is generated by M's columns, and the dual of a
  // half-space intersection is generated by the inward normals).
  std::vector<Vec> dual_generators() const;

  // A unit vector strictly inside the cone.
  Vec interior_direction() const;

  const Mat& matrix() const;            // linear_image only
  const Mat& matrix_inv_t() const;      // (M^T)^{-1}, linear_image only
  const std::vector<Vec>& normals() const;

 private:
  ConeSpec(ConeKind k, int d) : kind_(k), d_(d) {}
  ConeKind kind_;
  int d_;
  Mat m_, m_inv_t_;          // linear_image
  std::vector<Vec> normals_;  // halfspace_generated
};

// min_{a >= 0} || G a - x ||, returns G a. Active-set NNLS over the columns
// of G; fine for the small generator counts used here.
Vec nnls_cone_point(const std::vector<Vec>& generators, const Vec& x, double tol = 1e-10);

// Euclidean projection of x onto the dual cone W°.
Vec dual_cone_project(const Vec& x, const ConeSpec& W);

// Euclidean projection of x onto W itself, via the Moreau decomposition
// x = Pi_W(x) - Pi_{W°}(-x).
Vec cone_project(const Vec& x, const ConeSpec& W);

// Half-space {w : normal^T w >= offset}.
struct HalfspaceCut {
  Vec normal;
  double offset = 0.0;
};

// A cone intersected with a ball and an accumulated list of half-space cuts:
// the W_i sets maintained by the oracle reductions.
class ConeSection {
 public:
  ConeSection(ConeSpec base, double radius) : base_(std::move(base)), radius_(radius) {}

  bool contains(const Vec& w, double tol = 0.0) const;
  void add_cut(HalfspaceCut cut) { cuts_.push_back(std::move(cut)); }

  const ConeSpec& base() const { return base_; }
  double radius() const { return radius_; }
  const std::vector<HalfspaceCut>& cuts() const { return cuts_; }
  int dim() const { return base_.dim(); }

 private:
  ConeSpec base_;
  double radius_;
  std::vector<HalfspaceCut> cuts_;
};

}  // namespace oilo
