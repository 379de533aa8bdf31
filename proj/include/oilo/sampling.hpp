// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

#pragma once

#include <functional>
#include <vector>

#include "oilo/cone.hpp"
#include "oilo/common.hpp"

namespace oilo {

// A convex body given only through a membership oracle.
struct BodyOracle {
  std::function<bool(const Vec&)> contains;
  double radius = 1.0;  // bounding ball B(0, radius)
  Vec interior;         // a point with contains(interior) = true
};

// A convex body with an explicit description: B(0, radius) intersected with
// half-spaces {x : normal.x >= offset}. Chord endpoints along a line are
// computed in closed form, which is what makes hit-and-run cheap here.
class CutBody {
 public:
  CutBody(int d, double radius) : d_(d), radius_(radius) {}

  static CutBody from_section(const ConeSection& s);
  static CutBody box(const Vec& lo, const Vec& hi);  // axis-aligned box

  void add_cut(HalfspaceCut cut) { cuts_.push_back(std::move(cut)); }
  bool contains(const Vec& x, double tol = 0.0) const;

  // Intersection of the line {x + t u} with the body; false if empty.
  bool chord(const Vec& x, const Vec& u, double& lo, double& hi) const;

  int dim() const { return d_; }
  double radius() const { return radius_; }
  const std::vector<HalfspaceCut>& cuts() const { return cuts_; }

  BodyOracle as_oracle(Vec interior) const;

 private:
  int d_;
  double radius_;
  std::vector<HalfspaceCut> cuts_;
};

// Density proportional to exp(-direction.x) restricted to a convex body;
// direction = 0 gives the uniform distribution.
struct LogLinearDensity {
  BodyOracle body;
  Vec direction;
};

struct SamplerKnobs {
  int cloud = 64;   // number of chains == retained points per refresh
  int burn = -1;    // -1 resolves to 100 d^2
  int thin = -1;    // -1 resolves to 100 d^2 (walk length per sample)
  int max_refresh = 64;
  double drift_tol = 0.5;  // mean drift threshold, relative to body radius

  int burn_for(int d) const { return burn >= 0 ? burn : 100 * d * d; }
  int thin_for(int d) const { return thin >= 0 ? thin : 100 * d * d; }
};

struct CentroidEstimate {
  Vec mean;
  Vec std_error;  // per coordinate, from chain batch means
  int samples = 0;
};

// Hit-and-run over a CutBody with a persistent cloud of chains. The cloud
// doubles as a warm start when the body shrinks by a cut (the W_i and K_t
// updates), and its points are the MC sample set for means and masses.
//
// advance_chains(steps, parallel) is the data-parallel kernel; each chain
// owns an RNG stream, so the parallel and serial paths produce identical
// clouds. refresh() picks the path from the global thread setting.
class CloudSampler {
 public:
  CloudSampler(CutBody body, Vec interior, uint64_t seed, const SamplerKnobs& knobs);

  void set_direction(const Vec& g) { g_ = g; }
  const Vec& direction() const { return g_; }

  void advance_chains(int steps, bool parallel);
  void refresh();  // one thinning sweep on every chain

  // Shrink the body by one cut, keeping surviving points as warm starts.
  // Returns false (body presumed degenerate) when no point survives.
  bool add_cut(const HalfspaceCut& cut);

  CentroidEstimate mean() const;
  double mass(const HalfspaceCut& h, double* std_error = nullptr) const;

  const std::vector<Vec>& cloud() const { return points_; }
  const CutBody& body() const { return body_; }

  // Snap a point that drifted marginally outside back into the body by
  // bisecting toward the deepest cloud point.
  Vec snap_inside(Vec x) const;

 private:
  void step_chain(int c, int steps);

  CutBody body_;
  Vec g_;
  SamplerKnobs knobs_;
  std::vector<Vec> points_;
  std::vector<Rng> rngs_;
};

// --- spec-level operations ---------------------------------------------------

// n approximately-uniform points from the body (membership-oracle path with
// bisection chord finding). Throws InvalidBodyError if the interior point
// fails its own membership test.
std::vector<Vec> sample_body(const BodyOracle& body, int n, uint64_t seed,
                             const SamplerKnobs& knobs = {});

// Exact-chord overload for explicitly described bodies.
std::vector<Vec> sample_body(const CutBody& body, const Vec& interior, int n, uint64_t seed,
                             const SamplerKnobs& knobs = {});

// MC centroid of a cone section. Throws DegenerateSectionError when no
// interior point can be exhibited.
CentroidEstimate estimate_centroid(const ConeSection& s, int n, uint64_t seed,
                                   const SamplerKnobs& knobs = {});

// Mean of a log-linear density. Splits the sample set and raises
// SamplerDiagnosticError if the half-means disagree by more than
// drift_tol * radius after max_refresh sweeps.
Vec loglinear_mean(const LogLinearDensity& density, int n, uint64_t seed,
                   const SamplerKnobs& knobs = {});

// Probability mass of the half-space under the density, in [0,1], with an
// optional MC standard error.
double halfspace_mass(const LogLinearDensity& density, const HalfspaceCut& h, int n,
                      uint64_t seed, const SamplerKnobs& knobs = {}, double* std_error = nullptr);

// Interior point for a cone section (base interior direction scaled into the
// ball, then repaired against the cuts via the cloud machinery); throws
// DegenerateSectionError on failure.
Vec section_interior_point(const ConeSection& s);

}  // namespace oilo
