// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

#include "oilo/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace oilo {

namespace {

// Inverse-CDF draw from the density ~ exp(a t) truncated to [lo, hi],
// written to stay stable for |a (hi-lo)| anywhere from 0 to hundreds.
double truncated_exp_draw(double a, double lo, double hi, double u) {
  const double len = hi - lo;
  const double s = a * len;
  if (std::abs(s) < 1e-9) return lo + u * len;
  if (s > 0.0) return hi + std::log(u + (1.0 - u) * std::exp(-s)) / a;
  return lo + std::log1p(u * std::expm1(s)) / a;
}

}  // namespace

// ---------------------------------------------------------------------------
// CutBody
// ---------------------------------------------------------------------------

CutBody CutBody::from_section(const ConeSection& s) {
  CutBody b(s.dim(), s.radius());
  const ConeSpec& base = s.base();
  switch (base.kind()) {
    case ConeKind::nonneg_orthant:
      for (int i = 0; i < s.dim(); ++i) {
        Vec e = Vec::Zero(s.dim());
        e[i] = 1.0;
        b.add_cut({e, 0.0});
      }
      break;
    case ConeKind::linear_image:
      // (M^T w)_i >= 0, i.e. the columns of M are the inward normals.
      for (int i = 0; i < s.dim(); ++i) b.add_cut({base.matrix().col(i), 0.0});
      break;
    case ConeKind::halfspace_generated:
      for (const Vec& a : base.normals()) b.add_cut({a, 0.0});
      break;
  }
  for (const HalfspaceCut& c : s.cuts()) b.add_cut(c);
  return b;
}

CutBody CutBody::box(const Vec& lo, const Vec& hi) {
  const int d = static_cast<int>(lo.size());
  double r2 = 0.0;
  for (int i = 0; i < d; ++i) r2 += std::max(lo[i] * lo[i], hi[i] * hi[i]);
  CutBody b(d, std::sqrt(r2) * (1.0 + 1e-9) + 1e-12);
  for (int i = 0; i < d; ++i) {
    Vec e = Vec::Zero(d);
    e[i] = 1.0;
    b.add_cut({e, lo[i]});
    b.add_cut({-e, -hi[i]});
  }
  return b;
}

bool CutBody::contains(const Vec& x, double tol) const {
  if (x.norm() > radius_ + tol) return false;
  for (const HalfspaceCut& c : cuts_)
    if (c.normal.dot(x) < c.offset - tol) return false;
  return true;
}

bool CutBody::chord(const Vec& x, const Vec& u, double& lo, double& hi) const {
  const double xu = x.dot(u);
  const double disc = xu * xu + radius_ * radius_ - x.squaredNorm();
  if (disc < 0.0) return false;
  const double root = std::sqrt(disc);
  lo = -xu - root;
  hi = -xu + root;
  for (const HalfspaceCut& c : cuts_) {
    const double au = c.normal.dot(u);
    const double ax = c.normal.dot(x);
    if (au > 1e-14) {
      lo = std::max(lo, (c.offset - ax) / au);
    } else if (au < -1e-14) {
      hi = std::min(hi, (c.offset - ax) / au);
    } else if (ax < c.offset - 1e-12) {
      return false;  // line parallel to a violated cut
    }
    if (lo > hi) return false;
  }
  return true;
}

BodyOracle CutBody::as_oracle(Vec interior) const {
  BodyOracle o;
  CutBody self = *this;
  o.contains = [self](const Vec& x) { return self.contains(x, 1e-12); };
  o.radius = radius_;
  o.interior = std::move(interior);
  return o;
}

// ---------------------------------------------------------------------------
// CloudSampler
// ---------------------------------------------------------------------------

CloudSampler::CloudSampler(CutBody body, Vec interior, uint64_t seed, const SamplerKnobs& knobs)
    : body_(std::move(body)), g_(Vec::Zero(body_.dim())), knobs_(knobs) {
  if (!body_.contains(interior, 1e-9)) throw InvalidBodyError("CloudSampler: interior point fails membership");
  const int c = std::max(1, knobs_.cloud);
  points_.assign(c, interior);
  rngs_.reserve(c);
  for (int i = 0; i < c; ++i) rngs_.emplace_back(derive_seed(seed, static_cast<uint64_t>(i)));
  advance_chains(knobs_.burn_for(body_.dim()), parallel_enabled());
}

void CloudSampler::step_chain(int c, int steps) {
  Rng& rng = rngs_[c];
  Vec& x = points_[c];
  const int d = body_.dim();
  Vec u(d);
  for (int s = 0; s < steps; ++s) {
    u = rng.sphere(d);
    double lo, hi;
    if (!body_.chord(x, u, lo, hi)) continue;  // stuck against a face; try another direction
    if (hi - lo <= 0.0) continue;
    const double a = -g_.dot(u);
    double t = truncated_exp_draw(a, lo, hi, rng.uniform());
    const double margin = 1e-9 * (hi - lo);
    t = std::min(std::max(t, lo + margin), hi - margin);
    x += t * u;
  }
}

void CloudSampler::advance_chains(int steps, bool parallel) {
  const int c = static_cast<int>(points_.size());
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < c; ++i) step_chain(i, steps);
  } else {
    for (int i = 0; i < c; ++i) step_chain(i, steps);
  }
}

void CloudSampler::refresh() { advance_chains(knobs_.thin_for(body_.dim()), parallel_enabled()); }

bool CloudSampler::add_cut(const HalfspaceCut& cut) {
  body_.add_cut(cut);
  std::vector<int> alive;
  for (size_t i = 0; i < points_.size(); ++i)
    if (cut.normal.dot(points_[i]) >= cut.offset) alive.push_back(static_cast<int>(i));
  if (alive.empty()) return false;
  for (size_t i = 0; i < points_.size(); ++i)
    if (cut.normal.dot(points_[i]) < cut.offset)
      points_[i] = points_[alive[i % alive.size()]];
  refresh();
  return true;
}

CentroidEstimate CloudSampler::mean() const {
  const int c = static_cast<int>(points_.size());
  const int d = body_.dim();
  CentroidEstimate est;
  est.mean = Vec::Zero(d);
  for (const Vec& p : points_) est.mean += p;
  est.mean /= c;
  est.std_error = Vec::Zero(d);
  for (const Vec& p : points_) est.std_error += (p - est.mean).cwiseAbs2();
  est.std_error = (est.std_error / (c * std::max(1, c - 1))).cwiseSqrt();
  est.samples = c;
  return est;
}

double CloudSampler::mass(const HalfspaceCut& h, double* std_error) const {
  const int c = static_cast<int>(points_.size());
  double inside = 0.0;
  for (const Vec& p : points_)
    if (h.normal.dot(p) >= h.offset) inside += 1.0;
  const double frac = inside / c;
  if (std_error) *std_error = std::sqrt(std::max(frac * (1.0 - frac), 1e-12) / c);
  return frac;
}

Vec CloudSampler::snap_inside(Vec x) const {
  if (body_.contains(x, 0.0)) return x;
  // Deepest cloud point as the anchor.
  const Vec* anchor = &points_[0];
  double best = -1e300;
  for (const Vec& p : points_) {
    double slack = body_.radius() - p.norm();
    for (const HalfspaceCut& c : body_.cuts()) slack = std::min(slack, c.normal.dot(p) - c.offset);
    if (slack > best) {
      best = slack;
      anchor = &p;
    }
  }
  for (int it = 0; it < 60 && !body_.contains(x, 0.0); ++it) x = 0.5 * (x + *anchor);
  return x;
}

// ---------------------------------------------------------------------------
// Membership-oracle hit-and-run (bisection chord finding)
// ---------------------------------------------------------------------------

namespace {

// Furthest in-body parameter along x + t u for t in [0, t_out]; x in body.
double bisect_boundary(const BodyOracle& body, const Vec& x, const Vec& u, double t_out) {
  double in = 0.0, out = t_out;
  if (body.contains(x + out * u)) return out;
  for (int it = 0; it < 60; ++it) {
    double mid = 0.5 * (in + out);
    if (body.contains(x + mid * u))
      in = mid;
    else
      out = mid;
  }
  return in;
}

struct OracleChains {
  const BodyOracle& body;
  Vec g;
  std::vector<Vec> points;
  std::vector<Rng> rngs;

  OracleChains(const BodyOracle& b, Vec direction, int chains, uint64_t seed)
      : body(b), g(std::move(direction)) {
    if (!body.contains(body.interior)) throw InvalidBodyError("interior point fails membership");
    points.assign(chains, body.interior);
    for (int i = 0; i < chains; ++i) rngs.emplace_back(derive_seed(seed, static_cast<uint64_t>(i)));
  }

  void step_chain(int c, int steps) {
    Rng& rng = rngs[c];
    Vec& x = points[c];
    const int d = static_cast<int>(x.size());
    for (int s = 0; s < steps; ++s) {
      Vec u = rng.sphere(d);
      const double xu = x.dot(u);
      const double disc = xu * xu + body.radius * body.radius - x.squaredNorm();
      if (disc <= 0.0) continue;
      const double root = std::sqrt(disc);
      double hi = bisect_boundary(body, x, u, -xu + root);
      double lo = -bisect_boundary(body, x, -u, xu + root);
      if (hi - lo <= 0.0) continue;
      const double a = -g.dot(u);
      double t = truncated_exp_draw(a, lo, hi, rng.uniform());
      const double margin = 1e-6 * (hi - lo);
      t = std::min(std::max(t, lo + margin), hi - margin);
      Vec cand = x + t * u;
      if (body.contains(cand)) x = cand;
    }
  }

  void advance(int steps) {
    const int c = static_cast<int>(points.size());
    if (parallel_enabled()) {
#pragma omp parallel for schedule(static)
      for (int i = 0; i < c; ++i) step_chain(i, steps);
    } else {
      for (int i = 0; i < c; ++i) step_chain(i, steps);
    }
  }
};

}  // namespace

std::vector<Vec> sample_body(const BodyOracle& body, int n, uint64_t seed,
                             const SamplerKnobs& knobs) {
  const int d = static_cast<int>(body.interior.size());
  const int chains = std::max(1, std::min(knobs.cloud, n));
  OracleChains oc(body, Vec::Zero(d), chains, seed);
  oc.advance(knobs.burn_for(d));
  std::vector<Vec> out;
  out.reserve(n);
  while (static_cast<int>(out.size()) < n) {
    oc.advance(knobs.thin_for(d));
    for (int c = 0; c < chains && static_cast<int>(out.size()) < n; ++c) out.push_back(oc.points[c]);
  }
  return out;
}

std::vector<Vec> sample_body(const CutBody& body, const Vec& interior, int n, uint64_t seed,
                             const SamplerKnobs& knobs) {
  SamplerKnobs k = knobs;
  k.cloud = std::max(1, std::min(knobs.cloud, n));
  CloudSampler cs(body, interior, seed, k);
  std::vector<Vec> out;
  out.reserve(n);
  while (static_cast<int>(out.size()) < n) {
    cs.refresh();
    for (const Vec& p : cs.cloud()) {
      if (static_cast<int>(out.size()) >= n) break;
      Vec q = p;
      if (!body.contains(q, 0.0)) q = cs.snap_inside(q);
      out.push_back(q);
    }
  }
  return out;
}

Vec section_interior_point(const ConeSection& s) {
  const CutBody body = CutBody::from_section(s);
  const int d = s.dim();
  std::vector<Vec> dirs;
  dirs.push_back(s.base().interior_direction());
  if (s.base().kind() != ConeKind::halfspace_generated)
    for (const Vec& g : s.base().generators()) dirs.push_back(g / g.norm());
  Vec best;
  double best_slack = -1e300;
  for (const Vec& dir : dirs) {
    for (double f = 0.05; f < 1.0; f += 0.05) {
      Vec x = dir * (f * s.radius());
      double slack = s.radius() - x.norm();
      for (const HalfspaceCut& c : body.cuts()) slack = std::min(slack, c.normal.dot(x) - c.offset);
      if (slack > best_slack) {
        best_slack = slack;
        best = x;
      }
    }
  }
  if (best_slack < 0.0) throw DegenerateSectionError("cone section has no evident interior point");
  return best;
}

CentroidEstimate estimate_centroid(const ConeSection& s, int n, uint64_t seed,
                                   const SamplerKnobs& knobs) {
  const Vec interior = section_interior_point(s);
  const CutBody body = CutBody::from_section(s);
  SamplerKnobs k = knobs;
  k.cloud = std::max(1, std::min(knobs.cloud, n));
  CloudSampler cs(body, interior, seed, k);

  const int chains = static_cast<int>(cs.cloud().size());
  const int sweeps = (n + chains - 1) / chains;
  Mat chain_sums = Mat::Zero(s.dim(), chains);
  for (int sw = 0; sw < sweeps; ++sw) {
    cs.refresh();
    for (int c = 0; c < chains; ++c) chain_sums.col(c) += cs.cloud()[c];
  }
  CentroidEstimate est;
  est.samples = sweeps * chains;
  est.mean = chain_sums.rowwise().sum() / est.samples;
  Vec var = Vec::Zero(s.dim());
  for (int c = 0; c < chains; ++c) {
    Vec cm = chain_sums.col(c) / sweeps;
    var += (cm - est.mean).cwiseAbs2();
  }
  est.std_error = (var / (chains * std::max(1, chains - 1))).cwiseSqrt();
  if (!s.contains(est.mean, 0.0)) est.mean = cs.snap_inside(est.mean);
  return est;
}

Vec loglinear_mean(const LogLinearDensity& density, int n, uint64_t seed,
                   const SamplerKnobs& knobs) {
  const int d = static_cast<int>(density.body.interior.size());
  const int chains = std::max(2, std::min(knobs.cloud, n));
  OracleChains oc(density.body, density.direction, chains, seed);
  oc.advance(knobs.burn_for(d));

  Mat chain_sums = Mat::Zero(d, chains);
  int sweeps_done = 0;
  const int sweeps_needed = (n + chains - 1) / chains;
  auto run_sweep = [&]() {
    oc.advance(knobs.thin_for(d));
    for (int c = 0; c < chains; ++c) chain_sums.col(c) += oc.points[c];
    ++sweeps_done;
  };
  for (int sw = 0; sw < sweeps_needed; ++sw) run_sweep();

  auto half_drift = [&]() {
    Vec a = Vec::Zero(d), b = Vec::Zero(d);
    for (int c = 0; c < chains; ++c) (c % 2 == 0 ? a : b) += chain_sums.col(c);
    a /= (chains / 2 + chains % 2) * sweeps_done;
    b /= (chains / 2) * sweeps_done;
    return (a - b).norm();
  };
  while (half_drift() > knobs.drift_tol * density.body.radius) {
    if (sweeps_done >= std::max(sweeps_needed, knobs.max_refresh))
      throw SamplerDiagnosticError("loglinear_mean: chain halves disagree; sampler not mixing");
    run_sweep();
  }
  return chain_sums.rowwise().sum() / (sweeps_done * chains);
}

double halfspace_mass(const LogLinearDensity& density, const HalfspaceCut& h, int n,
                      uint64_t seed, const SamplerKnobs& knobs, double* std_error) {
  const int d = static_cast<int>(density.body.interior.size());
  const int chains = std::max(2, std::min(knobs.cloud, n));
  OracleChains oc(density.body, density.direction, chains, seed);
  oc.advance(knobs.burn_for(d));

  const int sweeps = (n + chains - 1) / chains;
  Vec chain_hits = Vec::Zero(chains);
  for (int sw = 0; sw < sweeps; ++sw) {
    oc.advance(knobs.thin_for(d));
    for (int c = 0; c < chains; ++c)
      if (h.normal.dot(oc.points[c]) >= h.offset) chain_hits[c] += 1.0;
  }
  const double frac = chain_hits.sum() / (sweeps * chains);
  if (std_error) {
    double var = 0.0;
    for (int c = 0; c < chains; ++c) {
      double cm = chain_hits[c] / sweeps;
      var += (cm - frac) * (cm - frac);
    }
    *std_error = std::sqrt(var / (chains * std::max(1, chains - 1)));
  }
  return frac;
}

}  // namespace oilo
