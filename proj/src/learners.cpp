// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

#include "oilo/learners.hpp"

#include <algorithm>
#include <cmath>

namespace oilo {

namespace bounds {

void resolve_omd(LearnerConfig& cfg, const Regularizer& phi) {
  const double rs = cfg.r_star();
  if (cfg.eps < 0) cfg.eps = rs / static_cast<double>(cfg.T);
  const double mu = cfg.mu_override > 0 ? cfg.mu_override : phi.mu();
  const double A = cfg.A_override > 0
                       ? cfg.A_override
                       : phi_diameter_bound(phi.kind(), rs, cfg.d, cfg.alpha, cfg.beta_target);
  if (cfg.eta < 0) cfg.eta = (1.0 / cfg.L) * std::sqrt(2.0 * mu * A / static_cast<double>(cfg.T));
  cfg.mu_override = mu;
  cfg.A_override = A;
}

void resolve_cmwu(LearnerConfig& cfg) {
  const double rs = cfg.r_star();
  const double T = static_cast<double>(cfg.T);
  if (cfg.gamma < 0) cfg.gamma = 1.0 / T;
  if (cfg.eta < 0)
    cfg.eta = (1.0 / (cfg.L * rs)) * std::min(1.0, std::sqrt(cfg.d * std::log(T) / T));
  if (cfg.eps < 0) cfg.eps = 2.0 * cfg.gamma * rs;
}

void resolve_bandit(LearnerConfig& cfg, double beta) {
  const double T = static_cast<double>(cfg.T);
  if (T <= beta * beta * std::pow(static_cast<double>(cfg.d), 3))
    throw ConfigError("bandit: requires T > beta^2 d^3");
  if (cfg.eta < 0) cfg.eta = cfg.alpha * std::pow(beta, 4.0 / 3.0) / (cfg.L * cfg.R * std::pow(T, 2.0 / 3.0));
  if (cfg.eps < 0) cfg.eps = cfg.alpha * cfg.R / T;
  if (cfg.gamma < 0) cfg.gamma = std::pow(beta, 2.0 / 3.0) * cfg.d / std::cbrt(T);
  if (cfg.gamma >= 1.0) throw ConfigError("bandit: gamma >= 1; increase T");
}

double corollary_regret(double alpha, double L, double R, double T) {
  return alpha * L * R * (std::sqrt(T) + 1.0);
}

long omd_call_ceiling(int d, double T, double r_star, double A, double mu) {
  const double arg = (6.0 * std::sqrt(T) + (4.0 / r_star) * std::sqrt(A / mu) + 4.0) * T;
  return static_cast<long>(std::ceil(5.0 * d * std::log(arg)));
}

double cmwu_refining_regret(double L, double r_star, int d, double T) {
  return L * r_star * (1.0 + 2.0 * std::max(std::sqrt(d * T * std::log(T)), d * std::log(T)));
}

double cmwu_regret(double L, double r_star, int d, double T) {
  return L * r_star * (7.0 + 2.0 * std::max(std::sqrt(d * T * std::log(T)), d * std::log(T)));
}

double cmwu_tradeoff(double gamma, double eta, double L, double r_star, int d, double T,
                     double s) {
  return d * std::log(1.0 / gamma) / eta + eta * L * L * r_star * r_star * T +
         7.0 * gamma * L * r_star * T - s / (5.0 * eta);
}

double bandit_regret(double alpha, double L, double R, int d, double beta, double T) {
  return alpha * L * R * (3.0 * d * std::pow(beta * T, 2.0 / 3.0) + 1.0);
}

double bandit_call_budget(const LearnerConfig& cfg, double beta) {
  const double T = static_cast<double>(cfg.T);
  const double a = cfg.alpha, L = cfg.L, R = cfg.R, d = cfg.d;
  const double inside = a * a * beta * beta * d * d +
                        cfg.eta * cfg.eta * L * L * R * R * d * d * d * T / cfg.gamma +
                        6.0 * cfg.eta * a * L * R * d * T;
  const double per = 1.0 + 5.0 * d * std::log((4.0 * a * R + 2.0 * R * std::sqrt(inside)) / cfg.eps);
  return (1.0 + cfg.gamma * T) * per;
}

}  // namespace bounds

// -----------------------------------------------------------------------------
// Barycentric spanner
// -----------------------------------------------------------------------------

BarycentricSpanner build_barycentric_spanner(const std::vector<Vec>& vertices,
                                             double beta_target) {
  if (vertices.empty()) throw RankError("spanner: empty vertex set");
  const int d = static_cast<int>(vertices[0].size());
  if (beta_target < 1.0) throw ConfigError("spanner: beta_target must be >= 1");

  Mat X = Mat::Identity(d, d);
  std::vector<int> chosen(d, -1);

  auto det_with = [&](int col, const Vec& v) {
    Mat Y = X;
    Y.col(col) = v;
    return std::abs(Y.determinant());
  };

  // Greedy basis: fill each column with the volume-maximizing vertex.
  for (int i = 0; i < d; ++i) {
    int best = -1;
    double bestdet = 1e-12;
    for (size_t j = 0; j < vertices.size(); ++j) {
      double dj = det_with(i, vertices[j]);
      if (dj > bestdet) {
        bestdet = dj;
        best = static_cast<int>(j);
      }
    }
    if (best < 0) throw RankError("spanner: vertices do not span R^d");
    X.col(i) = vertices[best];
    chosen[i] = best;
  }

  // Swap phase: exchange while some vertex beats the current volume by more
  // than the beta_target factor.
  double cur = std::abs(X.determinant());
  if (cur <= 1e-12) throw RankError("spanner: degenerate basis");
  bool improved = true;
  int guard = 0;
  while (improved && guard++ < 1000) {
    improved = false;
    for (int i = 0; i < d && !improved; ++i) {
      for (size_t j = 0; j < vertices.size() && !improved; ++j) {
        double dj = det_with(i, vertices[j]);
        if (dj > beta_target * cur * (1.0 + 1e-12)) {
          X.col(i) = vertices[j];
          chosen[i] = static_cast<int>(j);
          cur = dj;
          improved = true;
        }
      }
    }
  }

  BarycentricSpanner s;
  s.M = X;
  s.M_inv = X.inverse();
  s.Q = X * X.transpose();
  for (int i = 0; i < d; ++i) s.q.push_back(X.col(i));
  double beta = 1.0;
  for (const Vec& v : vertices) beta = std::max(beta, (s.M_inv * v).cwiseAbs().maxCoeff());
  s.beta = beta;
  return s;
}

// -----------------------------------------------------------------------------
// OMD (Alg. 1)
// -----------------------------------------------------------------------------

OmdLearner::OmdLearner(LearnerConfig cfg, Oracle oracle, ConeSpec W, Regularizer phi)
    : cfg_(cfg),
      oracle_(std::move(oracle)),
      w_(std::move(W)),
      phi_(std::move(phi)),
      play_rng_(derive_seed(cfg.seed, 0x91a1)) {
  bounds::resolve_omd(cfg_, phi_);
  y_ = phi_.argmin();
}

Vec OmdLearner::round_play() {
  ++round_;
  oracle_.counter().begin_round();
  if (!(replay_ && have_pad_)) {
    ReductionOptions opt;
    opt.radius = std::max(cfg_.r_star(), oracle_.radius());
    pad_ = pad(y_, cfg_.eps, w_, phi_, oracle_, derive_seed(cfg_.seed, 0x9ad0 + round_),
               cfg_.reduction_knobs, opt);
    have_pad_ = true;
  }
  const int idx = play_rng_.categorical(pad_.decomp.weights);
  return pad_.decomp.points[idx];
}

void OmdLearner::observe(const Vec& f) {
  if (!have_pad_) throw LearnerError("omd: observe before round_play", round_);
  if (f.lpNorm<Eigen::Infinity>() == 0.0) {
    // gradient step is a no-op; keep the decomposition for a free replay
    y_ = pad_.y_prime;
    replay_ = true;
    return;
  }
  y_ = phi_.mirror_step(pad_.y_prime, f, cfg_.eta);
  replay_ = false;
}

Vec OmdLearner::expected_play() const {
  if (!have_pad_) return phi_.argmin();
  return pad_.decomp.combination();
}

// -----------------------------------------------------------------------------
// CMWU (Alg. 5)
// -----------------------------------------------------------------------------

CmwuLearner::CmwuLearner(LearnerConfig cfg, Oracle oracle, ConeSpec W)
    : cfg_(cfg),
      oracle_(std::move(oracle)),
      w_(std::move(W)),
      play_rng_(derive_seed(cfg.seed, 0xc3a7)) {
  bounds::resolve_cmwu(cfg_);
  if (oracle_.radius() > cfg_.r_star() * (1.0 + 1e-9))
    throw ConfigError("cmwu: K* is not contained in the initial ball B(0, alpha R)");
  sod_eps_ = cfg_.eps;  // 2 gamma R*
  g_ = Vec::Zero(cfg_.d);
  // K_1 = K_0 = B(0, R*)
  SamplerKnobs k = cfg_.mean_knobs;
  const long n = cfg_.resolved_mean_samples();
  k.cloud = static_cast<int>(std::min<long>(std::max(64, k.cloud), n));
  CutBody ball(cfg_.d, cfg_.r_star());
  cloud_ = std::make_unique<CloudSampler>(ball, Vec::Zero(cfg_.d), derive_seed(cfg_.seed, 0xb0d9), k);
}

Vec CmwuLearner::domain_mean() {
  cloud_->set_direction(g_);
  const int chains = static_cast<int>(cloud_->cloud().size());
  const long n = cfg_.resolved_mean_samples();
  const int sweeps = static_cast<int>((n + chains - 1) / chains);
  Vec acc = Vec::Zero(cfg_.d);
  for (int sw = 0; sw < sweeps; ++sw) {
    cloud_->refresh();
    for (const Vec& p : cloud_->cloud()) acc += p;
  }
  return acc / (static_cast<double>(sweeps) * chains);
}

Vec CmwuLearner::round_play() {
  ++round_;
  oracle_.counter().begin_round();
  s_t_ = 0;
  delta_t_ = 0.0;

  Vec mean = domain_mean();
  while (true) {
    ReductionOptions opt;
    opt.radius = cfg_.r_star();
    SodResult r = sod(mean, sod_eps_, w_, oracle_, derive_seed(cfg_.seed, 0x50d0 + (round_ << 10) + s_t_),
                      cfg_.reduction_knobs, opt);
    if (!r.is_separation) {
      decomp_ = r.decomp;
      break;
    }
    ++s_t_;
    ++s_total_;
    if (s_t_ > cfg_.max_cuts_per_round)
      throw LearnerError("cmwu: separation cut budget exhausted", round_);
    // Keep the K*-side half-space {x : w.x >= b - 2 gamma R}.
    HalfspaceCut cut{r.w, r.b - sod_eps_};
    double se = 0.0;
    double kept = cloud_->mass(cut, &se);
    delta_t_ += -std::log(std::max(kept, 1e-6));
    if (!cloud_->add_cut(cut)) throw LearnerError("cmwu: domain collapsed to zero volume", round_);
    mean = domain_mean();
  }

  const int idx = play_rng_.categorical(decomp_.weights);
  return decomp_.points[idx];
}

void CmwuLearner::observe(const Vec& f) { g_ += cfg_.eta * f; }

Vec CmwuLearner::expected_play() const {
  if (decomp_.points.empty()) return Vec::Zero(cfg_.d);
  return decomp_.combination();
}

// -----------------------------------------------------------------------------
// CMWU with refining domains (Alg. 4)
// -----------------------------------------------------------------------------

CmwuReferenceLearner::CmwuReferenceLearner(LearnerConfig cfg, Oracle oracle, ConeSpec W,
                                           std::vector<std::vector<HalfspaceCut>> round_cuts)
    : cfg_(cfg), oracle_(std::move(oracle)), w_(std::move(W)), round_cuts_(std::move(round_cuts)) {
  bounds::resolve_cmwu(cfg_);
  g_ = Vec::Zero(cfg_.d);
  SamplerKnobs k = cfg_.mean_knobs;
  const long n = cfg_.resolved_mean_samples();
  k.cloud = static_cast<int>(std::min<long>(std::max(64, k.cloud), n));
  CutBody ball(cfg_.d, cfg_.r_star());
  cloud_ = std::make_unique<CloudSampler>(ball, Vec::Zero(cfg_.d), derive_seed(cfg_.seed, 0xb0d9), k);
}

std::vector<std::vector<HalfspaceCut>> CmwuReferenceLearner::cuts_from_bodies(
    const std::vector<CutBody>& bodies) {
  std::vector<std::vector<HalfspaceCut>> out;
  size_t have = 0;
  for (size_t t = 0; t < bodies.size(); ++t) {
    if (t > 0 && bodies[t].radius() != bodies[t - 1].radius())
      throw ConfigError("refining domains: radius changed, chain is not nested");
    const auto& cuts = bodies[t].cuts();
    if (cuts.size() < have) throw ConfigError("refining domains: cut list shrank, chain is not nested");
    for (size_t j = 0; j + 1 <= have && j < cuts.size(); ++j) {
      if ((cuts[j].normal - bodies[t - 1].cuts()[j].normal).norm() > 1e-12 ||
          std::abs(cuts[j].offset - bodies[t - 1].cuts()[j].offset) > 1e-12)
        throw ConfigError("refining domains: earlier cut modified, chain is not nested");
    }
    std::vector<HalfspaceCut> fresh(cuts.begin() + static_cast<long>(have), cuts.end());
    out.push_back(std::move(fresh));
    have = cuts.size();
  }
  return out;
}

Vec CmwuReferenceLearner::round_play() {
  ++round_;
  oracle_.counter().begin_round();
  delta_t_ = 0.0;
  if (static_cast<size_t>(round_ - 1) < round_cuts_.size()) {
    cloud_->set_direction(g_);
    for (const HalfspaceCut& cut : round_cuts_[round_ - 1]) {
      double kept = cloud_->mass(cut);
      delta_t_ += -std::log(std::max(kept, 1e-6));
      if (!cloud_->add_cut(cut))
        throw LearnerError("cmwu_reference: domain collapsed", round_);
    }
  }

  cloud_->set_direction(g_);
  const int chains = static_cast<int>(cloud_->cloud().size());
  const long n = cfg_.resolved_mean_samples();
  const int sweeps = static_cast<int>((n + chains - 1) / chains);
  Vec acc = Vec::Zero(cfg_.d);
  for (int sw = 0; sw < sweeps; ++sw) {
    cloud_->refresh();
    for (const Vec& p : cloud_->cloud()) acc += p;
  }
  last_mean_ = acc / (static_cast<double>(sweeps) * chains);
  return last_mean_;
}

void CmwuReferenceLearner::observe(const Vec& f) { g_ += cfg_.eta * f; }

// -----------------------------------------------------------------------------
// Bandit OSMD with barycentric regularization (Alg. 6)
// -----------------------------------------------------------------------------

BanditLearner::BanditLearner(LearnerConfig cfg, Oracle oracle, BarycentricSpanner spanner)
    : cfg_(cfg), spanner_(std::move(spanner)), rng_(derive_seed(cfg.seed, 0xba4d17)) {
  bounds::resolve_bandit(cfg_, spanner_.beta);
  // Inner OMD: barycentric regularizer, W' = (M^T)^{-1} R^d_+.
  LearnerConfig inner_cfg = cfg_;
  inner_cfg.seed = derive_seed(cfg_.seed, 0x1aa8);
  if (inner_cfg.A_override <= 0)
    inner_cfg.A_override = 0.5 * cfg_.alpha * cfg_.alpha * spanner_.beta * spanner_.beta * cfg_.d;
  Regularizer phi = Regularizer::barycentric(spanner_.Q);
  ConeSpec wp = ConeSpec::linear_image(spanner_.M);
  inner_ = std::make_unique<OmdLearner>(inner_cfg, std::move(oracle), std::move(wp), std::move(phi));
}

Vec BanditLearner::loss_estimate(int index, double loss_value) const {
  // Q^{-1} q_i = M^{-T} M^{-1} q_i = M^{-T} e_i
  return (cfg_.d / cfg_.gamma) * loss_value * spanner_.M_inv.transpose().col(index);
}

Vec BanditLearner::round_play() {
  inner_play_ = inner_->round_play();
  explored_ = rng_.uniform() < cfg_.gamma;
  if (explored_) {
    explore_index_ = rng_.uniform_int(cfg_.d);
    played_ = spanner_.q[explore_index_];
  } else {
    played_ = inner_play_;
  }
  return played_;
}

void BanditLearner::observe(const Vec& f) {
  // Bandit feedback: only the realized value is consumed.
  const double l = f.dot(played_);
  if (explored_) {
    inner_->observe(loss_estimate(explore_index_, l));
  } else {
    inner_->observe(Vec::Zero(cfg_.d));
  }
}

Vec BanditLearner::expected_play() const {
  Vec qbar = Vec::Zero(cfg_.d);
  for (const Vec& q : spanner_.q) qbar += q / cfg_.d;
  return (1.0 - cfg_.gamma) * inner_->expected_play() + cfg_.gamma * qbar;
}

long BanditLearner::round_oracle_calls() const { return inner_->round_oracle_calls(); }

}  // namespace oilo
