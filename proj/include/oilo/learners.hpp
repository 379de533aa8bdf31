// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

#pragma once

#include <memory>
#include <optional>

#include "oilo/reduction.hpp"

namespace oilo {

struct LearnerConfig {
  int d = 2;
  long T = 100;
  double L = 1.0;
  double R = 1.0;      // K subseteq B(0, R)
  double alpha = 1.0;  // K* = alpha K
  // Negative values resolve to the paper defaults for the chosen algorithm.
  double eta = -1.0;
  double eps = -1.0;
  double gamma = -1.0;
  RegKind reg = RegKind::euclidean;
  double mu_override = -1.0;
  double A_override = -1.0;
  uint64_t seed = 1;
  SamplerKnobs reduction_knobs;  // direction-cone centroids inside PAD/SOD
  SamplerKnobs mean_knobs;       // CMWU log-linear means
  long mean_samples = -1;        // -1 resolves to max(4096, d*T)
  int max_cuts_per_round = 200;
  double beta_target = 2.0;  // bandit spanner construction

  double r_star() const { return alpha * R; }
  long resolved_mean_samples() const {
    return mean_samples > 0 ? mean_samples : std::max<long>(4096, d * T);
  }
};

// Paper parameter defaults and bound envelopes, pinned in one place so runs
// and their acceptance checks use the same constants.
namespace bounds {

// eps = R*/T, eta = (1/L) sqrt(2 mu A / T); A conservative per regularizer.
void resolve_omd(LearnerConfig& cfg, const Regularizer& phi);
// gamma = 1/T, eta = (1/(L R*)) min{1, sqrt(d log T / T)}.
void resolve_cmwu(LearnerConfig& cfg);
// eta = alpha beta^{4/3}/(L R T^{2/3}), eps = alpha R / T,
// gamma = beta^{2/3} d / T^{1/3}; requires T > beta^2 d^3.
void resolve_bandit(LearnerConfig& cfg, double beta);

double corollary_regret(double alpha, double L, double R, double T);
long omd_call_ceiling(int d, double T, double r_star, double A, double mu);
double cmwu_refining_regret(double L, double r_star, int d, double T);     // Thm 5 tuning
double cmwu_regret(double L, double r_star, int d, double T);              // Thm 6 tuning
double cmwu_tradeoff(double gamma, double eta, double L, double r_star, int d, double T,
                     double s);
double bandit_regret(double alpha, double L, double R, int d, double beta, double T);
double bandit_call_budget(const LearnerConfig& cfg, double beta);

}  // namespace bounds

// -----------------------------------------------------------------------------
// Barycentric spanner
// -----------------------------------------------------------------------------

struct BarycentricSpanner {
  std::vector<Vec> q;  // d linearly independent members of K
  Mat M;               // columns q_1..q_d
  Mat M_inv;
  Mat Q;  // M M^T
  double beta = 1.0;  // max_i |(M^{-1} x)_i| over the vertex set
};

// Greedy determinant maximization with swap improvements: swap while some
// vertex raises |det M| by more than a beta_target factor. Throws RankError
// when the vertices do not span R^d.
BarycentricSpanner build_barycentric_spanner(const std::vector<Vec>& vertices,
                                             double beta_target);

// -----------------------------------------------------------------------------
// Learners
// -----------------------------------------------------------------------------

class Learner {
 public:
  virtual ~Learner() = default;
  virtual Vec round_play() = 0;           // starts the round, returns the point played
  virtual void observe(const Vec& f) = 0;  // full loss vector (bandit extracts f.x itself)
  virtual Vec expected_play() const = 0;
  virtual long round_oracle_calls() const = 0;
  virtual long round_separations() const { return 0; }
  virtual int explore_flag() const { return 0; }
  virtual double last_round_delta() const { return 0.0; }
  virtual Oracle& oracle() = 0;
};

// Online mirror descent through the PAD oracle (Alg. 1). A zero observed
// loss leaves the mirror point at x_t, so the next round replays the cached
// decomposition with no oracle calls.
class OmdLearner : public Learner {
 public:
  OmdLearner(LearnerConfig cfg, Oracle oracle, ConeSpec W, Regularizer phi);

  Vec round_play() override;
  void observe(const Vec& f) override;
  Vec expected_play() const override;
  long round_oracle_calls() const override { return oracle_.counter().round_calls(); }
  Oracle& oracle() override { return oracle_; }

  const PadResult& last_pad() const { return pad_; }
  const Vec& mirror_point() const { return y_; }
  const LearnerConfig& config() const { return cfg_; }

 private:
  LearnerConfig cfg_;
  Oracle oracle_;
  ConeSpec w_;
  Regularizer phi_;
  Vec y_;
  PadResult pad_;
  bool replay_ = false;  // previous loss was exactly zero
  bool have_pad_ = false;
  long round_ = 0;
  Rng play_rng_;
};

// CMWU over a shrinking superset of K* (Alg. 5): play the mean of the
// log-linear density, cut the domain whenever the SOD oracle separates.
class CmwuLearner : public Learner {
 public:
  CmwuLearner(LearnerConfig cfg, Oracle oracle, ConeSpec W);

  Vec round_play() override;
  void observe(const Vec& f) override;
  Vec expected_play() const override;
  long round_oracle_calls() const override { return oracle_.counter().round_calls(); }
  long round_separations() const override { return s_t_; }
  double last_round_delta() const override { return delta_t_; }
  Oracle& oracle() override { return oracle_; }

  long total_separations() const { return s_total_; }
  const CutBody& domain() const { return cloud_->body(); }
  const Decomposition& last_decomposition() const { return decomp_; }

 private:
  Vec domain_mean();

  LearnerConfig cfg_;
  Oracle oracle_;
  ConeSpec w_;
  double sod_eps_;
  Vec g_;  // eta * sum of observed losses
  std::unique_ptr<CloudSampler> cloud_;
  Decomposition decomp_;
  long s_t_ = 0, s_total_ = 0;
  double delta_t_ = 0.0;
  long round_ = 0;
  Rng play_rng_;
};

// CMWU with an externally supplied refining domain chain (Alg. 4); plays the
// log-linear mean itself and reports the per-round removed log-mass delta_t.
// The chain is given as cuts added per round; a prebuilt body list is
// validated structurally (same radius, cut-list extension) and rejected with
// ConfigError when non-nested.
class CmwuReferenceLearner : public Learner {
 public:
  CmwuReferenceLearner(LearnerConfig cfg, Oracle oracle, ConeSpec W,
                       std::vector<std::vector<HalfspaceCut>> round_cuts = {});

  static std::vector<std::vector<HalfspaceCut>> cuts_from_bodies(const std::vector<CutBody>& bodies);

  Vec round_play() override;
  void observe(const Vec& f) override;
  Vec expected_play() const override { return last_mean_; }
  long round_oracle_calls() const override { return 0; }
  double last_round_delta() const override { return delta_t_; }
  Oracle& oracle() override { return oracle_; }

 private:
  LearnerConfig cfg_;
  Oracle oracle_;
  ConeSpec w_;
  std::vector<std::vector<HalfspaceCut>> round_cuts_;
  Vec g_;
  std::unique_ptr<CloudSampler> cloud_;
  Vec last_mean_;
  double delta_t_ = 0.0;
  long round_ = 0;
};

// Online stochastic mirror descent with barycentric regularization (Alg. 6).
// Explore rounds play a spanner member and feed the importance-weighted
// estimate (d/gamma) l_t Q^{-1} q_{i_t}; exploit rounds play the inner OMD
// point and feed zero, which the inner learner turns into a free replay.
class BanditLearner : public Learner {
 public:
  BanditLearner(LearnerConfig cfg, Oracle oracle, BarycentricSpanner spanner);

  Vec round_play() override;
  void observe(const Vec& f) override;
  Vec expected_play() const override;
  long round_oracle_calls() const override;
  int explore_flag() const override { return explored_ ? 1 : 0; }
  Oracle& oracle() override { return inner_->oracle(); }

  const BarycentricSpanner& spanner() const { return spanner_; }
  Vec loss_estimate(int index, double loss_value) const;  // (d/gamma) l Q^{-1} q_i

 private:
  LearnerConfig cfg_;
  BarycentricSpanner spanner_;
  std::unique_ptr<OmdLearner> inner_;
  Rng rng_;
  bool explored_ = false;
  int explore_index_ = 0;
  Vec played_;
  Vec inner_play_;
};

}  // namespace oilo
