// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

#include "oilo/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <sstream>

namespace oilo {

namespace {

class IidUniformAdversary : public Adversary {
 public:
  IidUniformAdversary(const ConeSpec& W, double L, uint64_t seed)
      : L_(L), rng_(derive_seed(seed, 0xadf0)) {
    for (const Vec& g : W.generators()) gens_.push_back(g / g.norm());
  }
  Vec loss(long) override {
    const int d = static_cast<int>(gens_[0].size());
    Vec raw = Vec::Zero(d);
    for (const Vec& g : gens_) raw += rng_.uniform() * g;
    const double sd = std::sqrt(static_cast<double>(gens_.size()));
    if (raw.norm() > sd) raw *= sd / raw.norm();
    return (L_ / sd) * raw;
  }

 private:
  double L_;
  Rng rng_;
  std::vector<Vec> gens_;
};

class FixedVectorAdversary : public Adversary {
 public:
  FixedVectorAdversary(Vec f) : f_(std::move(f)) {}
  Vec loss(long) override { return f_; }

 private:
  Vec f_;
};

class AlternatingAdversary : public Adversary {
 public:
  AlternatingAdversary(const ConeSpec& W, double L) : L_(L) {
    for (const Vec& g : W.generators()) gens_.push_back(g / g.norm());
  }
  Vec loss(long t) override { return L_ * gens_[static_cast<size_t>(t - 1) % gens_.size()]; }

 private:
  double L_;
  std::vector<Vec> gens_;
};

class AdaptiveWorstcaseAdversary : public Adversary {
 public:
  AdaptiveWorstcaseAdversary(const ConeSpec& W, double L) {
    const auto gens = W.generators();
    const int d = static_cast<int>(gens[0].size());
    for (const Vec& g : gens) menu_.push_back(L * g / g.norm());
    Vec mix = Vec::Zero(d);
    for (const Vec& g : gens) mix += g / g.norm();
    menu_.push_back(L * mix / mix.norm());
    published_ = Vec::Zero(d);
  }
  Vec loss(long) override {
    size_t best = 0;
    double bestval = -1e300;
    for (size_t i = 0; i < menu_.size(); ++i) {
      double v = menu_[i].dot(published_);
      if (v > bestval + 1e-15) {
        bestval = v;
        best = i;
      }
    }
    return menu_[best];
  }
  void publish(const Vec& expected_play) override { published_ = expected_play; }

 private:
  std::vector<Vec> menu_;
  Vec published_;
};

}  // namespace

std::unique_ptr<Adversary> make_adversary(const ExperimentConfig& cfg, const ConeSpec& W,
                                          uint64_t seed) {
  switch (cfg.adversary) {
    case AdversaryKind::iid_uniform:
      return std::make_unique<IidUniformAdversary>(W, cfg.L, seed);
    case AdversaryKind::fixed_vector: {
      if (cfg.adversary_vector.empty()) throw ConfigError("fixed_vector adversary needs adversary.vector");
      auto rows = parse_vertices_inline(cfg.adversary_vector);
      Vec f = rows[0];
      if (f.size() != cfg.d) throw ConfigError("adversary vector dimension mismatch");
      if (f.norm() > cfg.L + 1e-12) throw ConfigError("adversary vector exceeds the loss bound L");
      if (!W.contains(f, 1e-12)) throw ConfigError("adversary vector lies outside W");
      return std::make_unique<FixedVectorAdversary>(f);
    }
    case AdversaryKind::alternating:
      return std::make_unique<AlternatingAdversary>(W, cfg.L);
    case AdversaryKind::adaptive_worstcase_vertex:
      return std::make_unique<AdaptiveWorstcaseAdversary>(W, cfg.L);
  }
  throw ConfigError("unknown adversary kind");
}

ConeSpec build_cone(const ExperimentConfig& cfg) {
  if (cfg.cone == "nonneg_orthant") return ConeSpec::orthant(cfg.d);
  if (cfg.cone == "linear_image") {
    if (cfg.cone_matrix.empty()) throw ConfigError("linear_image cone needs cone.matrix");
    auto rows = parse_vertices_inline(cfg.cone_matrix);
    if (static_cast<int>(rows.size()) != cfg.d) throw ConfigError("cone.matrix must have d rows");
    Mat M(cfg.d, cfg.d);
    for (int i = 0; i < cfg.d; ++i) {
      if (rows[i].size() != cfg.d) throw ConfigError("cone.matrix rows must have d entries");
      M.row(i) = rows[i].transpose();
    }
    return ConeSpec::linear_image(M);
  }
  throw ConfigError("unknown cone kind: " + cfg.cone);
}

std::vector<Vec> load_oracle_vertices(const ExperimentConfig& cfg) {
  std::vector<Vec> vertices;
  if (!cfg.vertices_file.empty())
    vertices = load_vertices_file(cfg.vertices_file);
  else if (!cfg.vertices_inline.empty())
    vertices = parse_vertices_inline(cfg.vertices_inline);
  else
    throw ConfigError("oracle needs vertices_file or vertices");
  for (const Vec& v : vertices) {
    if (v.size() != cfg.d) throw ConfigError("oracle vertex dimension mismatch");
    if (v.norm() > cfg.R + 1e-9) throw ConfigError("oracle vertex outside B(0, R)");
  }
  return vertices;
}

Regularizer build_regularizer(const ExperimentConfig& cfg, const std::vector<Vec>& vertices) {
  if (cfg.regularizer == "euclidean") return Regularizer::euclidean(cfg.d);
  if (cfg.regularizer == "neg_entropy") {
    const double mu = cfg.mu > 0 ? cfg.mu : 1.0 / (2.0 * cfg.alpha * cfg.R + 2.0);
    return Regularizer::neg_entropy(cfg.d, mu);
  }
  if (cfg.regularizer == "barycentric") {
    BarycentricSpanner s = build_barycentric_spanner(vertices, cfg.beta_target);
    return Regularizer::barycentric(s.Q);
  }
  throw ConfigError("unknown regularizer kind: " + cfg.regularizer);
}

Oracle build_oracle(const ExperimentConfig& cfg, const std::vector<Vec>& vertices,
                    const ConeSpec& W) {
  if (cfg.oracle_kind == "vertex_exact") return Oracle::vertex_exact(vertices, cfg.alpha, W);
  if (cfg.oracle_kind == "alpha_loose") return Oracle::alpha_loose(vertices, cfg.alpha, W);
  throw ConfigError("unknown oracle kind: " + cfg.oracle_kind);
}

LearnerConfig learner_config(const ExperimentConfig& cfg, uint64_t seed) {
  LearnerConfig lc;
  lc.d = cfg.d;
  lc.T = cfg.T;
  lc.L = cfg.L;
  lc.R = cfg.R;
  lc.alpha = cfg.alpha;
  lc.eta = cfg.eta;
  lc.eps = cfg.eps;
  lc.gamma = cfg.gamma;
  lc.mu_override = cfg.mu;
  lc.A_override = cfg.A;
  lc.seed = seed;
  lc.beta_target = cfg.beta_target;
  lc.reduction_knobs.cloud = cfg.reduction_cloud;
  lc.reduction_knobs.burn = cfg.reduction_burn >= 0 ? cfg.reduction_burn : 40 * cfg.d;
  lc.reduction_knobs.thin = cfg.reduction_thin >= 0 ? cfg.reduction_thin : 3 * cfg.d * cfg.d;
  lc.mean_knobs.cloud = cfg.mean_cloud;
  lc.mean_knobs.burn = cfg.mean_burn >= 0 ? cfg.mean_burn : 60 * cfg.d;
  lc.mean_knobs.thin = cfg.mean_thin >= 0 ? cfg.mean_thin : 2 * cfg.d * cfg.d;
  lc.mean_samples = cfg.mean_samples;
  lc.max_cuts_per_round = cfg.max_cuts_per_round;
  if (cfg.regularizer == "euclidean")
    lc.reg = RegKind::euclidean;
  else if (cfg.regularizer == "neg_entropy")
    lc.reg = RegKind::neg_entropy;
  else if (cfg.regularizer == "barycentric")
    lc.reg = RegKind::barycentric;
  return lc;
}

namespace {

std::unique_ptr<Learner> build_learner(const ExperimentConfig& cfg, uint64_t seed,
                                       const std::vector<Vec>& vertices, const ConeSpec& W) {
  LearnerConfig lc = learner_config(cfg, seed);
  Oracle oracle = build_oracle(cfg, vertices, W);
  switch (cfg.algorithm) {
    case AlgorithmKind::omd: {
      Regularizer phi = build_regularizer(cfg, vertices);
      return std::make_unique<OmdLearner>(lc, std::move(oracle), W, std::move(phi));
    }
    case AlgorithmKind::cmwu:
      return std::make_unique<CmwuLearner>(lc, std::move(oracle), W);
    case AlgorithmKind::cmwu_reference:
      return std::make_unique<CmwuReferenceLearner>(lc, std::move(oracle), W);
    case AlgorithmKind::bandit: {
      if (cfg.cone != "nonneg_orthant") throw ConfigError("bandit requires the nonneg orthant");
      BarycentricSpanner s = build_barycentric_spanner(vertices, cfg.beta_target);
      return std::make_unique<BanditLearner>(lc, std::move(oracle), std::move(s));
    }
  }
  throw ConfigError("unknown algorithm");
}

}  // namespace

RegretTrace run_single_seed(const ExperimentConfig& cfg, uint64_t seed) {
  ConeSpec W = build_cone(cfg);
  std::vector<Vec> vertices = load_oracle_vertices(cfg);
  std::unique_ptr<Learner> learner = build_learner(cfg, seed, vertices, W);
  std::unique_ptr<Adversary> adversary = make_adversary(cfg, W, seed);

  std::vector<Vec> kstar;
  for (const Vec& v : vertices) kstar.push_back(cfg.alpha * v);
  Vec vertex_sums = Vec::Zero(static_cast<int>(kstar.size()));

  RegretTrace trace;
  double cum_loss = 0.0;
  for (long t = 1; t <= cfg.T; ++t) {
    Vec play = learner->round_play();
    Vec f = adversary->loss(t);
    learner->observe(f);
    adversary->publish(learner->expected_play());

    RoundRecord r;
    r.round = t;
    r.explore_flag = learner->explore_flag();
    r.played = play;
    r.loss = f.dot(play);
    cum_loss += r.loss;
    r.cum_loss = cum_loss;
    r.oracle_calls = learner->round_oracle_calls();
    r.s_t = learner->round_separations();
    for (size_t i = 0; i < kstar.size(); ++i) vertex_sums[static_cast<int>(i)] += f.dot(kstar[i]);
    r.cum_alpha_regret = cum_loss - vertex_sums.minCoeff();
    trace.rounds.push_back(std::move(r));
    trace.delta_estimates.push_back(learner->last_round_delta());
  }
  trace.comparator = vertex_sums.minCoeff();
  return trace;
}

std::string SummaryRow::to_line() const {
  std::ostringstream ss;
  ss << algorithm << " d=" << d << " T=" << T << " seeds=" << seeds
     << " mean_regret=" << format_sig(mean_regret, 6) << " stderr=" << format_sig(regret_stderr, 4)
     << " regret_envelope=" << format_sig(regret_envelope, 6)
     << " mean_total_calls=" << format_sig(mean_total_calls, 6)
     << " max_round_calls=" << max_round_calls << " call_bound=" << format_sig(call_bound, 6);
  if (algorithm == "cmwu")
    ss << " mean_separations=" << format_sig(mean_separations, 4)
       << " tradeoff_bound=" << format_sig(tradeoff, 6);
  ss << (pass ? " PASS" : " FAIL");
  return ss.str();
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  // Validate shared inputs once up front so config errors surface before the
  // seed fan-out.
  ConeSpec W = build_cone(cfg);
  std::vector<Vec> vertices = load_oracle_vertices(cfg);
  (void)build_oracle(cfg, vertices, W);

  const int n = static_cast<int>(cfg.seeds.size());
  ExperimentResult result;
  result.traces.resize(n);
  std::vector<std::string> errors(n);

#pragma omp parallel for schedule(dynamic) if (parallel_enabled())
  for (int i = 0; i < n; ++i) {
    try {
      result.traces[i] = run_single_seed(cfg, cfg.seeds[i]);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  for (int i = 0; i < n; ++i)
    if (!errors[i].empty())
      throw LearnerError("seed " + std::to_string(cfg.seeds[i]) + ": " + errors[i], -1);

  if (!cfg.out_dir.empty()) {
    std::filesystem::create_directories(cfg.out_dir);
    for (int i = 0; i < n; ++i) {
      std::ostringstream name;
      name << cfg.out_dir << "/"
           << (cfg.algorithm == AlgorithmKind::omd        ? "omd"
               : cfg.algorithm == AlgorithmKind::cmwu     ? "cmwu"
               : cfg.algorithm == AlgorithmKind::bandit   ? "bandit"
                                                          : "cmwu_reference")
           << "_T" << cfg.T << "_seed" << cfg.seeds[i] << ".csv";
      emit_csv(result.traces[i], name.str());
    }
  }

  SummaryRow& s = result.summary;
  s.algorithm = cfg.algorithm == AlgorithmKind::omd        ? "omd"
                : cfg.algorithm == AlgorithmKind::cmwu     ? "cmwu"
                : cfg.algorithm == AlgorithmKind::bandit   ? "bandit"
                                                           : "cmwu_reference";
  s.T = cfg.T;
  s.d = cfg.d;
  s.seeds = n;
  double sum = 0, sum2 = 0, calls = 0, seps = 0;
  for (const RegretTrace& t : result.traces) {
    const double r = t.final_alpha_regret();
    sum += r;
    sum2 += r * r;
    calls += t.total_oracle_calls();
    seps += t.total_separations();
    s.max_round_calls = std::max(s.max_round_calls, t.max_round_oracle_calls());
  }
  s.mean_regret = sum / n;
  s.regret_stderr = n > 1 ? std::sqrt(std::max(0.0, (sum2 / n - s.mean_regret * s.mean_regret) / (n - 1))) : 0.0;
  s.mean_total_calls = calls / n;
  s.mean_separations = seps / n;

  LearnerConfig lc = learner_config(cfg, cfg.seeds[0]);
  const double T = static_cast<double>(cfg.T);
  switch (cfg.algorithm) {
    case AlgorithmKind::omd: {
      Regularizer phi = build_regularizer(cfg, vertices);
      bounds::resolve_omd(lc, phi);
      s.regret_envelope = bounds::corollary_regret(cfg.alpha, cfg.L, cfg.R, T);
      s.call_bound = bounds::omd_call_ceiling(cfg.d, T, lc.r_star(), lc.A_override, lc.mu_override);
      s.pass = s.mean_regret <= s.regret_envelope && s.max_round_calls <= s.call_bound;
      break;
    }
    case AlgorithmKind::cmwu: {
      bounds::resolve_cmwu(lc);
      s.regret_envelope = bounds::cmwu_regret(cfg.L, lc.r_star(), cfg.d, T);
      const double per_sod = static_cast<double>(sod_call_ceiling(lc.r_star(), lc.eps, cfg.d));
      s.call_bound = (seps / n + T) * per_sod;
      s.tradeoff = bounds::cmwu_tradeoff(lc.gamma, lc.eta, cfg.L, lc.r_star(), cfg.d, T, seps / n);
      s.pass = s.mean_regret <= s.regret_envelope && s.mean_total_calls <= s.call_bound;
      break;
    }
    case AlgorithmKind::cmwu_reference: {
      bounds::resolve_cmwu(lc);
      s.regret_envelope = bounds::cmwu_refining_regret(cfg.L, lc.r_star(), cfg.d, T);
      s.call_bound = 0;
      s.pass = s.mean_regret <= s.regret_envelope;
      break;
    }
    case AlgorithmKind::bandit: {
      BarycentricSpanner sp = build_barycentric_spanner(vertices, cfg.beta_target);
      bounds::resolve_bandit(lc, sp.beta);
      s.regret_envelope = bounds::bandit_regret(cfg.alpha, cfg.L, cfg.R, cfg.d, sp.beta, T);
      s.call_bound = bounds::bandit_call_budget(lc, sp.beta);
      s.pass = s.mean_regret <= s.regret_envelope && s.mean_total_calls <= s.call_bound;
      break;
    }
  }
  return result;
}

}  // namespace oilo
