// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

#pragma once

#include <memory>

#include "oilo/config.hpp"
#include "oilo/learners.hpp"
#include "oilo/trace.hpp"

namespace oilo {

// Loss sequences. Every adversary emits f_t in W with ||f_t|| <= L. The
// adaptive one picks, from a fixed direction menu, the loss maximizing the
// learner's previously published expected play; since it only uses already
// published history it is equivalent to an oblivious sequence per round.
class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual Vec loss(long t) = 0;
  virtual void publish(const Vec& expected_play) {}
};

std::unique_ptr<Adversary> make_adversary(const ExperimentConfig& cfg, const ConeSpec& W,
                                          uint64_t seed);

struct SummaryRow {
  std::string algorithm;
  long T = 0;
  int d = 0;
  int seeds = 0;
  double mean_regret = 0.0;
  double regret_stderr = 0.0;
  double mean_total_calls = 0.0;
  long max_round_calls = 0;
  double mean_separations = 0.0;
  double regret_envelope = 0.0;  // Corollary / Thm 5 / Thm 6 / Thm 7
  double call_bound = 0.0;       // Thm 3 per-round ceiling or Thm 6/7 total budget
  double tradeoff = 0.0;         // CMWU regret bound with the s-discount
  bool pass = false;

  std::string to_line() const;
};

struct ExperimentResult {
  std::vector<RegretTrace> traces;  // one per seed, in seed order
  SummaryRow summary;
};

// Builders shared with the tests.
ConeSpec build_cone(const ExperimentConfig& cfg);
Regularizer build_regularizer(const ExperimentConfig& cfg, const std::vector<Vec>& vertices);
std::vector<Vec> load_oracle_vertices(const ExperimentConfig& cfg);
Oracle build_oracle(const ExperimentConfig& cfg, const std::vector<Vec>& vertices,
                    const ConeSpec& W);
LearnerConfig learner_config(const ExperimentConfig& cfg, uint64_t seed);

// Runs one seed deterministically.
RegretTrace run_single_seed(const ExperimentConfig& cfg, uint64_t seed);

// Runs all seeds (seed-parallel when threads allow), writes one CSV per seed
// under out_dir when set, and aggregates the summary.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

}  // namespace oilo
