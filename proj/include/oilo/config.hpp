// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "oilo/common.hpp"

namespace oilo {

// Flat key=value config with [section] headers; '#' and ';' start comments.
// Keys are stored as "section.key".
class KeyValueConfig {
 public:
  static KeyValueConfig parse_file(const std::string& path);
  static KeyValueConfig parse_string(const std::string& text);

  bool has(const std::string& key) const { return values_.count(key) > 0; }
  std::string get(const std::string& key, const std::string& fallback = "") const;
  double get_double(const std::string& key, double fallback) const;
  long get_long(const std::string& key, long fallback) const;
  void set(const std::string& key, const std::string& value) { values_[key] = value; }

  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

enum class AlgorithmKind { omd, cmwu, bandit, cmwu_reference };
enum class AdversaryKind { iid_uniform, fixed_vector, alternating, adaptive_worstcase_vertex };

struct ExperimentConfig {
  AlgorithmKind algorithm = AlgorithmKind::omd;
  int d = 2;
  long T = 100;
  double alpha = 1.0;
  double L = 1.0;
  double R = 1.0;
  std::string regularizer = "euclidean";
  std::string cone = "nonneg_orthant";
  std::string cone_matrix;  // rows "a,b;c,d" for linear_image
  std::string oracle_kind = "vertex_exact";
  std::string vertices_file;
  std::string vertices_inline;
  AdversaryKind adversary = AdversaryKind::iid_uniform;
  std::string adversary_vector;
  std::vector<uint64_t> seeds{1};
  std::string out_dir;

  // overrides (negative = use paper defaults)
  double eta = -1, eps = -1, gamma = -1, mu = -1, A = -1, beta_target = 2.0;

  // sampler knobs
  int reduction_cloud = 48, reduction_burn = -1, reduction_thin = -1;
  int mean_cloud = 128, mean_burn = -1, mean_thin = -1;
  long mean_samples = -1;
  int max_cuts_per_round = 200;

  static ExperimentConfig from_kv(const KeyValueConfig& kv);
};

std::vector<uint64_t> parse_seed_list(const std::string& text);

}  // namespace oilo
