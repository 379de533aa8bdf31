// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

#include "oilo/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace oilo {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

KeyValueConfig KeyValueConfig::parse_string(const std::string& text) {
  KeyValueConfig cfg;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("config line " + std::to_string(lineno) + ": bad section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    cfg.values_[section.empty() ? key : section + "." + key] = value;
  }
  return cfg;
}

KeyValueConfig KeyValueConfig::parse_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_string(ss.str());
}

std::string KeyValueConfig::get(const std::string& key, const std::string& fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

double KeyValueConfig::get_double(const std::string& key, double fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  try {
    return std::stod(it->second);
  } catch (...) {
    throw ConfigError("config key " + key + ": not a number: " + it->second);
  }
}

long KeyValueConfig::get_long(const std::string& key, long fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  try {
    return std::stol(it->second);
  } catch (...) {
    throw ConfigError("config key " + key + ": not an integer: " + it->second);
  }
}

std::vector<uint64_t> parse_seed_list(const std::string& text) {
  std::vector<uint64_t> seeds;
  std::istringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = trim(tok);
    if (tok.empty()) continue;
    seeds.push_back(std::stoull(tok));
  }
  if (seeds.empty()) throw ConfigError("empty seed list");
  return seeds;
}

ExperimentConfig ExperimentConfig::from_kv(const KeyValueConfig& kv) {
  ExperimentConfig c;
  const std::string algo = kv.get("experiment.algorithm", "omd");
  if (algo == "omd")
    c.algorithm = AlgorithmKind::omd;
  else if (algo == "cmwu")
    c.algorithm = AlgorithmKind::cmwu;
  else if (algo == "bandit")
    c.algorithm = AlgorithmKind::bandit;
  else if (algo == "cmwu_reference")
    c.algorithm = AlgorithmKind::cmwu_reference;
  else
    throw ConfigError("unknown algorithm: " + algo);

  c.d = static_cast<int>(kv.get_long("experiment.d", 2));
  c.T = kv.get_long("experiment.T", 100);
  c.alpha = kv.get_double("experiment.alpha", 1.0);
  c.L = kv.get_double("experiment.L", 1.0);
  c.R = kv.get_double("experiment.R", 1.0);
  if (c.d < 1 || c.T < 1) throw ConfigError("d and T must be positive");
  if (c.alpha < 1.0) throw ConfigError("alpha must be >= 1");
  if (c.L <= 0 || c.R <= 0) throw ConfigError("L and R must be positive");

  c.regularizer = kv.get("regularizer.kind", "euclidean");
  c.cone = kv.get("cone.kind", "nonneg_orthant");
  c.cone_matrix = kv.get("cone.matrix", "");
  c.oracle_kind = kv.get("oracle.kind", "vertex_exact");
  c.vertices_file = kv.get("oracle.vertices_file", "");
  c.vertices_inline = kv.get("oracle.vertices", "");

  const std::string adv = kv.get("adversary.kind", "iid_uniform");
  if (adv == "iid_uniform")
    c.adversary = AdversaryKind::iid_uniform;
  else if (adv == "fixed_vector")
    c.adversary = AdversaryKind::fixed_vector;
  else if (adv == "alternating")
    c.adversary = AdversaryKind::alternating;
  else if (adv == "adaptive_worstcase_vertex")
    c.adversary = AdversaryKind::adaptive_worstcase_vertex;
  else
    throw ConfigError("unknown adversary: " + adv);
  c.adversary_vector = kv.get("adversary.vector", "");

  if (kv.has("experiment.seeds")) c.seeds = parse_seed_list(kv.get("experiment.seeds"));
  c.out_dir = kv.get("experiment.out", "");

  c.eta = kv.get_double("overrides.eta", -1);
  c.eps = kv.get_double("overrides.eps", -1);
  c.gamma = kv.get_double("overrides.gamma", -1);
  c.mu = kv.get_double("overrides.mu", -1);
  c.A = kv.get_double("overrides.A", -1);
  c.beta_target = kv.get_double("overrides.beta_target", 2.0);

  c.reduction_cloud = static_cast<int>(kv.get_long("sampler.reduction_cloud", 48));
  c.reduction_burn = static_cast<int>(kv.get_long("sampler.reduction_burn", -1));
  c.reduction_thin = static_cast<int>(kv.get_long("sampler.reduction_thin", -1));
  c.mean_cloud = static_cast<int>(kv.get_long("sampler.mean_cloud", 128));
  c.mean_burn = static_cast<int>(kv.get_long("sampler.mean_burn", -1));
  c.mean_thin = static_cast<int>(kv.get_long("sampler.mean_thin", -1));
  c.mean_samples = kv.get_long("sampler.mean_samples", -1);
  c.max_cuts_per_round = static_cast<int>(kv.get_long("sampler.max_cuts_per_round", 200));
  return c;
}

}  // namespace oilo
