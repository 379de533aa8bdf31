// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>

#include "oilo/experiment.hpp"
#include "oilo/verify.hpp"

namespace {

// exit codes: 0 ok, 1 verification failure, 2 invalid config,
// 3 runtime learner/solver error, 4 unwritable output
int run_command(const std::string& config_path, const std::string& seeds,
                const std::string& out_dir, const std::string& algo, long T,
                const std::vector<std::string>& overrides) {
  oilo::KeyValueConfig kv = oilo::KeyValueConfig::parse_file(config_path);
  if (!seeds.empty()) kv.set("experiment.seeds", seeds);
  if (!out_dir.empty()) kv.set("experiment.out", out_dir);
  if (!algo.empty()) kv.set("experiment.algorithm", algo);
  if (T > 0) kv.set("experiment.T", std::to_string(T));
  for (const std::string& ov : overrides) {
    size_t eq = ov.find('=');
    if (eq == std::string::npos) throw oilo::ConfigError("--override expects key=value: " + ov);
    std::string key = ov.substr(0, eq);
    // bare eta/eps/gamma keys land in [overrides]
    if (key.find('.') == std::string::npos) key = "overrides." + key;
    kv.set(key, ov.substr(eq + 1));
  }
  oilo::ExperimentConfig cfg = oilo::ExperimentConfig::from_kv(kv);
  oilo::ExperimentResult res = oilo::run_experiment(cfg);
  std::cout << res.summary.to_line() << "\n";
  return 0;
}

int verify_command(const std::string& suite, uint64_t seed) {
  if (suite != "properties") throw oilo::ConfigError("unknown verify suite: " + suite);
  auto results = oilo::run_property_suite(seed);
  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.detail << ")\n";
    all = all && r.pass;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  oilo::init_threads_from_env();

  CLI::App app{"online improper linear optimization experiments"};
  app.require_subcommand(1);

  std::string config_path, seeds, out_dir, algo, suite = "properties";
  long T = 0;
  uint64_t verify_seed = 20260809ULL;
  std::vector<std::string> overrides;

  CLI::App* run = app.add_subcommand("run", "run a configured experiment");
  run->add_option("--config", config_path, "config file path")->required();
  run->add_option("--seeds", seeds, "comma-separated seed list (overrides config)");
  run->add_option("--out", out_dir, "output directory for CSV traces");
  run->add_option("--algo", algo, "omd|cmwu|bandit|cmwu_reference");
  run->add_option("--T", T, "number of rounds");
  run->add_option("--override", overrides, "section.key=value (repeatable)");

  CLI::App* verify = app.add_subcommand("verify", "run invariant suites");
  verify->add_option("--suite", suite, "suite name (properties)");
  verify->add_option("--seed", verify_seed, "suite seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return run_command(config_path, seeds, out_dir, algo, T, overrides);
    return verify_command(suite, verify_seed);
  } catch (const oilo::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const oilo::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << "\n";
    return 3;
  }
}
