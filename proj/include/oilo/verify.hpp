// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

#pragma once

#include <string>
#include <vector>

#include "oilo/common.hpp"

namespace oilo {

struct VerifyResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Randomized invariant checks. Counts are parameters so the acceptance suite
// can pin the larger spec-level instance counts while `verify --suite
// properties` and the unit tests run medium-effort versions.

VerifyResult check_pythagorean_dual_projection(uint64_t seed, int trials, int dual_dirs);
VerifyResult check_cone_project_dual(uint64_t seed, int trials);
VerifyResult check_orthant_self_dual(uint64_t seed, int trials);
VerifyResult check_bregman_identities(uint64_t seed, int trials);
VerifyResult check_generalized_pythagorean(uint64_t seed, int triples_per_reg);
VerifyResult check_smoothness_bound(uint64_t seed, int trials);
VerifyResult check_pnip_pairs(uint64_t seed, int pairs);
VerifyResult check_sampler_membership_determinism(uint64_t seed);
VerifyResult check_mc_rate(uint64_t seed);
VerifyResult check_lemma3_mass(uint64_t seed, int bodies, int n_mean, int n_mass);
VerifyResult check_lemma7_equivalence(uint64_t seed, int instances);
VerifyResult check_decomposition_optimality(uint64_t seed, int instances);
VerifyResult check_pad_invariants(uint64_t seed, int instances);
VerifyResult check_sod_invariants(uint64_t seed, int instances);
VerifyResult check_bandit_estimator(uint64_t seed, long rounds);

// The `verify --suite properties` bundle.
std::vector<VerifyResult> run_property_suite(uint64_t seed);

}  // namespace oilo
