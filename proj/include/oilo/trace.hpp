// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

#pragma once

#include <string>
#include <vector>

#include "oilo/common.hpp"

namespace oilo {

struct RoundRecord {
  long round = 0;
  int explore_flag = 0;
  Vec played;
  double loss = 0.0;
  double cum_loss = 0.0;
  long oracle_calls = 0;
  long s_t = 0;
  double cum_alpha_regret = 0.0;
};

struct RegretTrace {
  std::vector<RoundRecord> rounds;
  // Side channels (not in the CSV):
  std::vector<double> delta_estimates;  // CMWU removed log-mass per round
  double comparator = 0.0;              // min over K* vertices of sum_t f_t.x*

  double final_alpha_regret() const {
    return rounds.empty() ? 0.0 : rounds.back().cum_alpha_regret;
  }
  long total_oracle_calls() const {
    long s = 0;
    for (const auto& r : rounds) s += r.oracle_calls;
    return s;
  }
  long max_round_oracle_calls() const {
    long m = 0;
    for (const auto& r : rounds) m = std::max(m, r.oracle_calls);
    return m;
  }
  long total_separations() const {
    long s = 0;
    for (const auto& r : rounds) s += r.s_t;
    return s;
  }
};

// Exact alpha-regret: sum of realized losses minus the best K* vertex sum.
double compute_alpha_regret(const RegretTrace& trace, const std::vector<Vec>& kstar_vertices,
                            const std::vector<Vec>& losses);

// Columns: round,explore_flag,played_point,loss,cum_loss,oracle_calls,s_t,
// cum_alpha_regret. played_point joins coordinates with ';'. LF endings,
// 12 significant digits. Throws IoError when the path cannot be written.
void emit_csv(const RegretTrace& trace, const std::string& path);
std::string render_csv(const RegretTrace& trace);

RegretTrace parse_csv(const std::string& path);

// Numeric-field equality at the emitted precision (12 significant digits).
bool traces_equal(const RegretTrace& a, const RegretTrace& b);

}  // namespace oilo
