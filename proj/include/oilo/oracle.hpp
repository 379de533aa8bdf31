// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "oilo/cone.hpp"
#include "oilo/common.hpp"

namespace oilo {

// Per-round call accounting plus a bounded (query, answer) transcript; this
// is what grounds every oracle-complexity claim in the tests.
class CallCounter {
 public:
  explicit CallCounter(size_t transcript_cap = 4096) : transcript_cap_(transcript_cap) {}

  void begin_round() {
    per_round_.push_back(0);
  }
  void record(const Vec& query, const Vec& answer) {
    ++total_;
    if (per_round_.empty()) per_round_.push_back(0);
    ++per_round_.back();
    if (transcript_.size() < transcript_cap_) transcript_.emplace_back(query, answer);
  }

  long total() const { return total_; }
  long round_calls() const { return per_round_.empty() ? 0 : per_round_.back(); }
  long max_round_calls() const {
    long m = 0;
    for (long c : per_round_) m = std::max(m, c);
    return m;
  }
  const std::vector<long>& per_round() const { return per_round_; }
  const std::vector<std::pair<Vec, Vec>>& transcript() const { return transcript_; }

 private:
  long total_ = 0;
  std::vector<long> per_round_;
  std::vector<std::pair<Vec, Vec>> transcript_;
  size_t transcript_cap_;
};

enum class OracleKind { vertex_exact, alpha_loose, custom };

// An adversarially loose alpha-approximation: the worst vertex whose value
// still meets v.y <= alpha * min_K v.x (ties broken lexicographically).
Vec simulate_alpha_approx(const std::vector<Vec>& k_vertices, double alpha, const Vec& v);

// The improper linear optimization oracle O_{K,K*}: given a direction
// v in W it returns y in K with v.y <= min_{x* in K*} v.x*, where K* = alpha K.
// K is an explicit vertex list at this scale; queries outside W raise
// DomainError. Every call is counted and transcribed.
class Oracle {
 public:
  // radius < 0 derives the K/K* ball bound from the vertex list.
  static Oracle vertex_exact(std::vector<Vec> k_vertices, double alpha, ConeSpec W,
                             double radius = -1.0);
  static Oracle alpha_loose(std::vector<Vec> k_vertices, double alpha, ConeSpec W,
                            double radius = -1.0);
  static Oracle custom(std::function<Vec(const Vec&)> fn, std::vector<Vec> k_vertices,
                       double alpha, ConeSpec W, double radius = -1.0);

  Vec query(const Vec& v);

  OracleKind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  // Ball radius covering both K and K* = alpha K.
  double radius() const { return radius_; }
  const ConeSpec& cone() const { return w_; }
  const std::vector<Vec>& k_vertices() const { return k_vertices_; }
  std::vector<Vec> kstar_vertices() const;

  CallCounter& counter() { return counter_; }
  const CallCounter& counter() const { return counter_; }

  // min over K* vertices of v.x*
  double kstar_support(const Vec& v) const;

 private:
  Oracle(OracleKind kind, std::vector<Vec> kv, double alpha, ConeSpec W);
  OracleKind kind_;
  std::vector<Vec> k_vertices_;
  double alpha_;
  double radius_;
  ConeSpec w_;
  std::function<Vec(const Vec&)> fn_;
  CallCounter counter_;
};

// Plain-text vertex matrix: one vertex per line, whitespace-separated
// decimals; blank lines and lines starting with '#' are skipped.
std::vector<Vec> load_vertices_file(const std::string& path);
std::vector<Vec> parse_vertices_inline(const std::string& text);  // "1,0; 0,1"

}  // namespace oilo
