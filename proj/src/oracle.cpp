// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

#include "oilo/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace oilo {

namespace {

// Exact minimizer over the vertex list; ties keep the earliest entry, so a
// lexicographically ordered list gets lexicographic tie-breaking.
Vec lex_min_vertex(const std::vector<Vec>& vertices, const Vec& v) {
  int best = 0;
  double bestval = v.dot(vertices[0]);
  for (size_t i = 1; i < vertices.size(); ++i) {
    double val = v.dot(vertices[i]);
    if (val < bestval - 1e-12) {
      bestval = val;
      best = static_cast<int>(i);
    }
  }
  return vertices[best];
}

}  // namespace

Vec simulate_alpha_approx(const std::vector<Vec>& k_vertices, double alpha, const Vec& v) {
  double vmin = 1e300;
  for (const Vec& x : k_vertices) vmin = std::min(vmin, v.dot(x));
  const double budget = alpha * vmin;
  // Worst admissible vertex; with v >= 0 and K in the orthant, budget >= vmin
  // so the admissible set is nonempty.
  int best = -1;
  double bestval = -1e300;
  for (size_t i = 0; i < k_vertices.size(); ++i) {
    double val = v.dot(k_vertices[i]);
    if (val <= budget + 1e-12 && val > bestval + 1e-12) {
      bestval = val;
      best = static_cast<int>(i);
    }
  }
  if (best < 0) return lex_min_vertex(k_vertices, v);
  return k_vertices[best];
}

Oracle::Oracle(OracleKind kind, std::vector<Vec> kv, double alpha, ConeSpec W)
    : kind_(kind), k_vertices_(std::move(kv)), alpha_(alpha), w_(std::move(W)) {
  if (k_vertices_.empty()) throw ConfigError("oracle: empty vertex list");
  if (alpha_ < 1.0) throw ConfigError("oracle: alpha must be >= 1");
  double r = 0.0;
  for (const Vec& x : k_vertices_) r = std::max(r, x.norm());
  radius_ = std::max(alpha_ * r, 1e-12);
}

Oracle Oracle::vertex_exact(std::vector<Vec> kv, double alpha, ConeSpec W, double radius) {
  Oracle o(OracleKind::vertex_exact, std::move(kv), alpha, std::move(W));
  if (radius > 0) o.radius_ = radius;
  return o;
}

Oracle Oracle::alpha_loose(std::vector<Vec> kv, double alpha, ConeSpec W, double radius) {
  Oracle o(OracleKind::alpha_loose, std::move(kv), alpha, std::move(W));
  if (radius > 0) o.radius_ = radius;
  return o;
}

Oracle Oracle::custom(std::function<Vec(const Vec&)> fn, std::vector<Vec> kv, double alpha,
                      ConeSpec W, double radius) {
  Oracle o(OracleKind::custom, std::move(kv), alpha, std::move(W));
  o.fn_ = std::move(fn);
  if (radius > 0) o.radius_ = radius;
  return o;
}

Vec Oracle::query(const Vec& v) {
  if (!w_.contains(v, 1e-9)) throw DomainError("oracle query: direction outside W");
  Vec y;
  switch (kind_) {
    case OracleKind::vertex_exact:
      y = lex_min_vertex(k_vertices_, v);
      break;
    case OracleKind::alpha_loose:
      y = simulate_alpha_approx(k_vertices_, alpha_, v);
      break;
    case OracleKind::custom:
      y = fn_(v);
      break;
  }
  counter_.record(v, y);
  return y;
}

std::vector<Vec> Oracle::kstar_vertices() const {
  std::vector<Vec> out;
  out.reserve(k_vertices_.size());
  for (const Vec& x : k_vertices_) out.push_back(alpha_ * x);
  return out;
}

double Oracle::kstar_support(const Vec& v) const {
  double m = 1e300;
  for (const Vec& x : k_vertices_) m = std::min(m, alpha_ * v.dot(x));
  return m;
}

std::vector<Vec> load_vertices_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open vertex file: " + path);
  std::vector<Vec> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<double> row;
    double v;
    while (ls >> v) row.push_back(v);
    if (row.empty()) continue;
    Vec x(static_cast<int>(row.size()));
    for (size_t i = 0; i < row.size(); ++i) x[static_cast<int>(i)] = row[i];
    out.push_back(x);
  }
  if (out.empty()) throw ConfigError("vertex file has no vertices: " + path);
  for (const Vec& x : out)
    if (x.size() != out[0].size()) throw ConfigError("vertex file rows have mixed dimensions");
  return out;
}

std::vector<Vec> parse_vertices_inline(const std::string& text) {
  std::vector<Vec> out;
  std::string chunk;
  std::istringstream ss(text);
  while (std::getline(ss, chunk, ';')) {
    std::vector<double> row;
    std::string num;
    std::istringstream cs(chunk);
    while (std::getline(cs, num, ',')) {
      if (num.find_first_not_of(" \t") == std::string::npos) continue;
      row.push_back(std::stod(num));
    }
    if (row.empty()) continue;
    Vec x(static_cast<int>(row.size()));
    for (size_t i = 0; i < row.size(); ++i) x[static_cast<int>(i)] = row[i];
    out.push_back(x);
  }
  if (out.empty()) throw ConfigError("inline vertex list is empty");
  return out;
}

}  // namespace oilo
