// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

#include "oilo/trace.hpp"

#include <fstream>
#include <sstream>

namespace oilo {

double compute_alpha_regret(const RegretTrace& trace, const std::vector<Vec>& kstar_vertices,
                            const std::vector<Vec>& losses) {
  if (kstar_vertices.empty()) throw ConfigError("compute_alpha_regret: empty comparator vertex list");
  double realized = 0.0;
  for (const auto& r : trace.rounds) realized += r.loss;
  Vec f_sum = Vec::Zero(losses.empty() ? kstar_vertices[0].size() : losses[0].size());
  for (const Vec& f : losses) f_sum += f;
  double best = 1e300;
  for (const Vec& x : kstar_vertices) best = std::min(best, f_sum.dot(x));
  if (losses.empty()) best = 0.0;
  return realized - best;
}

std::string render_csv(const RegretTrace& trace) {
  std::ostringstream out;
  out << "round,explore_flag,played_point,loss,cum_loss,oracle_calls,s_t,cum_alpha_regret\n";
  for (const auto& r : trace.rounds) {
    out << r.round << ',' << r.explore_flag << ',';
    for (int i = 0; i < r.played.size(); ++i) {
      if (i) out << ';';
      out << format_sig(r.played[i]);
    }
    out << ',' << format_sig(r.loss) << ',' << format_sig(r.cum_loss) << ',' << r.oracle_calls
        << ',' << r.s_t << ',' << format_sig(r.cum_alpha_regret) << '\n';
  }
  return out.str();
}

void emit_csv(const RegretTrace& trace, const std::string& path) {
  std::ofstream f(path, std::ios::binary);  // binary: LF endings everywhere
  if (!f) throw IoError("emit_csv: cannot open for writing: " + path);
  f << render_csv(trace);
  if (!f) throw IoError("emit_csv: write failed: " + path);
}

RegretTrace parse_csv(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("parse_csv: cannot open: " + path);
  RegretTrace t;
  std::string line;
  if (!std::getline(f, line)) throw IoError("parse_csv: empty file: " + path);
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string field;
    RoundRecord r;
    std::getline(ls, field, ',');
    r.round = std::stol(field);
    std::getline(ls, field, ',');
    r.explore_flag = std::stoi(field);
    std::getline(ls, field, ',');
    {
      std::vector<double> coords;
      std::istringstream ps(field);
      std::string c;
      while (std::getline(ps, c, ';')) coords.push_back(std::stod(c));
      r.played = Vec(static_cast<int>(coords.size()));
      for (size_t i = 0; i < coords.size(); ++i) r.played[static_cast<int>(i)] = coords[i];
    }
    std::getline(ls, field, ',');
    r.loss = std::stod(field);
    std::getline(ls, field, ',');
    r.cum_loss = std::stod(field);
    std::getline(ls, field, ',');
    r.oracle_calls = std::stol(field);
    std::getline(ls, field, ',');
    r.s_t = std::stol(field);
    std::getline(ls, field, ',');
    r.cum_alpha_regret = std::stod(field);
    t.rounds.push_back(std::move(r));
  }
  return t;
}

bool traces_equal(const RegretTrace& a, const RegretTrace& b) {
  if (a.rounds.size() != b.rounds.size()) return false;
  auto same = [](double x, double y) { return format_sig(x) == format_sig(y); };
  for (size_t i = 0; i < a.rounds.size(); ++i) {
    const auto& ra = a.rounds[i];
    const auto& rb = b.rounds[i];
    if (ra.round != rb.round || ra.explore_flag != rb.explore_flag ||
        ra.oracle_calls != rb.oracle_calls || ra.s_t != rb.s_t)
      return false;
    if (ra.played.size() != rb.played.size()) return false;
    for (int j = 0; j < ra.played.size(); ++j)
      if (!same(ra.played[j], rb.played[j])) return false;
    if (!same(ra.loss, rb.loss) || !same(ra.cum_loss, rb.cum_loss) ||
        !same(ra.cum_alpha_regret, rb.cum_alpha_regret))
      return false;
  }
  return true;
}

}  // namespace oilo
