// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace oilo {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// ---------------------------------------------------------------------------
// Errors. One subclass per failure family so the CLI can map them to exit
// codes (2 config, 3 runtime, 4 io).
// ---------------------------------------------------------------------------

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedConeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidBodyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateSectionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SamplerDiagnosticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RankError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Solver failure that still carries the best iterate found.
struct SolverError : std::runtime_error {
  double best_residual;
  explicit SolverError(const std::string& msg, double residual)
      : std::runtime_error(msg), best_residual(residual) {}
};

struct LearnerError : std::runtime_error {
  long round;
  LearnerError(const std::string& msg, long round_index)
      : std::runtime_error(msg), round(round_index) {}
};

// ---------------------------------------------------------------------------
// Deterministic RNG. We do not use the std distributions (their algorithms
// are implementation defined); every draw below is pinned so traces are
// byte-identical across builds and thread counts.
// ---------------------------------------------------------------------------

inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Stable sub-seed derivation: (seed, stream) -> seed.
inline uint64_t derive_seed(uint64_t seed, uint64_t stream) {
  uint64_t s = seed ^ (0x6a09e667f3bcc909ULL + stream * 0x9e3779b97f4a7c15ULL);
  splitmix64(s);
  return splitmix64(s);
}

class Rng {
 public:
  explicit Rng(uint64_t seed = 0) : state_(seed) {
    // warm up so nearby seeds decorrelate
    splitmix64(state_);
    splitmix64(state_);
  }

  uint64_t next_u64() { return splitmix64(state_); }

  // uniform in [0,1)
  double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // strictly positive uniform, for logs
  double uniform_pos() {
    double u;
    do {
      u = uniform();
    } while (u <= 0.0);
    return u;
  }

  // standard normal via Box-Muller (deterministic, no cached spare)
  double gaussian() {
    double u1 = uniform_pos();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

  Vec gaussian_vec(int d) {
    Vec v(d);
    for (int i = 0; i < d; ++i) v[i] = gaussian();
    return v;
  }

  // uniform direction on the unit sphere
  Vec sphere(int d) {
    Vec v = gaussian_vec(d);
    double n = v.norm();
    while (n < 1e-12) {
      v = gaussian_vec(d);
      n = v.norm();
    }
    return v / n;
  }

  // index i with probability p[i]; p must sum to ~1
  int categorical(const Vec& p) {
    double u = uniform();
    double acc = 0.0;
    for (int i = 0; i < p.size(); ++i) {
      acc += p[i];
      if (u < acc) return i;
    }
    return static_cast<int>(p.size()) - 1;
  }

  int uniform_int(int n) { return static_cast<int>(next_u64() % static_cast<uint64_t>(n)); }

 private:
  uint64_t state_;
};

// ---------------------------------------------------------------------------
// Thread control. OILO_THREADS=1 forces the serial reference path; any other
// value sets the OpenMP team size. Sampler kernels check this flag so the
// parallel and serial paths can be compared.
// ---------------------------------------------------------------------------

void set_max_threads(int n);  // n <= 1 disables parallel kernels
int max_threads();
bool parallel_enabled();
void init_threads_from_env();  // reads OILO_THREADS once

// "%.12g"-style formatting used by every CSV writer.
std::string format_sig(double v, int significant = 12);

}  // namespace oilo
