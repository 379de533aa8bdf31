// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

// Compares the serial and OpenMP chain-advance kernels on the two sampling
// workloads the learners lean on: cone-section centroids and log-linear
// means. Same seeds on both paths, so it also re-checks bit equality.

#include <chrono>
#include <cstdio>

#include "oilo/sampling.hpp"

using namespace oilo;

namespace {

double time_advance(CloudSampler& s, int steps, bool parallel, int reps) {
  auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) s.advance_chains(steps, parallel);
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void bench_case(const char* name, const CutBody& body, const Vec& interior, const Vec& g,
                int chains, int steps, int reps) {
  SamplerKnobs k;
  k.cloud = chains;
  k.burn = 0;
  k.thin = steps;
  CloudSampler serial(body, interior, 7, k);
  CloudSampler parallel(body, interior, 7, k);
  serial.set_direction(g);
  parallel.set_direction(g);

  const double ms_serial = time_advance(serial, steps, false, reps);
  const double ms_parallel = time_advance(parallel, steps, true, reps);

  bool identical = true;
  for (size_t i = 0; i < serial.cloud().size(); ++i)
    if (serial.cloud()[i] != parallel.cloud()[i]) identical = false;

  std::printf("%-28s %4d chains x %4d steps   serial %8.3f ms   omp %8.3f ms   speedup %5.2fx   %s\n",
              name, chains, steps, ms_serial, ms_parallel, ms_serial / ms_parallel,
              identical ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
  init_threads_from_env();
  std::printf("threads: %d\n", max_threads());

  ConeSection quarter(ConeSpec::orthant(3), 1.0);
  bench_case("centroid/orthant d=3", CutBody::from_section(quarter),
             section_interior_point(quarter), Vec::Zero(3), 64, 256, 8);

  CutBody ball(2, 1.0);
  Vec g = (Vec(2) << 40.0, 25.0).finished();
  bench_case("loglinear mean d=2", ball, Vec::Zero(2), g, 256, 128, 8);

  CutBody box = CutBody::box(Vec::Zero(4), Vec::Ones(4));
  bench_case("uniform box d=4", box, 0.5 * Vec::Ones(4), Vec::Zero(4), 128, 256, 4);
  return 0;
}
