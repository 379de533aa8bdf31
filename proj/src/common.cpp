// oilo - online improper linear optimization with approximate oracles
// Copyright 2026 the oilo authors
// Licensed under Apache 2.0

#include "oilo/common.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace oilo {

namespace {
std::atomic<int> g_max_threads{0};  // 0 = uninitialized
}

void set_max_threads(int n) {
  if (n < 1) n = 1;
  g_max_threads.store(n);
#ifdef _OPENMP
  omp_set_num_threads(n);
#endif
}

int max_threads() {
  int n = g_max_threads.load();
  if (n == 0) {
    init_threads_from_env();
    n = g_max_threads.load();
  }
  return n;
}

bool parallel_enabled() {
#ifdef _OPENMP
  if (max_threads() <= 1) return false;
  return omp_in_parallel() == 0;  // no nested teams
#else
  return false;
#endif
}

void init_threads_from_env() {
  int n = 1;
#ifdef _OPENMP
  n = omp_get_max_threads();
#endif
  if (const char* env = std::getenv("OILO_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) n = v;
  }
  set_max_threads(n);
}

std::string format_sig(double v, int significant) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant, v);
  return buf;
}

}  // namespace oilo
