// Copyright (c) 2026 the brodylab authors
// SPDX-License-Identifier: Apache-2.0
#include "brody/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace brody {

namespace {
std::atomic<int> g_threads{0};

int env_threads() {
  if (const char* s = std::getenv("BRODY_THREADS")) {
    int n = std::atoi(s);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}
}  // namespace

int thread_count() {
  int n = g_threads.load(std::memory_order_relaxed);
  return n > 0 ? n : env_threads();
}

void set_thread_count(int n) { g_threads.store(n, std::memory_order_relaxed); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
  if (n == 0) return;
  int workers = thread_count();
  if (workers <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  if (static_cast<std::size_t>(workers) > n) workers = static_cast<int>(n);
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= n) return;
      f(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int t = 1; t < workers; ++t) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
}

double tree_sum(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  std::vector<double> level = xs;
  while (level.size() > 1) {
    std::size_t half = (level.size() + 1) / 2;
    std::vector<double> up(half);
    for (std::size_t i = 0; i < half; ++i) {
      double a = level[2 * i];
      double b = (2 * i + 1 < level.size()) ? level[2 * i + 1] : 0.0;
      up[i] = a + b;
    }
    level.swap(up);
  }
  return level[0];
}

double parallel_sum(std::size_t n, const std::function<double(std::size_t)>& term) {
  std::vector<double> vals(n);
  parallel_for(n, [&](std::size_t i) { vals[i] = term(i); });
  return tree_sum(vals);
}

}  // namespace brody
