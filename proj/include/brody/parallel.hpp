// Copyright (c) 2026 the brodylab authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace brody {

// Worker count resolution order: set_thread_count() > BRODY_THREADS env > hardware.
int thread_count();
void set_thread_count(int n);

// Runs f(i) for i in [0, n) on the worker pool. Tasks must only write
// state owned by index i; scheduling order is unspecified.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

// Sum in a fixed pairwise tree over index order, so the result does not
// depend on how tasks were scheduled.
double tree_sum(const std::vector<double>& xs);

// Evaluates term(i) in parallel, reduces with tree_sum.
double parallel_sum(std::size_t n, const std::function<double(std::size_t)>& term);

}  // namespace brody
