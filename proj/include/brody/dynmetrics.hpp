// Copyright (c) 2026 the brodylab authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "brody/curve.hpp"
#include "brody/region.hpp"

namespace brody {

// Compact-open metric dist(g,h) = sum_n 10^-n sup_{|z|<=n} d(g(z),h(z)),
// truncated at n_max and sampled on a grid of the given resolution.
struct DistanceOptions {
  int n_max = 12;
  double resolution = 0.05;
};

struct DistanceResult {
  double value = 0;
  double tail_bound = 0;      // (sqrt(pi)/2) * 10^-n_max / 9, the dropped tail
  double sampling_slack = 0;  // grid under-estimation allowance for the sups
  std::vector<double> disk_sups;  // s_0..s_{n_max}, nondecreasing; s_0 exact
};

DistanceResult curve_distance(const CurveMap& g, const CurveMap& h,
                              const DistanceOptions& opts = {});

// dist_Omega(g,h) = sup over translates a in Omega of dist(g(.+a), h(.+a)),
// sampled on an 8x8-step grid over Omega plus local refinement of the best
// translate. Lower-bound semantics.
struct OmegaDistanceResult {
  double value = 0;
  Complex argmax{0, 0};
  double grid_step = 0;
  double tail_bound = 0;
  double sampling_slack = 0;  // slack of the best translate's series
};

OmegaDistanceResult dist_omega(const CurveMap& g, const CurveMap& h, const Region& omega,
                               const DistanceOptions& opts = {});

// |dist_Omega(g,h) - sup_{z in Omega} d(g(z),h(z))| <= (1/9) sup_C d, with
// every quantity evaluated on one shared translate sample set: the omega sup
// uses the s_0 values of the very translates the omega distance maximized
// over, and the global sup is the largest distance sample seen anywhere, so
// the inequality is exact on the reported numbers.
struct InequalityCheck {
  double omega_distance = 0;
  double sup_omega = 0;
  double deviation = 0;  // |omega_distance - sup_omega|
  double bound = 0;      // (1/9) * global sampled sup
  double margin = 0;     // bound - deviation
  bool pass = false;
};

InequalityCheck dist_inequality_check(const CurveMap& g, const CurveMap& h, const Region& omega,
                                      const DistanceOptions& opts = {});

}  // namespace brody
