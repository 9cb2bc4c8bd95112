// Copyright (c) 2026 the brodylab authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "brody/curve.hpp"
#include "brody/region.hpp"

namespace brody {

struct NondegPoint {
  Region window = Region::disk({0, 0}, 1.0);
  double delta_hat = 0;          // min over sampled centers of gridded sup
  Complex argmin{0, 0};          // center attaining it
  double refined_sup = 0;        // full sup search at argmin (>= delta_hat)
};

// Scale-qualified sampling of a = min_a ||df||_{L\infty(D_R(a))}: grids are
// anchored at the origin so nested windows reuse nested center sets, which
// keeps delta_hat non-increasing as the window grows. Each per-center sup is
// a grid lower bound of the true sup at the stated resolution.
struct NondegeneracyCertificate {
  double R = 0;
  double center_step = 0;       // default R/8
  double inner_resolution = 0;  // default R/64
  std::vector<NondegPoint> trend;
  double delta_hat() const { return trend.back().delta_hat; }
};

// pre: R > 0, windows non-empty and nested (each contains the previous).
NondegeneracyCertificate nondegeneracy_profile(const CurveMap& f, double R,
                                              const std::vector<Region>& windows,
                                              double center_step = 0,
                                              double inner_resolution = 0);

enum class NondegVerdict { nondegenerate_at_scale, degenerate_trend, inconclusive };

const char* to_string(NondegVerdict v);

// nondegenerate-at-scale: delta_hat >= threshold and flat trend (<5%
// relative change across the last two windows). degenerate-trend: decay by
// more than 2x from first to last window, or a vanishing tail. Everything
// else is inconclusive; a verdict never claims more than the window shows.
NondegVerdict classify(const NondegeneracyCertificate& cert, double threshold);

}  // namespace brody
