// Copyright (c) 2026 the brodylab authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "brody/region.hpp"
#include "brody/types.hpp"

namespace brody {

struct GaussLegendre {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// Nodes via Newton iteration on P_n; cached per order.
const GaussLegendre& gauss_legendre(int order);

struct QuadratureOptions {
  int order = 16;
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_depth = 26;
  bool parallel = true;
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evals = 0;
  int depth = 0;  // deepest subdivision used
};

using Fn1 = std::function<double(double)>;
using Fn2 = std::function<double(double, double)>;

// Adaptive Gauss-Legendre on [a, b]; accepts a panel when one dyadic
// refinement moves it by less than the tolerance.
QuadResult integrate_1d(const Fn1& f, double a, double b, const QuadratureOptions& opts = {});

// Adaptive tensor quadrature of f(x, y) over an axis-aligned rectangle.
QuadResult integrate_rect(const Fn2& f, double x0, double x1, double y0, double y1,
                          const QuadratureOptions& opts = {});

// Integral of f over a region; disks go through polar coordinates with
// dyadic radial panels, squares through integrate_rect.
QuadResult integrate_region(const std::function<double(Complex)>& f, const Region& region,
                            const QuadratureOptions& opts = {});

}  // namespace brody
