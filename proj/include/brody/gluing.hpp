// Copyright (c) 2026 the brodylab authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "brody/curve.hpp"
#include "brody/energy.hpp"
#include "brody/region.hpp"

namespace brody {

enum class GluingMode { analytic, empirical };

// delta0 is pinned globally; the solver re-asserts it.
inline constexpr double kDelta0 = 1.0 / 96.0;

struct GluingConstants {
  int N = 1;
  GluingMode mode = GluingMode::analytic;
  double a = 0;        // bump amplitude, max_r |dq| = 1/12
  double delta0 = kDelta0;
  double eps_glue = 0; // proof-internal epsilon, maximal feasible at R0
  double R0 = 0;
  double K = 0;        // cubic-decay constant for conditions (ii)/(iii)
  double Ka = 0, Kap = 0;
};

// Analytic mode: a from the 1/12 normalization, K from the closed formulas,
// smallest dyadic R0 satisfying the full inequality system, maximal
// eps_glue. Empirical mode: user-supplied (R0, K) accepted provisionally,
// validated a posteriori by verify_glue / make_nondegenerate postconditions;
// K defaults to a sqrt(2N/pi) when not given.
GluingConstants solve_constants(int N, GluingMode mode, double empirical_R0 = 0,
                                double empirical_K = 0);

// q(z) = [z^3 : a : ... : a] with N trailing constants.
CurveMap bump_curve(double a, int N);

// Single glue at p: in the chart normalized by unitary_to_origin(f, p) each
// affine component gains a/(z-p)^3, then the chart is rotated back.
// pre: measured sup of |df| over D_R(p) below delta0, R >= R0 + 1.
CurveMap glue_once(const CurveMap& f, Complex p, double R, const GluingConstants& consts);

struct DecayFit {
  double slope = 0;      // log-log regression over the outer half annulus
  double sup_scaled = 0; // sup of deviation * r^3 over the whole annulus
  bool bound_pass = false;  // sup_scaled <= K
};

struct GluingReport {
  Complex p{0, 0};
  double R = 0, r_out = 0, K = 0, delta0 = kDelta0;
  double sup_disk = 0;     // sup |dg| over D_R(p)
  bool cond1_pass = false; // delta0 <= sup_disk <= 2/3
  DecayFit cond2;          // | |dg| - |df| | * r^3
  DecayFit cond3;          // d(f, g) * r^3
  int n_circles = 0, n_rays = 0;
  bool pass() const { return cond1_pass && cond2.bound_pass && cond3.bound_pass; }
};

// Samples circles r in (R, r_out] (geometric) x rays, records the scaled
// deviations and their decay fits, and checks condition (i) on D_R(p).
GluingReport verify_glue(const CurveMap& f, const CurveMap& g, Complex p, double R, double K,
                         double r_out, double delta0 = kDelta0);

struct TilingPlan {
  double R = 0;                                // half tile side
  std::vector<std::pair<int, int>> order;      // (alpha, beta), enumeration order

  static TilingPlan spiral(double R, int half_width);
  static TilingPlan row_major(double R, int half_width);
  Complex center(size_t i) const;
  Region tile(size_t i) const;
  Region bounding_window() const;
  Region interior_window() const;  // bounding window shrunk by one tile ring
  bool interior(size_t i) const;   // all eight neighbours present
};

struct TileLogEntry {
  int index = 0, alpha = 0, beta = 0;
  int kase = 0;          // 1 keep (original), 2 keep (current), 3 glue
  bool interior = false;
  double sup_f = 0;      // original curve, this tile
  double sup_cur = 0;    // current curve at decision time
  double sup_after = 0;  // final curve, this tile
  double energy_before = 0, energy_after = 0;
};

struct MakeNondegResult {
  CurveMap g;
  std::vector<TileLogEntry> log;
  double delta = 0, eps = 0, tau = 0;
  int bumps = 0;
  double interior_sup = 0;
  double interior_bound = 0;  // max(1 - tau/2, 3/4)
  double tail_bound = 0;      // worst-case out-of-window interference, center tile
};

// Finite-window iterated gluing: per tile, keep when the original curve is
// already active (sup >= delta = min(delta0, sqrt(eps))), keep when the
// current curve is active at delta0, otherwise glue at the tile center.
// Postconditions (interior tiles) are measured and BoundViolated on failure.
MakeNondegResult make_nondegenerate(const CurveMap& f, double eps, double tau,
                                    const TilingPlan& plan, const GluingConstants& consts);

// Sum over lattice rings j >= first_ring of 8j * K / ((2j-1) R)^3.
double tile_interference_bound(double R, double K, int first_ring);

}  // namespace brody
