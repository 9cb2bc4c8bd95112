// Copyright (c) 2026 the brodylab authors
// SPDX-License-Identifier: Apache-2.0
#include "brody/dynmetrics.hpp"

#include <algorithm>
#include <cmath>

#include "brody/parallel.hpp"

namespace brody {

namespace {

void validate(const DistanceOptions& opts) {
  if (opts.n_max < 1) throw PreconditionViolated("distance series needs n_max >= 1");
  if (!(opts.resolution > 0)) throw PreconditionViolated("sample resolution must be positive");
}

double point_distance(const CurveMap& g, const CurveMap& h, Complex z) {
  return fs_distance(evaluate(g, z), evaluate(h, z));
}

// Compass ascent of z -> d(g(z),h(z)) inside the disk |z| <= n.
double refine_in_disk(const CurveMap& g, const CurveMap& h, Complex z0, double n, double step0,
                      double seed_value) {
  static const Complex dirs[8] = {{1, 0}, {-1, 0}, {0, 1},  {0, -1},
                                  {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  Complex at = z0;
  double best = seed_value;
  double step = step0;
  for (int iter = 0; iter < 96 && step > step0 / 1024; ++iter) {
    Complex move = at;
    double top = best;
    for (const Complex& d : dirs) {
      Complex w = at + step * d;
      if (std::abs(w) > n) continue;
      double v = point_distance(g, h, w);
      if (v > top) {
        top = v;
        move = w;
      }
    }
    if (top > best) {
      best = top;
      at = move;
    } else {
      step *= 0.5;
    }
  }
  return best;
}

}  // namespace

DistanceResult curve_distance(const CurveMap& g, const CurveMap& h, const DistanceOptions& opts) {
  validate(opts);
  const int M = opts.n_max;
  const int half = std::max(1, static_cast<int>(std::ceil(M / opts.resolution)));
  const double step = static_cast<double>(M) / half;
  const int n_nodes = 2 * half + 1;

  // One grid over the square [-M, M]^2, bucketed by the smallest disk index
  // containing each node; sups over disks are then running maxima.
  struct RowAcc {
    std::vector<double> best;
    std::vector<Complex> at;
  };
  std::vector<RowAcc> rows(n_nodes);
  parallel_for(static_cast<std::size_t>(n_nodes), [&](std::size_t jj) {
    RowAcc& acc = rows[jj];
    acc.best.assign(M + 1, -1.0);
    acc.at.assign(M + 1, Complex{0, 0});
    int j = static_cast<int>(jj) - half;
    double y = step * j;
    for (int i = -half; i <= half; ++i) {
      double x = step * i;
      double r = std::hypot(x, y);
      if (r > M + 1e-12) continue;
      int k = (i == 0 && j == 0) ? 0 : std::min(M, std::max(1, (int)std::ceil(r - 1e-12)));
      double v = point_distance(g, h, {x, y});
      if (v > acc.best[k]) {
        acc.best[k] = v;
        acc.at[k] = {x, y};
      }
    }
  });

  std::vector<double> bucket_best(M + 1, -1.0);
  std::vector<Complex> bucket_at(M + 1, Complex{0, 0});
  for (const RowAcc& acc : rows)
    for (int k = 0; k <= M; ++k)
      if (acc.best[k] > bucket_best[k]) {
        bucket_best[k] = acc.best[k];
        bucket_at[k] = acc.at[k];
      }

  DistanceResult out;
  out.disk_sups.assign(M + 1, 0.0);
  out.disk_sups[0] = bucket_best[0];  // exact: the node z = 0 itself
  double run = bucket_best[0];
  Complex run_at{0, 0};
  for (int n = 1; n <= M; ++n) {
    if (bucket_best[n] > run) {
      run = bucket_best[n];
      run_at = bucket_at[n];
    }
    double refined = refine_in_disk(g, h, run_at, n, step, run);
    out.disk_sups[n] = std::max(out.disk_sups[n - 1], refined);
  }

  double value = 0;
  for (int n = M; n >= 0; --n) value += std::pow(10.0, -n) * out.disk_sups[n];
  out.value = value;
  out.tail_bound = 0.5 * kSqrtPi * std::pow(10.0, -M) / 9.0;

  // Lipschitz constant of z -> d(g,h) is bounded by |dg| + |dh|; measure it
  // on a 4x coarser subgrid with headroom, and allow one covering radius of
  // step*(1 + 1/sqrt(2)) on each weighted sup (s_0 carries none).
  double lip = 0;
  const int cstep = 4;
  std::vector<double> row_lip((n_nodes + cstep - 1) / cstep, 0.0);
  parallel_for(row_lip.size(), [&](std::size_t jj) {
    int j = static_cast<int>(jj) * cstep - half;
    double y = step * j;
    double m = 0;
    for (int i = -half; i <= half; i += cstep) {
      double x = step * i;
      if (std::hypot(x, y) > M + 1e-12) continue;
      Complex z{x, y};
      m = std::max(m, spherical_derivative(g, z) + spherical_derivative(h, z));
    }
    row_lip[jj] = m;
  });
  for (double m : row_lip) lip = std::max(lip, m);
  out.sampling_slack = 1.5 * lip * step * (1.0 + 1.0 / std::sqrt(2.0)) / 9.0;
  return out;
}

namespace {

struct TranslateSweep {
  double best_value = -1;
  Complex best_at{0, 0};
  DistanceResult best;
  double sup_s0 = 0;      // largest d(g(a), h(a)) over the visited translates
  double sup_global = 0;  // largest distance sample seen anywhere
  double grid_step = 0;
};

TranslateSweep sweep_translates(const CurveMap& g, const CurveMap& h, const Region& omega,
                                const DistanceOptions& opts) {
  validate(opts);
  TranslateSweep sw;
  double H = omega.half_extent();
  sw.grid_step = H / 4.0;  // 8 steps across the region

  auto visit = [&](Complex a) {
    DistanceResult r =
        curve_distance(g.precompose({1, 0}, a), h.precompose({1, 0}, a), opts);
    sw.sup_s0 = std::max(sw.sup_s0, r.disk_sups.front());
    sw.sup_global = std::max(sw.sup_global, r.disk_sups.back());
    if (r.value > sw.best_value) {
      sw.best_value = r.value;
      sw.best_at = a;
      sw.best = std::move(r);
    }
  };

  if (sw.grid_step <= 0) {
    visit(omega.center);
    return sw;
  }
  for (int j = -4; j <= 4; ++j)
    for (int i = -4; i <= 4; ++i) {
      Complex a = omega.center + sw.grid_step * Complex(i, j);
      if (omega.contains(a)) visit(a);
    }

  // Compass refinement of the best translate, clipped to omega.
  static const Complex dirs[8] = {{1, 0}, {-1, 0}, {0, 1},  {0, -1},
                                  {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  double step = sw.grid_step / 2;
  for (int iter = 0; iter < 24 && step > sw.grid_step / 64; ++iter) {
    Complex base = sw.best_at;
    double before = sw.best_value;
    for (const Complex& d : dirs) {
      Complex a = base + step * d;
      if (omega.contains(a)) visit(a);
    }
    if (sw.best_value <= before) step *= 0.5;
  }
  return sw;
}

}  // namespace

OmegaDistanceResult dist_omega(const CurveMap& g, const CurveMap& h, const Region& omega,
                               const DistanceOptions& opts) {
  TranslateSweep sw = sweep_translates(g, h, omega, opts);
  OmegaDistanceResult out;
  out.value = sw.best_value;
  out.argmax = sw.best_at;
  out.grid_step = sw.grid_step;
  out.tail_bound = sw.best.tail_bound;
  out.sampling_slack = sw.best.sampling_slack;
  return out;
}

InequalityCheck dist_inequality_check(const CurveMap& g, const CurveMap& h, const Region& omega,
                                      const DistanceOptions& opts) {
  TranslateSweep sw = sweep_translates(g, h, omega, opts);
  InequalityCheck out;
  out.omega_distance = sw.best_value;
  out.sup_omega = sw.sup_s0;
  out.deviation = std::abs(sw.best_value - sw.sup_s0);
  out.bound = sw.sup_global / 9.0;
  out.margin = out.bound - out.deviation;
  out.pass = out.deviation <= out.bound * (1 + 1e-12) + 1e-15;
  return out;
}

}  // namespace brody
