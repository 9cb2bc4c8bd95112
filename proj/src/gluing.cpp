// Copyright (c) 2026 the brodylab authors
// SPDX-License-Identifier: Apache-2.0
#include "brody/gluing.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace brody {

namespace {

double binom2(int n) { return 0.5 * n * (n - 1); }

// Maximal eps satisfying the linear caps and, for N >= 2, the quadratic
// pair-sum constraint 2 R0^4 e^2 + (6a + 2aR0) e <= a / sqrt(N(N-1)/2).
double max_eps(int N, double a, double R0) {
  double e = std::min({a / (R0 * R0 * R0), 1.5 * a / std::pow(R0, 4.0),
                       0.5 * a / (R0 * R0 * R0), a / std::pow(R0, 4.0)});
  if (N >= 2) {
    double A = 2.0 * std::pow(R0, 4.0);
    double B = 6.0 * a + 2.0 * a * R0;
    double C = a / std::sqrt(binom2(N));
    double root = (-B + std::sqrt(B * B + 4.0 * A * C)) / (2.0 * A);
    e = std::min(e, root);
  }
  return e;
}

bool system_holds(int N, double a, double K, double R0, double eps) {
  double R3 = R0 * R0 * R0, R4 = R3 * R0, R6 = R3 * R3;
  if (!(eps <= a / R3 && eps <= 1.5 * a / R4)) return false;
  if (!(eps * R3 <= 0.5 * a && eps * R4 <= a)) return false;
  if (N >= 2) {
    double lhs = 2.0 * eps * eps * R4 + 6.0 * a * eps + 2.0 * a * eps * R0;
    if (!(lhs <= a / std::sqrt(binom2(N)))) return false;
  }
  if (!(N * a / R3 <= 2.0)) return false;
  if (!(N * a * a / R6 <= 0.5)) return false;
  if (!(K / R3 <= 0.5)) return false;
  return true;
}

}  // namespace

GluingConstants solve_constants(int N, GluingMode mode, double empirical_R0,
                                double empirical_K) {
  if (N < 1) throw PreconditionViolated("N must be >= 1");
  GluingConstants c;
  c.N = N;
  c.mode = mode;
  c.delta0 = kDelta0;
  c.a = 12.0 * 12.0 * 12.0 * 4.0 / (std::pow(kPi, 1.5) * std::sqrt(double(N)));
  c.Ka = 4.0 * c.a * std::sqrt(N + 1.0) * (kSqrtPi + 3.0 * c.a) + 3.0 * c.a;
  c.Kap = 4.0 * c.a * std::sqrt(N + 1.0) *
              (kSqrtPi + 3.0 * c.a * std::sqrt(2.0) + 2.0 * c.a * kSqrtPi) +
          3.0 * c.a * std::sqrt(2.0) + 2.0 * c.a * kSqrtPi;
  double K_formula = std::max(
      c.a * std::sqrt(2.0 * N / kPi),
      std::sqrt(N * c.Ka * c.Ka + binom2(N) * c.Kap * c.Kap) / kSqrtPi);

  if (mode == GluingMode::empirical) {
    if (!(empirical_R0 > 0))
      throw PreconditionViolated("empirical mode needs a user R0");
    c.R0 = empirical_R0;
    c.K = empirical_K > 0 ? empirical_K : c.a * std::sqrt(2.0 * N / kPi);
    c.eps_glue = max_eps(N, c.a, c.R0);
    return c;
  }

  c.K = K_formula;
  for (double R0 = 1; R0 <= double(1 << 20); R0 *= 2) {
    double eps = max_eps(N, c.a, R0);
    if (system_holds(N, c.a, c.K, R0, eps)) {
      c.R0 = R0;
      c.eps_glue = eps;
      return c;
    }
  }
  throw Infeasible("no dyadic R0 <= 2^20 satisfies the constants system");
}

CurveMap bump_curve(double a, int N) {
  if (!(a > 0)) throw PreconditionViolated("bump amplitude must be positive");
  if (N < 1) throw PreconditionViolated("N must be >= 1");
  std::vector<std::vector<Complex>> comps;
  comps.push_back({{0, 0}, {0, 0}, {0, 0}, {1, 0}});  // z^3
  for (int i = 0; i < N; ++i) comps.push_back({{a, 0}});
  return CurveMap::rational(std::move(comps));
}

CurveMap glue_once(const CurveMap& f, Complex p, double R, const GluingConstants& consts) {
  if (!(R >= consts.R0 + 1.0 - 1e-9))
    throw PreconditionViolated("glue radius must be at least R0 + 1");
  SupResult s = sup_spherical_derivative(f, Region::disk(p, R), R / 64);
  if (!(s.value < consts.delta0)) {
    std::ostringstream os;
    os << "sup |df| over D_R(p) is " << s.value << ", not below delta0 = " << consts.delta0;
    throw PreconditionViolated(os.str());
  }
  CMat U = unitary_to_origin(f, p).second;
  return f.with_bump({p, consts.a, U});
}

GluingReport verify_glue(const CurveMap& f, const CurveMap& g, Complex p, double R, double K,
                         double r_out, double delta0) {
  if (!(r_out > R)) throw PreconditionViolated("annulus must have r_out > R");
  GluingReport rep;
  rep.p = p;
  rep.R = R;
  rep.r_out = r_out;
  rep.K = K;
  rep.delta0 = delta0;

  SupResult s = sup_spherical_derivative(g, Region::disk(p, R), R / 64);
  rep.sup_disk = s.value;
  rep.cond1_pass = s.value >= delta0 * (1 - 1e-9) && s.value <= 2.0 / 3.0 + 1e-12;

  const int n_r = 40, n_th = 64;
  rep.n_circles = n_r;
  rep.n_rays = n_th;
  double r_in = 1.05 * R;
  // Outer half of the annulus in log scale: past the near-field transient.
  double fit_lo = std::sqrt(R * r_out);
  std::vector<double> lr2, lv2, lr3, lv3;
  for (int j = 0; j < n_r; ++j) {
    double r = r_in * std::pow(r_out / r_in, j / double(n_r - 1));
    double m2 = 0, m3 = 0;
    for (int i = 0; i < n_th; ++i) {
      double th = 2.0 * kPi * i / n_th;
      Complex z = p + std::polar(r, th);
      double dev = std::abs(spherical_derivative(g, z) - spherical_derivative(f, z));
      double dist = fs_distance(evaluate(f, z), evaluate(g, z));
      m2 = std::max(m2, dev);
      m3 = std::max(m3, dist);
    }
    double r3 = r * r * r;
    rep.cond2.sup_scaled = std::max(rep.cond2.sup_scaled, m2 * r3);
    rep.cond3.sup_scaled = std::max(rep.cond3.sup_scaled, m3 * r3);
    if (r >= fit_lo && m2 > 0 && m3 > 0) {
      lr2.push_back(std::log(r));
      lv2.push_back(std::log(m2));
      lr3.push_back(std::log(r));
      lv3.push_back(std::log(m3));
    }
  }
  auto fit_slope = [](const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() < 2) return 0.0;
    double n = double(x.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
      sx += x[i];
      sy += y[i];
      sxx += x[i] * x[i];
      sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
  };
  rep.cond2.slope = fit_slope(lr2, lv2);
  rep.cond3.slope = fit_slope(lr3, lv3);
  rep.cond2.bound_pass = rep.cond2.sup_scaled <= K * (1 + 1e-9);
  rep.cond3.bound_pass = rep.cond3.sup_scaled <= K * (1 + 1e-9);
  return rep;
}

// ---- tiling -----------------------------------------------------------

TilingPlan TilingPlan::spiral(double R, int half_width) {
  if (!(R > 0) || half_width < 0) throw PreconditionViolated("bad tiling plan");
  TilingPlan plan;
  plan.R = R;
  plan.order.push_back({0, 0});
  for (int ring = 1; ring <= half_width; ++ring) {
    std::vector<std::pair<int, int>> cells;
    for (int a = -ring; a <= ring; ++a)
      for (int b = -ring; b <= ring; ++b)
        if (std::max(std::abs(a), std::abs(b)) == ring) cells.push_back({a, b});
    std::sort(cells.begin(), cells.end(), [](auto u, auto v) {
      double au = std::atan2(double(u.second), double(u.first));
      double av = std::atan2(double(v.second), double(v.first));
      if (au != av) return au < av;
      return u < v;
    });
    plan.order.insert(plan.order.end(), cells.begin(), cells.end());
  }
  return plan;
}

TilingPlan TilingPlan::row_major(double R, int half_width) {
  if (!(R > 0) || half_width < 0) throw PreconditionViolated("bad tiling plan");
  TilingPlan plan;
  plan.R = R;
  for (int b = -half_width; b <= half_width; ++b)
    for (int a = -half_width; a <= half_width; ++a) plan.order.push_back({a, b});
  return plan;
}

Complex TilingPlan::center(size_t i) const {
  return 2.0 * R * Complex(order[i].first, order[i].second);
}

Region TilingPlan::tile(size_t i) const { return Region::square(center(i), 2.0 * R); }

Region TilingPlan::bounding_window() const {
  int m = 0;
  for (auto [a, b] : order) m = std::max({m, std::abs(a), std::abs(b)});
  return Region::square({0, 0}, (2 * m + 1) * 2.0 * R);
}

Region TilingPlan::interior_window() const {
  int m = 0;
  for (auto [a, b] : order) m = std::max({m, std::abs(a), std::abs(b)});
  int inner = std::max(2 * m - 1, 1);
  return Region::square({0, 0}, inner * 2.0 * R);
}

bool TilingPlan::interior(size_t i) const {
  std::set<std::pair<int, int>> cells(order.begin(), order.end());
  auto [a, b] = order[i];
  for (int da = -1; da <= 1; ++da)
    for (int db = -1; db <= 1; ++db)
      if (!cells.count({a + da, b + db})) return false;
  return true;
}

double tile_interference_bound(double R, double K, int first_ring) {
  if (!(R > 0) || !(K >= 0)) throw PreconditionViolated("bad interference parameters");
  // 8j tiles on ring j at boundary distance >= (2j-1)R; the summand behaves
  // like K/(j^2 R^3), so close the sum with a padded integral tail.
  const int J = 1000000;
  double sum = 0;
  for (int j = std::max(first_ring, 1); j <= J; ++j) {
    double d = (2.0 * j - 1.0) * R;
    sum += 8.0 * j * K / (d * d * d);
  }
  sum += 1.02 * K / (R * R * R * J);
  return sum;
}

MakeNondegResult make_nondegenerate(const CurveMap& f, double eps, double tau,
                                    const TilingPlan& plan, const GluingConstants& consts) {
  if (!(eps > 0)) throw PreconditionViolated("eps must be positive");
  if (!(tau > 0 && tau <= 1)) throw PreconditionViolated("tau must lie in (0, 1]");
  if (!(plan.R >= consts.R0 + 1.0 - 1e-9))
    throw PreconditionViolated("tile half-side must be at least R0 + 1");
  const double R = plan.R, res = R / 64;

  Region window = plan.bounding_window();
  double sup_window = sup_spherical_derivative(f, window, res).value;
  if (!(sup_window <= (1.0 - tau) * (1 + 1e-9) + 1e-12)) {
    std::ostringstream os;
    os << "sup |df| over the window is " << sup_window << ", above 1 - tau = " << 1.0 - tau;
    throw PreconditionViolated(os.str());
  }

  const double delta = std::min(consts.delta0, std::sqrt(eps));
  const double interior_bound = std::max(1.0 - tau / 2.0, 0.75);

  std::vector<TileLogEntry> log;
  int bumps = 0;
  CurveMap cur = f;
  for (size_t n = 0; n < plan.order.size(); ++n) {
    TileLogEntry e;
    e.index = static_cast<int>(n);
    e.alpha = plan.order[n].first;
    e.beta = plan.order[n].second;
    e.interior = plan.interior(n);
    Region tile = plan.tile(n);
    e.sup_f = sup_spherical_derivative(f, tile, res).value;
    if (e.sup_f >= delta) {
      e.kase = 1;
      e.sup_cur = e.sup_f;
    } else {
      e.sup_cur = sup_spherical_derivative(cur, tile, res).value;
      if (e.sup_cur >= consts.delta0) {
        e.kase = 2;
      } else {
        e.kase = 3;
        CMat U = unitary_to_origin(cur, plan.center(n)).second;
        cur = cur.with_bump({plan.center(n), consts.a, U});
        ++bumps;
      }
    }
    log.push_back(e);
  }

  // Postconditions on the final curve, interior tiles only; boundary tiles
  // lack the full neighbour ring the construction's estimates assume.
  QuadratureOptions eopts;
  eopts.rel_tol = 1e-7;
  eopts.abs_tol = 1e-10;
  for (TileLogEntry& e : log) {
    size_t n = static_cast<size_t>(e.index);
    Region tile = plan.tile(n);
    e.sup_after = sup_spherical_derivative(cur, tile, res).value;
    if (!e.interior) continue;
    EnergyEstimate before = energy(f, tile, eopts);
    EnergyEstimate after = energy(cur, tile, eopts);
    e.energy_before = before.value;
    e.energy_after = after.value;
    if (e.sup_after < delta / 2) {
      std::ostringstream os;
      os << "tile (" << e.alpha << "," << e.beta << ") sup " << e.sup_after
         << " fell below delta/2 = " << delta / 2;
      throw BoundViolated(os.str());
    }
    double tol = before.error_estimate + after.error_estimate + 1e-12 * tile.area();
    if (after.value < before.value - eps * tile.area() - tol) {
      std::ostringstream os;
      os << "tile (" << e.alpha << "," << e.beta << ") energy dropped by "
         << (before.value - after.value) / tile.area() << " per unit area, beyond eps = " << eps;
      throw BoundViolated(os.str());
    }
  }
  double interior_sup = sup_spherical_derivative(cur, plan.interior_window(), res).value;
  if (!(interior_sup <= interior_bound * (1 + 1e-9) + 1e-12)) {
    std::ostringstream os;
    os << "interior sup " << interior_sup << " exceeds " << interior_bound;
    throw BoundViolated(os.str());
  }
  int m = 0;
  for (auto [a, b] : plan.order) m = std::max({m, std::abs(a), std::abs(b)});
  return MakeNondegResult{std::move(cur),
                          std::move(log),
                          delta,
                          eps,
                          tau,
                          bumps,
                          interior_sup,
                          interior_bound,
                          tile_interference_bound(R, consts.K, m + 1)};
}

}  // namespace brody
