// Copyright (c) 2026 the brodylab authors
// SPDX-License-Identifier: Apache-2.0
#include "brody/energy.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "brody/parallel.hpp"

namespace brody {

namespace {

std::function<double(Complex)> density(const CurveMap& f) {
  return [&f](Complex z) {
    double s = spherical_derivative(f, z);
    return s * s;
  };
}

// Search-phase quadrature: much looser than the final evaluation, since the
// translate landscape is smooth and only the argmax matters.
QuadratureOptions search_opts(const QuadratureOptions& opts) {
  QuadratureOptions s = opts;
  s.rel_tol = std::max(opts.rel_tol, 1e-6);
  s.abs_tol = std::max(opts.abs_tol, 1e-9);
  s.parallel = false;
  return s;
}

// Largest |a - window.center| (disk window) or per-axis offset (square
// window) keeping the recentered shape inside the window; negative if the
// shape cannot fit at all.
double admissible_radius(const Region& shape, const Region& window) {
  double h = shape.half_extent();
  if (window.kind == Region::Kind::square) return window.size / 2 - h;
  // Disk window: a square shape reaches its corner at h*sqrt(2).
  double reach = shape.kind == Region::Kind::square ? h * std::sqrt(2.0) : h;
  return window.size - reach;
}

bool translate_admissible(Complex a, const Region& window, double limit) {
  if (window.kind == Region::Kind::square)
    return std::abs(a.real() - window.center.real()) <= limit + 1e-12 &&
           std::abs(a.imag() - window.center.imag()) <= limit + 1e-12;
  return std::abs(a - window.center) <= limit + 1e-12;
}

double golden_max(const std::function<double(double)>& g, double lo, double hi, double tol) {
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
  double f1 = g(x1), f2 = g(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = g(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = g(x1);
    }
  }
  return f1 > f2 ? x1 : x2;
}

}  // namespace

EnergyEstimate energy(const CurveMap& f, const Region& region, const QuadratureOptions& opts) {
  QuadResult q = integrate_region(density(f), region, opts);
  EnergyEstimate e;
  e.value = q.value;
  e.error_estimate = q.error_estimate;
  e.region = region;
  e.order = opts.order;
  e.depth = q.depth;
  e.evals = q.evals;
  return e;
}

TranslateSup sup_translate_energy(const CurveMap& f, const Region& shape, const Region& window,
                                  const QuadratureOptions& opts) {
  double limit = admissible_radius(shape, window);
  if (limit < 0) throw WindowTooSmall("shape does not fit inside the window");
  double step = shape.size / 4.0;
  QuadratureOptions coarse = search_opts(opts);

  auto value_at = [&](Complex a) {
    return energy(f, shape.translated(a - shape.center), coarse).value;
  };

  // Symmetric grid about the window center, clipped to the admissible set.
  int n = static_cast<int>(std::floor(limit / step + 1e-12));
  std::vector<Complex> grid;
  for (int j = -n; j <= n; ++j)
    for (int i = -n; i <= n; ++i) {
      Complex a = window.center + Complex(i * step, j * step);
      if (translate_admissible(a, window, limit)) grid.push_back(a);
    }
  if (grid.empty()) grid.push_back(window.center);

  std::vector<double> vals(grid.size());
  parallel_for(grid.size(), [&](size_t i) { vals[i] = value_at(grid[i]); });
  size_t best = 0;
  for (size_t i = 1; i < vals.size(); ++i)
    if (vals[i] > vals[best]) best = i;

  // Per-coordinate golden-section refinement around the best grid point,
  // clamped to the admissible set.
  Complex a = grid[best];
  auto clamp_adm = [&](Complex c) {
    if (window.kind == Region::Kind::square) {
      double x = std::clamp(c.real(), window.center.real() - limit,
                            window.center.real() + limit);
      double y = std::clamp(c.imag(), window.center.imag() - limit,
                            window.center.imag() + limit);
      return Complex(x, y);
    }
    Complex d = c - window.center;
    double r = std::abs(d);
    return r <= limit ? c : window.center + d * (limit / (r + 1e-300));
  };
  double tol = step * 1e-2;
  double x = golden_max(
      [&](double t) { return value_at(clamp_adm(Complex(t, a.imag()))); },
      a.real() - step, a.real() + step, tol);
  a = clamp_adm(Complex(x, a.imag()));
  double y = golden_max(
      [&](double t) { return value_at(clamp_adm(Complex(a.real(), t))); },
      a.imag() - step, a.imag() + step, tol);
  a = clamp_adm(Complex(a.real(), y));

  TranslateSup out;
  out.grid_step = step;
  EnergyEstimate at_refined = energy(f, shape.translated(a - shape.center), opts);
  EnergyEstimate at_grid = energy(f, shape.translated(grid[best] - shape.center), opts);
  if (at_refined.value >= at_grid.value) {
    out.value = at_refined.value;
    out.argmax = a;
    out.best = at_refined;
  } else {
    out.value = at_grid.value;
    out.argmax = grid[best];
    out.best = at_grid;
  }
  return out;
}

RhoEstimate rho_estimate(const CurveMap& f, const FolnerSequence& folner, const Region& window,
                         const QuadratureOptions& opts) {
  RhoEstimate out;
  for (double size : folner.sizes) {
    Region shape{folner.shape, {0, 0}, size};
    if (admissible_radius(shape, window) < 0)
      throw WindowTooSmall("Folner shape does not fit inside the window");
  }
  for (size_t i = 0; i < folner.sizes.size(); ++i) {
    Region shape = folner.region_at(i);
    TranslateSup s = sup_translate_energy(f, shape, window, opts);
    RhoPoint p;
    p.size = folner.sizes[i];
    p.area = shape.area();
    p.sup_energy = s.value;
    p.rho_hat = s.value / p.area;
    p.argmax = s.argmax;
    out.points.push_back(p);
  }
  size_t k = out.points.size();
  if (k >= 2) {
    double a = out.points[k - 2].rho_hat, b = out.points[k - 1].rho_hat;
    double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    out.last_rel_change = std::abs(b - a) / scale;
    out.stabilized = out.last_rel_change <= 0.02;
  }
  return out;
}

double rho_elliptic(const CurveMap& f, const Lattice& lattice, const QuadratureOptions& opts) {
  Complex P1 = lattice.period1(), P2 = lattice.period2();
  for (int j = 0; j < 6; ++j) {
    Complex z = (0.23 + 0.11 * j) * lattice.basis1() + (0.17 + 0.07 * j) * lattice.basis2();
    for (Complex per : {P1, P2}) {
      if (fs_distance(evaluate(f, z), evaluate(f, z + per)) > 1e-8)
        throw NotPeriodic("curve is not periodic for the given lattice");
    }
  }
  // Mean over one cell: z = u P1 + v P2 on the unit square; the Jacobian
  // equals the cell area and cancels against the 1/area normalization.
  auto dens = density(f);
  QuadResult q = integrate_rect(
      [&](double u, double v) { return dens(u * P1 + v * P2); }, 0, 1, 0, 1, opts);
  return q.value;
}

// ---- radial profile ---------------------------------------------------

double NsaProfile::phi(double u) const {
  if (u <= 0) return 0;
  auto dens = density(f_);
  QuadratureOptions o = opts_;
  o.rel_tol = std::max(opts_.rel_tol * 0.1, 1e-12);
  o.parallel = false;
  QuadResult q = integrate_1d(
      [&](double th) { return dens(u * Complex(std::cos(th), std::sin(th))); }, 0,
      2 * kPi, o);
  return u * q.value;
}

NsaProfile::NsaProfile(const CurveMap& f, double r_max, const QuadratureOptions& opts)
    : f_(f), opts_(opts), r_max_(r_max) {
  if (!(r_max > 0)) throw PreconditionViolated("r_max must be positive");
  std::vector<double> cuts{0.0};
  for (double t = 1.0; t < r_max; t *= 2) cuts.push_back(std::min(t, r_max));
  if (cuts.back() < r_max) cuts.push_back(r_max);

  const GaussLegendre& gl = gauss_legendre(32);
  auto panel_quad = [&](double lo, double hi, double* i1, double* i2) {
    double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo), s1 = 0, s2 = 0;
    for (size_t i = 0; i < gl.nodes.size(); ++i) {
      double u = c + h * gl.nodes[i];
      double p = phi(u) * gl.weights[i] * h;
      s1 += p;
      s2 += p * std::log(std::max(1.0, u));
    }
    *i1 = s1;
    *i2 = s2;
  };

  // Crude scale for the relative acceptance test.
  double scale = 0;
  for (size_t k = 0; k + 1 < cuts.size(); ++k) {
    double i1, i2;
    panel_quad(cuts[k], cuts[k + 1], &i1, &i2);
    scale += std::abs(i1);
  }
  scale = std::max(scale, 1e-12);

  std::function<void(double, double, double, double, int)> build =
      [&](double lo, double hi, double i1, double i2, int depth) {
        double a1, a2, b1, b2, mid = 0.5 * (lo + hi);
        panel_quad(lo, mid, &a1, &a2);
        panel_quad(mid, hi, &b1, &b2);
        bool ok = std::abs(i1 - (a1 + b1)) <= std::max(opts_.rel_tol * scale, opts_.abs_tol) &&
                  std::abs(i2 - (a2 + b2)) <= std::max(opts_.rel_tol * scale, opts_.abs_tol);
        if (ok || depth >= opts_.max_depth) {
          if (!ok)
            throw QuadratureNonConvergent("radial profile did not converge at max depth");
          panels_.push_back({lo, mid, a1, a2, 0, 0});
          panels_.push_back({mid, hi, b1, b2, 0, 0});
          return;
        }
        build(lo, mid, a1, a2, depth + 1);
        build(mid, hi, b1, b2, depth + 1);
      };
  for (size_t k = 0; k + 1 < cuts.size(); ++k) {
    double i1, i2;
    panel_quad(cuts[k], cuts[k + 1], &i1, &i2);
    build(cuts[k], cuts[k + 1], i1, i2, 0);
  }
  double c1 = 0, c2 = 0;
  for (Panel& p : panels_) {
    c1 += p.i1;
    c2 += p.i2;
    p.cum1 = c1;
    p.cum2 = c2;
  }
}

void NsaProfile::partial(double r, double* p1, double* p2) const {
  *p1 = 0;
  *p2 = 0;
  if (r <= 0) return;
  r = std::min(r, r_max_);
  // Panels are in increasing order; accumulate up to the one containing r.
  size_t i = 0;
  double c1 = 0, c2 = 0;
  while (i < panels_.size() && panels_[i].hi <= r) {
    c1 = panels_[i].cum1;
    c2 = panels_[i].cum2;
    ++i;
  }
  if (i < panels_.size() && panels_[i].lo < r) {
    const GaussLegendre& gl = gauss_legendre(32);
    double lo = panels_[i].lo, c = 0.5 * (lo + r), h = 0.5 * (r - lo);
    for (size_t k = 0; k < gl.nodes.size(); ++k) {
      double u = c + h * gl.nodes[k];
      double p = phi(u) * gl.weights[k] * h;
      c1 += p;
      c2 += p * std::log(std::max(1.0, u));
    }
  }
  *p1 = c1;
  *p2 = c2;
}

double NsaProfile::A(double t) const {
  double p1, p2;
  partial(t, &p1, &p2);
  return p1;
}

double NsaProfile::T(double r) const {
  if (r < 1) throw PreconditionViolated("characteristic needs r >= 1");
  double p1, p2;
  partial(r, &p1, &p2);
  return std::log(r) * p1 - p2;
}

double nsa_characteristic(const CurveMap& f, double r, const QuadratureOptions& opts) {
  if (r < 1) throw PreconditionViolated("characteristic needs r >= 1");
  return NsaProfile(f, r, opts).T(r);
}

RhoNsaEstimate rho_nsa_estimate(const CurveMap& f, double r_max,
                                const QuadratureOptions& opts) {
  if (r_max < 4) throw PreconditionViolated("rho_nsa_estimate needs r_max >= 4");
  NsaProfile prof(f, r_max, opts);
  RhoNsaEstimate out;
  out.r_lo = r_max / 4;
  out.r_hi = r_max;
  const int n = 33;
  for (int i = 0; i < n; ++i) {
    double r = out.r_lo * std::pow(out.r_hi / out.r_lo, i / double(n - 1));
    double v = 2.0 * prof.T(r) / (kPi * r * r);
    if (v > out.value) {
      out.value = v;
      out.r_at_max = r;
    }
  }
  return out;
}

FolnerAgreement folner_agreement(const CurveMap& f, const Region& window,
                                 const QuadratureOptions& opts) {
  // Matched-area pairs: disk radius r and square side sqrt(pi) r, the
  // largest chosen so both shapes fit the window, with three halvings below.
  double H = window.half_extent();
  double r_top = 0.9 * (window.kind == Region::Kind::square
                            ? H
                            : H * std::sqrt(2.0 / kPi));
  std::vector<double> radii;
  for (double r = r_top / 8; r <= r_top * 1.0001; r *= 2) radii.push_back(r);

  std::vector<double> sides;
  for (double r : radii) sides.push_back(std::sqrt(kPi) * r);
  FolnerSequence disks{Region::Kind::disk, radii};
  FolnerSequence squares{Region::Kind::square, sides};
  RhoEstimate rd = rho_estimate(f, disks, window, opts);
  RhoEstimate rs = rho_estimate(f, squares, window, opts);

  FolnerAgreement out;
  for (size_t i = 0; i < radii.size(); ++i) {
    FolnerPair p;
    p.area = kPi * radii[i] * radii[i];
    p.rho_disk = rd.points[i].rho_hat;
    p.rho_square = rs.points[i].rho_hat;
    double scale = std::max({p.rho_disk, p.rho_square, 1e-300});
    p.rel_disagreement = std::abs(p.rho_disk - p.rho_square) / scale;
    out.pairs.push_back(p);
    out.max_rel_disagreement = std::max(out.max_rel_disagreement, p.rel_disagreement);
  }
  return out;
}

}  // namespace brody
