// Copyright (c) 2026 the brodylab authors
// SPDX-License-Identifier: Apache-2.0
#include "brody/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "brody/parallel.hpp"

namespace brody {

namespace {

GaussLegendre make_gl(int n) {
  GaussLegendre gl;
  gl.nodes.resize(n);
  gl.weights.resize(n);
  for (int k = 0; k < (n + 1) / 2; ++k) {
    double x = std::cos(kPi * (k + 0.75) / (n + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    gl.nodes[k] = -x;
    gl.weights[k] = w;
    gl.nodes[n - 1 - k] = x;
    gl.weights[n - 1 - k] = w;
  }
  return gl;
}

std::map<int, GaussLegendre> g_gl_cache;
std::mutex g_gl_mutex;

struct Panel1 {
  double a, b;
  int depth;
};

struct Tile2 {
  double x0, x1, y0, y1;
  int depth;
};

double gl_panel(const Fn1& f, double a, double b, const GaussLegendre& gl, long* evals) {
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) s += gl.weights[i] * f(mid + half * gl.nodes[i]);
  *evals += static_cast<long>(gl.nodes.size());
  return s * half;
}

double gl_tile(const Fn2& f, const Tile2& t, const GaussLegendre& gl, long* evals) {
  double mx = 0.5 * (t.x0 + t.x1), hx = 0.5 * (t.x1 - t.x0);
  double my = 0.5 * (t.y0 + t.y1), hy = 0.5 * (t.y1 - t.y0);
  double s = 0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    double x = mx + hx * gl.nodes[i];
    double row = 0;
    for (std::size_t j = 0; j < gl.nodes.size(); ++j)
      row += gl.weights[j] * f(x, my + hy * gl.nodes[j]);
    s += gl.weights[i] * row;
  }
  *evals += static_cast<long>(gl.nodes.size() * gl.nodes.size());
  return s * hx * hy;
}

}  // namespace

const GaussLegendre& gauss_legendre(int order) {
  if (order < 2) order = 2;
  std::lock_guard<std::mutex> lock(g_gl_mutex);
  auto it = g_gl_cache.find(order);
  if (it == g_gl_cache.end()) it = g_gl_cache.emplace(order, make_gl(order)).first;
  return it->second;
}

QuadResult integrate_1d(const Fn1& f, double a, double b, const QuadratureOptions& opts) {
  const GaussLegendre& gl = gauss_legendre(opts.order);
  QuadResult res;
  if (a == b) return res;
  std::vector<Panel1> stack{{a, b, 0}};
  while (!stack.empty()) {
    Panel1 p = stack.back();
    stack.pop_back();
    double coarse = gl_panel(f, p.a, p.b, gl, &res.evals);
    double mid = 0.5 * (p.a + p.b);
    double fine = gl_panel(f, p.a, mid, gl, &res.evals) + gl_panel(f, mid, p.b, gl, &res.evals);
    double delta = std::abs(fine - coarse);
    double tol = std::max(opts.rel_tol * std::abs(fine), opts.abs_tol * (p.b - p.a) / (b - a));
    if (delta <= tol || p.depth >= opts.max_depth) {
      if (delta > tol)
        throw QuadratureNonConvergent("1d panel at max depth still moving by " +
                                      std::to_string(delta));
      res.value += fine;
      res.error_estimate += delta;
      res.depth = std::max(res.depth, p.depth);
    } else {
      stack.push_back({mid, p.b, p.depth + 1});
      stack.push_back({p.a, mid, p.depth + 1});
    }
  }
  return res;
}

namespace {

// Sequential adaptive driver for one top-level tile.
QuadResult integrate_tile(const Fn2& f, Tile2 root, double total_area,
                          const QuadratureOptions& opts) {
  const GaussLegendre& gl = gauss_legendre(opts.order);
  QuadResult res;
  std::vector<Tile2> stack{root};
  while (!stack.empty()) {
    Tile2 t = stack.back();
    stack.pop_back();
    double coarse = gl_tile(f, t, gl, &res.evals);
    double mx = 0.5 * (t.x0 + t.x1), my = 0.5 * (t.y0 + t.y1);
    Tile2 q[4] = {{t.x0, mx, t.y0, my, t.depth + 1},
                  {mx, t.x1, t.y0, my, t.depth + 1},
                  {t.x0, mx, my, t.y1, t.depth + 1},
                  {mx, t.x1, my, t.y1, t.depth + 1}};
    double fine = 0;
    for (const Tile2& c : q) fine += gl_tile(f, c, gl, &res.evals);
    double delta = std::abs(fine - coarse);
    double area = (t.x1 - t.x0) * (t.y1 - t.y0);
    double tol = std::max(opts.rel_tol * std::abs(fine), opts.abs_tol * area / total_area);
    if (delta <= tol || t.depth >= opts.max_depth) {
      if (delta > tol)
        throw QuadratureNonConvergent("tile at max depth still moving by " +
                                      std::to_string(delta));
      res.value += fine;
      res.error_estimate += delta;
      res.depth = std::max(res.depth, t.depth);
    } else {
      for (int k = 3; k >= 0; --k) stack.push_back(q[k]);
    }
  }
  return res;
}

QuadResult integrate_tiles(const Fn2& f, const std::vector<Tile2>& roots, double total_area,
                           const QuadratureOptions& opts) {
  std::vector<QuadResult> parts(roots.size());
  auto work = [&](std::size_t i) { parts[i] = integrate_tile(f, roots[i], total_area, opts); };
  if (opts.parallel) {
    parallel_for(roots.size(), work);
  } else {
    for (std::size_t i = 0; i < roots.size(); ++i) work(i);
  }
  std::vector<double> vals(parts.size());
  QuadResult res;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    vals[i] = parts[i].value;
    res.error_estimate += parts[i].error_estimate;
    res.evals += parts[i].evals;
    res.depth = std::max(res.depth, parts[i].depth);
  }
  res.value = tree_sum(vals);
  return res;
}

}  // namespace

QuadResult integrate_rect(const Fn2& f, double x0, double x1, double y0, double y1,
                          const QuadratureOptions& opts) {
  if (x0 >= x1 || y0 >= y1) return {};
  double mx = 0.5 * (x0 + x1), my = 0.5 * (y0 + y1);
  std::vector<Tile2> roots = {{x0, mx, y0, my, 1},
                              {mx, x1, y0, my, 1},
                              {x0, mx, my, y1, 1},
                              {mx, x1, my, y1, 1}};
  return integrate_tiles(f, roots, (x1 - x0) * (y1 - y0), opts);
}

QuadResult integrate_region(const std::function<double(Complex)>& f, const Region& region,
                            const QuadratureOptions& opts) {
  if (region.kind == Region::Kind::square) {
    double h = region.size / 2;
    Fn2 g = [&](double x, double y) { return f(Complex(x, y)); };
    return integrate_rect(g, region.center.real() - h, region.center.real() + h,
                          region.center.imag() - h, region.center.imag() + h, opts);
  }
  double R = region.size;
  if (R <= 0) return {};
  Complex c = region.center;
  Fn2 g = [&](double r, double th) { return r * f(c + std::polar(r, th)); };
  // Dyadic radial panels keep tile aspect sane across decades of radius.
  std::vector<Tile2> roots;
  double r0 = 0.0, r1 = std::min(1.0, R);
  for (;;) {
    roots.push_back({r0, r1, 0.0, kPi, 1});
    roots.push_back({r0, r1, kPi, 2 * kPi, 1});
    if (r1 >= R) break;
    r0 = r1;
    r1 = std::min(2 * r1, R);
  }
  return integrate_tiles(g, roots, kPi * R * R, opts);
}

}  // namespace brody
