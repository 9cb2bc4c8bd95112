// Copyright (c) 2026 the brodylab authors
// SPDX-License-Identifier: Apache-2.0
#include "brody/nondegeneracy.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "brody/parallel.hpp"

namespace brody {

namespace {

bool region_contains_region(const Region& outer, const Region& inner) {
  Complex d = inner.center - outer.center;
  double hx = std::abs(d.real()), hy = std::abs(d.imag());
  if (outer.kind == Region::Kind::square) {
    double H = outer.size / 2;
    double r = inner.half_extent();  // disk radius or square half-side
    return hx + r <= H + 1e-12 && hy + r <= H + 1e-12;
  }
  if (inner.kind == Region::Kind::disk)
    return std::abs(d) + inner.size <= outer.size + 1e-12;
  double h = inner.size / 2;  // square corners must reach inside the disk
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      if (std::abs(d + Complex(sx * h, sy * h)) > outer.size + 1e-12) return false;
  return true;
}

}  // namespace

NondegeneracyCertificate nondegeneracy_profile(const CurveMap& f, double R,
                                              const std::vector<Region>& windows,
                                              double center_step, double inner_resolution) {
  if (!(R > 0)) throw PreconditionViolated("R must be positive");
  if (windows.empty()) throw PreconditionViolated("need at least one window");
  for (size_t i = 1; i < windows.size(); ++i)
    if (!region_contains_region(windows[i], windows[i - 1]))
      throw PreconditionViolated("windows must be nested");

  NondegeneracyCertificate cert;
  cert.R = R;
  cert.center_step = center_step > 0 ? center_step : R / 8;
  cert.inner_resolution = inner_resolution > 0 ? inner_resolution : R / 64;
  const double cs = cert.center_step, ir = cert.inner_resolution;

  for (const Region& window : windows) {
    // Candidate centers on the absolute lattice cs*(i, j); nested windows
    // then sample nested center sets.
    std::vector<Complex> centers;
    double hw = window.half_extent();
    long ix0 = std::lround(std::floor((window.center.real() - hw) / cs)) - 1;
    long ix1 = std::lround(std::ceil((window.center.real() + hw) / cs)) + 1;
    long iy0 = std::lround(std::floor((window.center.imag() - hw) / cs)) - 1;
    long iy1 = std::lround(std::ceil((window.center.imag() + hw) / cs)) + 1;
    for (long j = iy0; j <= iy1; ++j)
      for (long i = ix0; i <= ix1; ++i) {
        Complex a(i * cs, j * cs);
        if (window.contains(a)) centers.push_back(a);
      }
    if (centers.empty()) centers.push_back(window.center);

    // One shared |df| grid covering every disk D_R(a); per-center sups are
    // then plain masked maxima over cached values.
    double x0 = centers[0].real(), x1 = x0, y0 = centers[0].imag(), y1 = y0;
    for (Complex a : centers) {
      x0 = std::min(x0, a.real());
      x1 = std::max(x1, a.real());
      y0 = std::min(y0, a.imag());
      y1 = std::max(y1, a.imag());
    }
    long gx0 = std::lround(std::floor((x0 - R) / ir));
    long gx1 = std::lround(std::ceil((x1 + R) / ir));
    long gy0 = std::lround(std::floor((y0 - R) / ir));
    long gy1 = std::lround(std::ceil((y1 + R) / ir));
    size_t nx = static_cast<size_t>(gx1 - gx0 + 1), ny = static_cast<size_t>(gy1 - gy0 + 1);
    std::vector<double> grid(nx * ny);
    parallel_for(ny, [&](size_t row) {
      long j = gy0 + static_cast<long>(row);
      for (size_t col = 0; col < nx; ++col) {
        long i = gx0 + static_cast<long>(col);
        grid[row * nx + col] = spherical_derivative(f, Complex(i * ir, j * ir));
      }
    });

    NondegPoint pt;
    pt.window = window;
    pt.delta_hat = std::numeric_limits<double>::infinity();
    for (Complex a : centers) {
      long cj0 = std::lround(std::ceil((a.imag() - R) / ir)) - gy0;
      long cj1 = std::lround(std::floor((a.imag() + R) / ir)) - gy0;
      double sup = 0;
      for (long j = std::max(cj0, 0L); j <= std::min(cj1, static_cast<long>(ny) - 1); ++j) {
        double dy = (gy0 + j) * ir - a.imag();
        double half = R * R - dy * dy;
        if (half < 0) continue;
        double hx = std::sqrt(half);
        long i0 = std::max(static_cast<long>(std::ceil((a.real() - hx) / ir)) - gx0, 0L);
        long i1 = std::min(static_cast<long>(std::floor((a.real() + hx) / ir)) - gx0,
                           static_cast<long>(nx) - 1);
        const double* rowp = grid.data() + j * nx;
        for (long i = i0; i <= i1; ++i) sup = std::max(sup, rowp[i]);
      }
      if (sup < pt.delta_hat) {
        pt.delta_hat = sup;
        pt.argmin = a;
      }
    }
    pt.refined_sup =
        sup_spherical_derivative(f, Region::disk(pt.argmin, R), ir).value;
    cert.trend.push_back(pt);
  }
  return cert;
}

const char* to_string(NondegVerdict v) {
  switch (v) {
    case NondegVerdict::nondegenerate_at_scale:
      return "nondegenerate-at-scale";
    case NondegVerdict::degenerate_trend:
      return "degenerate-trend";
    default:
      return "inconclusive";
  }
}

NondegVerdict classify(const NondegeneracyCertificate& cert, double threshold) {
  if (!(threshold > 0)) throw PreconditionViolated("threshold must be positive");
  if (cert.trend.empty()) throw PreconditionViolated("empty certificate");
  std::vector<double> d;
  for (const NondegPoint& p : cert.trend) d.push_back(p.delta_hat);
  double last = d.back();
  if (last <= 1e-14) return NondegVerdict::degenerate_trend;
  if (d.front() > 2.0 * last) return NondegVerdict::degenerate_trend;
  if (d.size() >= 2 && last >= threshold) {
    double prev = d[d.size() - 2];
    double slope = std::abs(last - prev) / std::max(prev, 1e-300);
    if (slope < 0.05) return NondegVerdict::nondegenerate_at_scale;
  }
  return NondegVerdict::inconclusive;
}

}  // namespace brody
