// Copyright (c) 2026 the brodylab authors
// SPDX-License-Identifier: Apache-2.0
//
// Independent reference implementations used only by tests. Everything here
// is written straight from closed forms or brute-force definitions, on
// purpose sharing no code with the library paths it checks.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.77245385090551602730;

// |d[1:z]| = 1/(sqrt(pi) (1+|z|^2))
inline double sph_linear(Complex z) { return 1.0 / (kSqrtPi * (1.0 + std::norm(z))); }

// |d[1:exp(cz)]| = c/(2 sqrt(pi) cosh(c x)) for real c > 0
inline double sph_exp(double c, Complex z) {
  return c / (2.0 * kSqrtPi * std::cosh(c * z.real()));
}

// |d[1:z^3]| = 3 r^2/(sqrt(pi) (1+r^6))
inline double sph_cubic(Complex z) {
  double r2 = std::norm(z);
  return 3.0 * r2 / (kSqrtPi * (1.0 + r2 * r2 * r2));
}

// Bump [z^3 : a : ... : a] with n trailing a's: 3 a sqrt(n) r^2/(sqrt(pi)(r^6 + n a^2))
inline double sph_bump(double a, int n, Complex z) {
  double r2 = std::norm(z);
  return 3.0 * a * std::sqrt(static_cast<double>(n)) * r2 /
         (kSqrtPi * (r2 * r2 * r2 + n * a * a));
}

// Kahan-compensated complex sum.
struct KahanC {
  Complex sum{0, 0}, comp{0, 0};
  void add(Complex x) {
    Complex y = x - comp;
    Complex t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

// Direct Eisenstein sums over the window |m|,|n| <= cut on full periods
// w1, w2. Truncation tail is O(cut^-2) relative; usable to ~1e-3 only.
inline void eisenstein_direct(Complex w1, Complex w2, int cut, Complex* g2, Complex* g3) {
  KahanC s4, s6;
  for (int m = -cut; m <= cut; ++m)
    for (int n = -cut; n <= cut; ++n) {
      if (!m && !n) continue;
      Complex w = static_cast<double>(m) * w1 + static_cast<double>(n) * w2;
      Complex iw2 = 1.0 / (w * w);
      Complex iw4 = iw2 * iw2;
      s4.add(iw4);
      s6.add(iw4 * iw2);
    }
  *g2 = 60.0 * s4.sum;
  *g3 = 140.0 * s6.sum;
}

// Brute-force wp and wp' by the defining lattice sums over |m|,|n| <= cut.
// Symmetric windows pair +/-w, so the tail is O(cut^-2); ~1e-3 accurate.
inline void wp_direct(Complex z, Complex w1, Complex w2, int cut, Complex* p, Complex* pp) {
  KahanC sp, spp;
  sp.add(1.0 / (z * z));
  spp.add(-2.0 / (z * z * z));
  for (int m = -cut; m <= cut; ++m)
    for (int n = -cut; n <= cut; ++n) {
      if (!m && !n) continue;
      Complex w = static_cast<double>(m) * w1 + static_cast<double>(n) * w2;
      Complex d = z - w;
      sp.add(1.0 / (d * d) - 1.0 / (w * w));
      spp.add(-2.0 / (d * d * d));
    }
  *p = sp.sum;
  *pp = spp.sum;
}

// Raw global holomorphic lift F, dF of a test curve (no rescaling).
using RawLift = std::function<void(Complex, std::vector<Complex>&, std::vector<Complex>&)>;

// log ||F||^2 for a raw lift.
inline double log_norm2(const RawLift& raw, Complex z) {
  std::vector<Complex> F, dF;
  raw(z, F, dF);
  double s = 0;
  for (Complex v : F) s += std::norm(v);
  return std::log(s);
}

// Spherical derivative squared straight from the definition
// (1/4pi) Laplacian of log||F||^2, five-point stencil.
inline double sph2_by_laplacian(const RawLift& raw, Complex z, double h = 1e-3) {
  double lap = (log_norm2(raw, z + Complex(h, 0)) + log_norm2(raw, z - Complex(h, 0)) +
                log_norm2(raw, z + Complex(0, h)) + log_norm2(raw, z - Complex(0, h)) -
                4.0 * log_norm2(raw, z)) /
               (h * h);
  return lap / (4.0 * kPi);
}

// Disk energy by the boundary identity
//   A(t) = (t / 2 pi) Int_0^{2pi} Re(e^{i th} <F', F> / |F|^2) d th,
// trapezoid rule (periodic integrand, spectrally accurate). Valid for
// entire nonvanishing global lifts.
inline double disk_energy_boundary(const RawLift& raw, double t, int nodes = 2048) {
  double acc = 0;
  std::vector<Complex> F, dF;
  for (int i = 0; i < nodes; ++i) {
    double th = 2.0 * kPi * i / nodes;
    Complex z = std::polar(t, th);
    raw(z, F, dF);
    Complex num(0, 0);
    double den = 0;
    for (size_t k = 0; k < F.size(); ++k) {
      num += dF[k] * std::conj(F[k]);
      den += std::norm(F[k]);
    }
    acc += (std::polar(1.0, th) * num / den).real();
  }
  return t * acc / nodes;
}

// Midpoint-rule energy of |df|^2 over an axis-aligned square, n x n cells.
inline double square_energy_riemann(const std::function<double(Complex)>& df, Complex corner,
                                    double side, int n) {
  double h = side / n, acc = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Complex z = corner + Complex((i + 0.5) * h, (j + 0.5) * h);
      double v = df(z);
      acc += v * v;
    }
  return acc * h * h;
}

// Fubini-Study length of the affine segment 0 -> w in a projective line,
// integrating ds = |dz|/(sqrt(pi)(1+|z|^2)) numerically (midpoint rule).
inline double fs_segment_length(double w, int n = 200000) {
  double acc = 0;
  for (int i = 0; i < n; ++i) {
    double t = (i + 0.5) / n;
    acc += 1.0 / (1.0 + t * t * w * w);
  }
  return w * acc / (n * kSqrtPi);
}

}  // namespace oracle
