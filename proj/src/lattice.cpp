// Copyright (c) 2026 the brodylab authors
// SPDX-License-Identifier: Apache-2.0
#include "brody/lattice.hpp"

#include <cmath>

namespace brody {

namespace {

constexpr int kLaurentTerms = 60;  // c_k for k = 2 .. kLaurentTerms + 1
constexpr int kQTerms = 40;

long long divisor_power_sum(int n, int p) {
  long long s = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    long long t = 1;
    for (int j = 0; j < p; ++j) t *= d;
    s += t;
  }
  return s;
}

struct KahanC {
  Complex sum{0, 0}, comp{0, 0};
  void add(Complex x) {
    Complex y = x - comp;
    Complex t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

void lagrange_reduce(Complex& u, Complex& v) {
  if (std::abs(u) > std::abs(v)) std::swap(u, v);
  for (int it = 0; it < 64; ++it) {
    double m = std::round((v.real() * u.real() + v.imag() * u.imag()) / std::norm(u));
    v -= m * u;
    if (std::abs(v) >= std::abs(u)) break;
    std::swap(u, v);
  }
  if (u.real() * v.imag() - u.imag() * v.real() < 0) v = -v;
}

}  // namespace

Lattice::Lattice(Complex omega1, Complex omega2) : omega1_(omega1), omega2_(omega2) {
  Complex w1 = 2.0 * omega1, w2 = 2.0 * omega2;
  double orient = w1.real() * w2.imag() - w1.imag() * w2.real();
  if (!(std::abs(orient) > 0))
    throw PreconditionViolated("lattice generators are collinear");
  if (orient < 0) throw PreconditionViolated("require Im(omega2/omega1) > 0");
  area_ = orient;

  b1_ = w1;
  b2_ = w2;
  lagrange_reduce(b1_, b2_);
  lambda1_ = std::abs(b1_);
  mu_ = lambda1_;

  double det = b1_.real() * b2_.imag() - b1_.imag() * b2_.real();
  inv_[0] = b2_.imag() / det;
  inv_[1] = -b2_.real() / det;
  inv_[2] = -b1_.imag() / det;
  inv_[3] = b1_.real() / det;

  // g2, g3 via E4/E6 at tau = b2/b1 (|q| <= exp(-pi sqrt(3)) after reduction).
  Complex tau = b2_ / b1_;
  Complex q = std::exp(Complex(0, 2 * kPi) * tau);
  KahanC e4, e6;
  Complex qn = 1;
  for (int n = 1; n <= kQTerms; ++n) {
    qn *= q;
    e4.add(static_cast<double>(divisor_power_sum(n, 3)) * qn);
    e6.add(static_cast<double>(divisor_power_sum(n, 5)) * qn);
  }
  Complex E4 = 1.0 + 240.0 * e4.sum;
  Complex E6 = 1.0 - 504.0 * e6.sum;
  double pi4 = kPi * kPi * kPi * kPi;
  Complex b1p4 = b1_ * b1_ * b1_ * b1_;
  g2_ = (4.0 * pi4 / 3.0) * E4 / b1p4;
  g3_ = (8.0 * pi4 * kPi * kPi / 27.0) * E6 / (b1p4 * b1_ * b1_);

  // Laurent coefficients of the unit-normalized lattice (scale-free):
  //   wp(s) = s^-2 + sum_{k>=2} c_k s^{2k-2},
  //   c_2 = g2/20, c_3 = g3/28,
  //   c_k = 3/((2k+1)(k-3)) sum_{m=2}^{k-2} c_m c_{k-m}.
  Complex g2u = g2_ * (mu_ * mu_ * mu_ * mu_);
  Complex g3u = g3_ * (mu_ * mu_ * mu_ * mu_ * mu_ * mu_);
  coeff_.assign(kLaurentTerms, Complex(0, 0));
  coeff_[0] = g2u / 20.0;
  coeff_[1] = g3u / 28.0;
  for (int k = 4; k < kLaurentTerms + 2; ++k) {
    Complex acc(0, 0);
    for (int m = 2; m <= k - 2; ++m) acc += coeff_[m - 2] * coeff_[k - m - 2];
    coeff_[k - 2] = 3.0 / ((2.0 * k + 1.0) * (k - 3.0)) * acc;
  }
}

Lattice Lattice::hexagonal(double scale) {
  if (!(scale > 0)) throw PreconditionViolated("hexagonal lattice scale must be positive");
  return Lattice(Complex(scale, 0), scale * std::polar(1.0, kPi / 3.0));
}

Complex Lattice::reduce(Complex z, Complex* nearest) const {
  double x = inv_[0] * z.real() + inv_[1] * z.imag();
  double y = inv_[2] * z.real() + inv_[3] * z.imag();
  double m0 = std::round(x), n0 = std::round(y);
  Complex best_p = m0 * b1_ + n0 * b2_;
  Complex best_s = z - best_p;
  double best = std::norm(best_s);
  for (int dm = -1; dm <= 1; ++dm)
    for (int dn = -1; dn <= 1; ++dn) {
      if (!dm && !dn) continue;
      Complex p = (m0 + dm) * b1_ + (n0 + dn) * b2_;
      Complex s = z - p;
      double d = std::norm(s);
      if (d < best) {
        best = d;
        best_s = s;
        best_p = p;
      }
    }
  if (nearest) *nearest = best_p;
  return best_s;
}

Lattice::Factored Lattice::factored(Complex s) const {
  // Horner in u = sig^2 over the unit lattice, sig = s/mu:
  //   A(sig)  = 1 + sum_{k>=2} c_k sig^{2k}
  //   B(sig)  = -2 + sum_{k>=2} (2k-2) c_k sig^{2k}
  //   A'(sig) = sum 2k c_k sig^{2k-1},  B'(sig) = sum (2k-2) 2k c_k sig^{2k-1}
  Complex sig = s / mu_;
  Complex u = sig * sig;
  Complex hA(0, 0), hdA(0, 0), hB(0, 0), hdB(0, 0);
  for (int k = kLaurentTerms + 1; k >= 2; --k) {
    Complex c = coeff_[k - 2];
    hA = hA * u + c;
    hdA = hdA * u + 2.0 * k * c;
    hB = hB * u + (2.0 * k - 2.0) * c;
    hdB = hdB * u + (2.0 * k - 2.0) * (2.0 * k) * c;
  }
  Complex u2 = u * u;
  Factored f;
  f.A = 1.0 + hA * u2;
  f.B = -2.0 + hB * u2;
  f.dA = hdA * u * sig / mu_;  // sig^{2k-1} = u^{k-2} * u * sig, then d sig/ds
  f.dB = hdB * u * sig / mu_;
  return f;
}

void Lattice::wp_reduced(Complex s, Complex* p, Complex* pp, int depth) const {
  if (std::abs(s) <= series_radius()) {
    Complex sig = s / mu_;
    Complex u = sig * sig;
    Complex hP(0, 0), hdP(0, 0);
    for (int k = kLaurentTerms + 1; k >= 2; --k) {
      Complex c = coeff_[k - 2];
      hP = hP * u + c;
      hdP = hdP * u + (2.0 * k - 2.0) * c;
    }
    // wp_unit = sig^-2 + sum c_k sig^{2k-2}; sig^{2k-2} = u^{k-2} * u
    Complex wp_u = 1.0 / u + hP * u;
    // wp_unit' = -2 sig^-3 + sum (2k-2) c_k sig^{2k-3}; sig^{2k-3} = u^{k-2} * sig
    Complex wpp_u = -2.0 / (u * sig) + hdP * sig;
    *p = wp_u / (mu_ * mu_);
    *pp = wpp_u / (mu_ * mu_ * mu_);
    return;
  }
  if (depth >= 40)
    throw QuadratureNonConvergent("wp duplication chain failed to reach series range");
  Complex hp, hpp;
  wp_reduced(0.5 * s, &hp, &hpp, depth + 1);
  // Duplication: wp(2w) = (wp''/wp')^2/4 - 2 wp with wp'' = 6 wp^2 - g2/2,
  // wp'(2w) = wp''(12 wp wp'^2 - wp''^2)/(4 wp'^3) - wp'.
  Complex w2 = 6.0 * hp * hp - 0.5 * g2_;
  Complex r = w2 / hpp;
  *p = 0.25 * r * r - 2.0 * hp;
  *pp = w2 * (12.0 * hp * hpp * hpp - w2 * w2) / (4.0 * hpp * hpp * hpp) - hpp;
}

void Lattice::wp_pair(Complex z, Complex* p, Complex* pp) const {
  Complex s = reduce(z);
  if (std::abs(s) <= 1e-12)
    throw PoleAt(z, "wp evaluated within 1e-12 of a lattice point");
  wp_reduced(s, p, pp, 0);
}

Complex Lattice::wp(Complex z) const {
  Complex p, pp;
  wp_pair(z, &p, &pp);
  return p;
}

Complex Lattice::wp_prime(Complex z) const {
  Complex p, pp;
  wp_pair(z, &p, &pp);
  return pp;
}

}  // namespace brody
