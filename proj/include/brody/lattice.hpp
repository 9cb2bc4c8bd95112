// Copyright (c) 2026 the brodylab authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "brody/types.hpp"

namespace brody {

// Period lattice spanned by the full periods 2*omega1, 2*omega2 with
// Im(omega2/omega1) > 0. Invariants g2, g3 come from the Eisenstein
// q-expansions E4/E6 on the Lagrange-reduced basis; all series work is
// done on the unit-normalized lattice so coefficients stay O(1) at any
// scale.
class Lattice {
 public:
  Lattice(Complex omega1, Complex omega2);

  static Lattice hexagonal(double scale);

  Complex omega1() const { return omega1_; }
  Complex omega2() const { return omega2_; }
  Complex period1() const { return 2.0 * omega1_; }
  Complex period2() const { return 2.0 * omega2_; }
  // Lagrange-reduced full-period basis, |b1| <= |b2|.
  Complex basis1() const { return b1_; }
  Complex basis2() const { return b2_; }
  Complex g2() const { return g2_; }
  Complex g3() const { return g3_; }
  double area() const { return area_; }            // fundamental domain area
  double min_norm() const { return lambda1_; }     // shortest nonzero period
  // Largest |s| the Laurent path accepts before a duplication step.
  double series_radius() const { return 0.45 * lambda1_; }

  // z minus the nearest lattice point (true nearest, not just rounding).
  Complex reduce(Complex z, Complex* nearest = nullptr) const;

  // Weierstrass functions; throw PoleAt within 1e-12 of a lattice point.
  Complex wp(Complex z) const;
  Complex wp_prime(Complex z) const;
  void wp_pair(Complex z, Complex* p, Complex* pp) const;

  // Factored pole-free combinations at reduced s, |s| <= series_radius():
  //   A = s^2 wp(s), B = s^3 wp'(s), dA/ds, dB/ds.
  struct Factored {
    Complex A, dA, B, dB;
  };
  Factored factored(Complex s) const;

 private:
  void wp_reduced(Complex s, Complex* p, Complex* pp, int depth) const;

  Complex omega1_, omega2_;
  Complex b1_, b2_;        // reduced basis
  Complex g2_, g3_;
  double area_ = 0;
  double lambda1_ = 0;
  double mu_ = 1;                     // |b1|, the normalization scale
  std::vector<Complex> coeff_;        // Laurent c_k of the unit lattice, k >= 2
  double inv_[4] = {0, 0, 0, 0};      // inverse of [b1 b2] as a real 2x2
};

}  // namespace brody
