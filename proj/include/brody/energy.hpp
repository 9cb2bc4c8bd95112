// Copyright (c) 2026 the brodylab authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "brody/curve.hpp"
#include "brody/quadrature.hpp"
#include "brody/region.hpp"
#include "brody/types.hpp"

namespace brody {

struct EnergyEstimate {
  double value = 0;
  double error_estimate = 0;
  Region region = Region::disk({0, 0}, 1.0);
  int order = 0;
  int depth = 0;
  long evals = 0;
};

// Integral of |df|^2 over the region (tensor Gauss-Legendre on adaptive
// dyadic tiles; disks in polar coordinates).
EnergyEstimate energy(const CurveMap& f, const Region& region,
                      const QuadratureOptions& opts = {});

struct TranslateSup {
  double value = 0;          // lower bound for the windowed sup
  Complex argmax{0, 0};      // translate (shape center) attaining it
  double grid_step = 0;
  EnergyEstimate best;       // full-tolerance estimate at argmax
};

// sup over translates a of energy(f, shape recentered at a) subject to the
// translated shape staying inside the window. Coarse grid (step = shape
// size / 4) plus per-coordinate golden-section refinement; lower-bound
// semantics. Throws WindowTooSmall when no admissible translate exists.
TranslateSup sup_translate_energy(const CurveMap& f, const Region& shape, const Region& window,
                                  const QuadratureOptions& opts = {});

struct RhoPoint {
  double size = 0;       // shape parameter (disk radius or square side)
  double area = 0;
  double sup_energy = 0;
  double rho_hat = 0;    // sup_energy / area
  Complex argmax{0, 0};
};

struct RhoEstimate {
  std::vector<RhoPoint> points;
  double last_rel_change = 0;  // between the final two sizes
  bool stabilized = false;     // last_rel_change <= 2%
};

// Windowed energy-density estimates along a Folner sequence.
RhoEstimate rho_estimate(const CurveMap& f, const FolnerSequence& folner, const Region& window,
                         const QuadratureOptions& opts = {});

// Mean energy density of a doubly periodic curve: energy over one
// fundamental cell divided by its area. Checks periodicity at 1e-8 first.
double rho_elliptic(const CurveMap& f, const Lattice& lattice,
                    const QuadratureOptions& opts = {});

// Cumulative radial profile of the energy about the origin:
//   A(t) = energy(f, D_t(0)),   T(r) = Int_1^r A(t) dt / t.
// Built once by adaptive radial quadrature of the circle-average profile;
// A and T are then cheap queries at any radius up to r_max.
class NsaProfile {
 public:
  NsaProfile(const CurveMap& f, double r_max, const QuadratureOptions& opts = {});
  double r_max() const { return r_max_; }
  double A(double t) const;
  double T(double r) const;

 private:
  struct Panel {
    double lo = 0, hi = 0;
    double i1 = 0, i2 = 0;      // int phi, int phi*ln(max(1,u)) over [lo,hi]
    double cum1 = 0, cum2 = 0;  // prefix sums up to hi
  };
  double phi(double u) const;  // u * circle integral of |df|^2 at radius u
  void partial(double r, double* p1, double* p2) const;

  CurveMap f_;
  QuadratureOptions opts_;
  double r_max_ = 0;
  std::vector<Panel> panels_;
};

// T(r, f) for a single radius (r >= 1).
double nsa_characteristic(const CurveMap& f, double r, const QuadratureOptions& opts = {});

struct RhoNsaEstimate {
  double value = 0;       // max of 2T(r)/(pi r^2) over the tail window
  double r_at_max = 0;
  double r_lo = 0, r_hi = 0;  // tail window [r_max/4, r_max]
};

// Finite-scale proxy for the characteristic-based energy density:
// max over a geometric grid in the dyadic tail [r_max/4, r_max].
RhoNsaEstimate rho_nsa_estimate(const CurveMap& f, double r_max,
                                const QuadratureOptions& opts = {});

struct FolnerPair {
  double area = 0;
  double rho_disk = 0;
  double rho_square = 0;
  double rel_disagreement = 0;
};

struct FolnerAgreement {
  std::vector<FolnerPair> pairs;
  double max_rel_disagreement = 0;
};

// Cross-validates disk and square Folner estimates at matched areas
// chosen to fit the window.
FolnerAgreement folner_agreement(const CurveMap& f, const Region& window,
                                 const QuadratureOptions& opts = {});

}  // namespace brody
