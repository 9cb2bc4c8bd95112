// Copyright (c) 2026 the brodylab authors
// SPDX-License-Identifier: Apache-2.0
#include "brody/elliptic.hpp"

#include <cmath>
#include <variant>

namespace brody {

std::pair<CurveMap, double> brody_rescale(const CurveMap& f, const Region& window,
                                          double target, double resolution) {
  if (!(target > 0)) throw PreconditionViolated("rescale target must be positive");
  if (resolution <= 0) resolution = window.half_extent() / 64;
  double s1 = sup_spherical_derivative(f, window, resolution).value;
  if (!(s1 > 0)) throw DegenerateCurve("spherical derivative vanishes on the window");

  auto measured = [&](double c) {
    CurveMap fc = f.precompose(Complex(c, 0));
    return sup_spherical_derivative(fc, window.scaled(1.0 / c), resolution / c).value;
  };
  double lo = 0.5 * target / s1, hi = 2.0 * target / s1;
  // measured(c) = c * s1 on the matched grid, so the bracket holds as is.
  for (int it = 0; it < 60 && (hi - lo) > 1e-13 * hi; ++it) {
    double mid = 0.5 * (lo + hi);
    if (measured(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  double c = 0.5 * (lo + hi);
  return {f.precompose(Complex(c, 0)), c};
}

std::optional<Lattice> period_lattice(const CurveMap& f) {
  const CurveMap::Impl* impl = &f.impl();
  Complex c{1, 0};
  for (;;) {
    if (const auto* pre = std::get_if<PrecomposedData>(impl)) {
      c *= pre->c;
      impl = &pre->base->impl();
    } else if (const auto* post = std::get_if<PostcomposedData>(impl)) {
      impl = &post->base->impl();
    } else {
      break;
    }
  }
  const auto* w = std::get_if<WeierstrassData>(impl);
  if (!w || c == Complex(0, 0)) return std::nullopt;
  return Lattice(w->lattice.omega1() / c, w->lattice.omega2() / c);
}

}  // namespace brody
