// Copyright (c) 2026 the brodylab authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <utility>

#include "brody/curve.hpp"
#include "brody/lattice.hpp"

namespace brody {

inline Complex wp(Complex z, const Lattice& lattice) { return lattice.wp(z); }
inline Complex wp_prime(Complex z, const Lattice& lattice) { return lattice.wp_prime(z); }

// omega2/omega1 = exp(i pi/3); the computed g2 vanishes to roundoff.
inline Lattice hexagonal_lattice(double scale) { return Lattice::hexagonal(scale); }

// Finds c with measured sup |d f_c| = target over the window rescaled by
// 1/c, by bisection on the measured sup. Throws DegenerateCurve when the
// sup vanishes. For lattice-periodic curves pass one fundamental cell as
// the window; the sup is then global.
std::pair<CurveMap, double> brody_rescale(const CurveMap& f, const Region& window,
                                          double target = 1.0, double resolution = 0.0);

// Period lattice of a doubly periodic curve, recovered from its structure:
// a weierstrass core wrapped in precompositions f(z) = W(cz + b) and target
// unitaries is periodic with lattice Lambda / (product of the c's). Returns
// nullopt for curves that are not built that way.
std::optional<Lattice> period_lattice(const CurveMap& f);

}  // namespace brody
