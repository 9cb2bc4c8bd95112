// Copyright (c) 2026 the brodylab authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "brody/lattice.hpp"
#include "brody/region.hpp"
#include "brody/types.hpp"

namespace brody {

// Point of CP^N held as a unit-norm representative of its line.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(CVec v);
  static ProjectivePoint affine(const std::vector<Complex>& chart);  // [1 : c1 : ...]
  const CVec& lift() const { return v_; }
  int dimension() const { return static_cast<int>(v_.size()) - 1; }

 private:
  CVec v_;
};

// Local holomorphic lift scaled by a power of two: the natural lift at the
// queried point equals 2^scale_exponent * F, and dF is its derivative under
// the same scaling. After evaluation max_i |F_i| lands in [1, 2).
struct Lift {
  CVec F, dF;
  int scale_exponent = 0;
};

struct ExpTerm {
  Complex c;
  int k = 0;
  Complex lambda;
};

enum class WpComponent { one, wp, wp_prime };

class CurveMap;

struct RationalData {
  std::vector<std::vector<Complex>> comps;  // homogeneous coefficient lists, ascending
  int degree = 0;
};
struct ExpSumData {
  std::vector<std::vector<ExpTerm>> comps;  // affine components; lift prepends 1
};
struct WeierstrassData {
  Lattice lattice;
  std::vector<WpComponent> comps;
};
struct PrecomposedData {
  std::shared_ptr<const CurveMap> base;
  Complex c, b;  // z -> c z + b
};
struct PostcomposedData {
  std::shared_ptr<const CurveMap> base;
  CMat U;
};
struct GluedBump {
  Complex p;
  double a = 0;
  CMat U;  // chart normalization recorded at creation
};
struct GluedData {
  std::shared_ptr<const CurveMap> base;
  std::vector<GluedBump> bumps;
};

// Immutable holomorphic map C -> CP^N, one of six descriptions.
class CurveMap {
 public:
  using Impl = std::variant<RationalData, ExpSumData, WeierstrassData, PrecomposedData,
                            PostcomposedData, GluedData>;

  static CurveMap constant(const ProjectivePoint& p);
  static CurveMap rational(std::vector<std::vector<Complex>> comps);
  static CurveMap expsum(std::vector<std::vector<ExpTerm>> affine_comps);
  static CurveMap weierstrass(const Lattice& lattice,
                              std::vector<WpComponent> comps = {WpComponent::one,
                                                                WpComponent::wp});
  CurveMap precompose(Complex c, Complex b = {0, 0}) const;  // f(cz + b)
  CurveMap postcompose(CMat unitary) const;
  CurveMap with_bump(const GluedBump& bump) const;

  int dimension() const { return dim_; }
  const Impl& impl() const { return *impl_; }

 private:
  CurveMap(std::shared_ptr<const Impl> impl, int dim) : impl_(std::move(impl)), dim_(dim) {}
  std::shared_ptr<const Impl> impl_;
  int dim_ = 1;
};

Lift lift(const CurveMap& f, Complex z);
void lift_into(const CurveMap& f, Complex z, Lift& out);
ProjectivePoint evaluate(const CurveMap& f, Complex z);

// |df|(z) = sqrt(sum_{i<j} |F_i F_j' - F_j F_i'|^2) / (sqrt(pi) |F|^2),
// chart-free and invariant under lift scaling and PU(N+1).
double spherical_derivative(const CurveMap& f, Complex z);

// d(p, q) = arccos|<u, v>| / sqrt(pi), computed in the phase-aligned
// chord form for accuracy near coincident points. Diameter sqrt(pi)/2.
double fs_distance(const ProjectivePoint& p, const ProjectivePoint& q);

// Curve g(z) = U f(z + p) with g(0) = [1:0:...:0]; U is the phase-fixed
// Householder map sending the normalized lift of f(p) to e0.
std::pair<CurveMap, CMat> unitary_to_origin(const CurveMap& f, Complex p);

struct SupResult {
  double value = 0;
  Complex argmax{0, 0};
  double grid_step = 0;
};

// Grid scan at the given resolution plus local pattern refinement.
// Lower-bound semantics: the true sup is >= value.
SupResult sup_spherical_derivative(const CurveMap& f, const Region& region, double resolution);

}  // namespace brody
