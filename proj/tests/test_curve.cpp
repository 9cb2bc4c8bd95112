// Copyright (c) 2026 the brodylab authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "brody/curve.hpp"
#include "brody/elliptic.hpp"
#include "brody/types.hpp"
#include "oracles.hpp"

using namespace brody;

namespace {

std::vector<Complex> probe_points() {
  return {{0, 0}, {0.3, -0.7}, {2, 1}, {-1.2, 0.4}, {0, 3}, {5, -2}};
}

// Haar-ish random unitary from the QR of a complex Gaussian matrix.
CMat random_unitary(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g;
  CMat M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<CMat> qr(M);
  CMat Q = qr.householderQ();
  return Q;
}

// Natural (descaled) lift components for cross-scale comparisons.
CVec natural(const Lift& L) { return L.F * std::ldexp(1.0, L.scale_exponent); }

// Max relative deviation between dF and a centered finite difference of F.
double fd_derivative_error(const CurveMap& f, Complex z, double h = 1e-5) {
  Lift c = lift(f, z), p = lift(f, z + Complex(h, 0)), m = lift(f, z - Complex(h, 0));
  CVec fd = (natural(p) - natural(m)) / (2.0 * h);
  CVec dc = c.dF * std::ldexp(1.0, c.scale_exponent);
  double scale = dc.norm() + natural(c).norm();
  return (fd - dc).norm() / scale;
}

CurveMap linear_curve() { return CurveMap::rational({{{1, 0}}, {{0, 0}, {1, 0}}}); }

CurveMap cubic_curve() {
  return CurveMap::rational({{{1, 0}}, {{0, 0}, {0, 0}, {0, 0}, {1, 0}}});
}

CurveMap exp_curve(Complex lam) { return CurveMap::expsum({{{{1, 0}, 0, lam}}}); }

}  // namespace

TEST_CASE("spherical derivative matches closed forms") {
  CurveMap lin = linear_curve(), cub = cubic_curve(), ex = exp_curve({1, 0});
  for (Complex z : probe_points()) {
    CHECK(spherical_derivative(lin, z) ==
          doctest::Approx(oracle::sph_linear(z)).epsilon(1e-13));
    CHECK(spherical_derivative(cub, z) ==
          doctest::Approx(oracle::sph_cubic(z)).epsilon(1e-13));
    CHECK(spherical_derivative(ex, z) ==
          doctest::Approx(oracle::sph_exp(1.0, z)).epsilon(1e-13));
  }
  // Spot values fixed by hand, not just by the shared closed forms.
  CHECK(spherical_derivative(lin, {0, 0}) == doctest::Approx(0.5641895835477563).epsilon(1e-14));
  CHECK(spherical_derivative(ex, {0, 0}) == doctest::Approx(0.28209479177387814).epsilon(1e-14));
}

TEST_CASE("spherical derivative equals the curvature-form definition") {
  // (1/4pi) Laplacian log||F||^2 with raw, library-free lifts.
  oracle::RawLift raw_exp = [](Complex z, std::vector<Complex>& F, std::vector<Complex>& dF) {
    F = {{1, 0}, std::exp(z)};
    dF = {{0, 0}, std::exp(z)};
  };
  oracle::RawLift raw_cubic = [](Complex z, std::vector<Complex>& F, std::vector<Complex>& dF) {
    F = {{1, 0}, z * z * z};
    dF = {{0, 0}, 3.0 * z * z};
  };
  CurveMap ex = exp_curve({1, 0}), cub = cubic_curve();
  for (Complex z : {Complex{0.4, 0.1}, Complex{-0.8, 0.9}, Complex{1.3, -0.2}}) {
    double s = spherical_derivative(ex, z);
    CHECK(s * s == doctest::Approx(oracle::sph2_by_laplacian(raw_exp, z)).epsilon(5e-5));
    double c = spherical_derivative(cub, z);
    CHECK(c * c == doctest::Approx(oracle::sph2_by_laplacian(raw_cubic, z)).epsilon(5e-5));
  }
  // Same check through a point where the lift needs the elliptic machinery.
  Lattice L = hexagonal_lattice(1.0);
  oracle::RawLift raw_wp = [&L](Complex z, std::vector<Complex>& F, std::vector<Complex>& dF) {
    Complex p, pp;
    L.wp_pair(z, &p, &pp);
    F = {Complex{1, 0}, p};
    dF = {Complex{0, 0}, pp};
  };
  CurveMap wpc = CurveMap::weierstrass(L);
  Complex z0{0.31, 0.27};
  double w = spherical_derivative(wpc, z0);
  CHECK(w * w == doctest::Approx(oracle::sph2_by_laplacian(raw_wp, z0)).epsilon(5e-5));
}

TEST_CASE("lift scaling and common factors do not change the map") {
  CurveMap lin = linear_curve();
  // Same line bundle written with scaled coefficients and a common factor z.
  CurveMap scaled = CurveMap::rational({{{0, 5}}, {{0, 0}, {0, 5}}});
  CurveMap common = CurveMap::rational({{{0, 0}, {1, 0}}, {{0, 0}, {0, 0}, {1, 0}}});
  for (Complex z : probe_points()) {
    CHECK(spherical_derivative(scaled, z) ==
          doctest::Approx(spherical_derivative(lin, z)).epsilon(1e-13));
    CHECK(spherical_derivative(common, z) ==
          doctest::Approx(spherical_derivative(lin, z)).epsilon(1e-13));
    CHECK(fs_distance(evaluate(scaled, z), evaluate(lin, z)) <= 1e-12);
    CHECK(fs_distance(evaluate(common, z), evaluate(lin, z)) <= 1e-12);
  }
}

TEST_CASE("lift components always land in [1, 2)") {
  Lattice L = hexagonal_lattice(1.0);
  std::vector<CurveMap> curves = {
      linear_curve(),
      cubic_curve(),
      exp_curve({1, 0}),
      CurveMap::weierstrass(L),
      CurveMap::weierstrass(L, {WpComponent::one, WpComponent::wp, WpComponent::wp_prime}),
      linear_curve().precompose({0.3, 0.1}, {2, -1}),
      cubic_curve().postcompose(random_unitary(2, 7)),
  };
  for (const CurveMap& f : curves)
    for (Complex z : probe_points()) {
      Lift L0 = lift(f, z);
      double m = L0.F.cwiseAbs().maxCoeff();
      CHECK(m >= 1.0);
      CHECK(m < 2.0);
      CHECK(L0.F.allFinite());
      CHECK(L0.dF.allFinite());
    }
}

TEST_CASE("lift derivative agrees with finite differences") {
  Lattice L = hexagonal_lattice(1.0);
  CurveMap glued = exp_curve({0.25, 0})
                       .with_bump({{-3, 0}, 4.0, CMat::Identity(2, 2)});
  std::vector<CurveMap> curves = {
      linear_curve(),
      cubic_curve(),
      exp_curve({1, 0}),
      CurveMap::weierstrass(L),
      CurveMap::weierstrass(L, {WpComponent::one, WpComponent::wp, WpComponent::wp_prime}),
      exp_curve({1, 0}).precompose({0.5, 0.2}, {1, 1}),
      glued,
  };
  for (const CurveMap& f : curves)
    for (Complex z : {Complex{0.37, 0.21}, Complex{-1.1, 0.6}, Complex{2.2, -0.4}})
      CHECK(fd_derivative_error(f, z) <= 2e-8);
}

TEST_CASE("unitary and affine reparametrization invariance") {
  std::vector<std::pair<CurveMap, int>> curves = {
      {cubic_curve(), 2},
      {exp_curve({1, 0}), 2},
      {CurveMap::weierstrass(hexagonal_lattice(1.0),
                             {WpComponent::one, WpComponent::wp, WpComponent::wp_prime}),
       3},
  };
  int seed = 11;
  for (auto& [f, n] : curves) {
    CMat U = random_unitary(n, seed++);
    CurveMap g = f.postcompose(U);
    for (Complex z : probe_points()) {
      CHECK(spherical_derivative(g, z) ==
            doctest::Approx(spherical_derivative(f, z)).epsilon(1e-12));
    }
  }
  // |d f(cz+b)| = |c| |df|(cz+b)
  CurveMap f = exp_curve({1, 0});
  Complex c{0.7, -0.4}, b{1.2, 0.3};
  CurveMap g = f.precompose(c, b);
  for (Complex z : probe_points()) {
    CHECK(spherical_derivative(g, z) ==
          doctest::Approx(std::abs(c) * spherical_derivative(f, c * z + b)).epsilon(1e-12));
  }
  // Nested precompositions compose affinely.
  CurveMap h = g.precompose({0.5, 0.1}, {-2, 1});
  Complex c2{0.5, 0.1}, b2{-2, 1};
  for (Complex z : probe_points()) {
    CHECK(spherical_derivative(h, z) ==
          doctest::Approx(std::abs(c * c2) * spherical_derivative(f, c * (c2 * z + b2) + b))
              .epsilon(1e-12));
  }
  CHECK_THROWS_AS(f.postcompose(2.0 * CMat::Identity(2, 2)), const PreconditionViolated&);
}

TEST_CASE("fs_distance closed forms and accuracy near coincidence") {
  auto pt = [](Complex w) { return ProjectivePoint::affine({w}); };
  // d([1:0],[1:w]) = arctan|w|/sqrt(pi)
  for (double w : {0.1, 0.5, 1.0, 3.0, 20.0}) {
    CHECK(fs_distance(pt({0, 0}), pt({w, 0})) ==
          doctest::Approx(std::atan(w) / kSqrtPi).epsilon(1e-13));
    CHECK(fs_distance(pt({0, 0}), pt({w, 0})) ==
          doctest::Approx(oracle::fs_segment_length(w)).epsilon(1e-8));
  }
  // Tiny separations keep full relative accuracy (chord form, no arccos loss).
  for (double w : {1e-3, 1e-5, 1e-8}) {
    double expect = std::atan(w) / kSqrtPi;
    CHECK(fs_distance(pt({0, 0}), pt({w, 0})) == doctest::Approx(expect).epsilon(1e-10));
  }
  // Diameter sqrt(pi)/2, attained by orthogonal lines.
  CVec e0(2), e1(2);
  e0 << 1, 0;
  e1 << 0, 1;
  CHECK(fs_distance(ProjectivePoint(e0), ProjectivePoint(e1)) ==
        doctest::Approx(0.8862269254527580).epsilon(1e-15));
  // Identical representatives up to phase: exactly zero.
  CVec v(3);
  v << Complex(0.3, 1.0), Complex(-2, 0.5), Complex(0, 1);
  CHECK(fs_distance(ProjectivePoint(v), ProjectivePoint(Complex(0, 1) * v)) == 0.0);
}

TEST_CASE("fs_distance metric axioms on random samples") {
  std::mt19937 rng(42);
  std::normal_distribution<double> g;
  auto rand_pt = [&](int n) {
    CVec v(n);
    for (int i = 0; i < n; ++i) v[i] = Complex(g(rng), g(rng));
    return ProjectivePoint(v);
  };
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + trial % 3;
    ProjectivePoint a = rand_pt(n), b = rand_pt(n), c = rand_pt(n);
    double ab = fs_distance(a, b), ba = fs_distance(b, a);
    double bc = fs_distance(b, c), ac = fs_distance(a, c);
    CHECK(std::abs(ab - ba) <= 1e-15);
    CHECK(ab >= 0.0);
    CHECK(ab <= 0.8862269254527580 * (1 + 1e-15));
    CHECK(ac <= ab + bc + 1e-12);
    CHECK(fs_distance(a, a) == 0.0);
  }
  // PU(N+1) invariance.
  CMat U = random_unitary(3, 99);
  for (int trial = 0; trial < 50; ++trial) {
    ProjectivePoint a = rand_pt(3), b = rand_pt(3);
    CHECK(fs_distance(ProjectivePoint(U * a.lift()), ProjectivePoint(U * b.lift())) ==
          doctest::Approx(fs_distance(a, b)).epsilon(1e-12));
  }
}

TEST_CASE("unitary_to_origin sends the value to e0 and preserves |df|") {
  for (Complex p : {Complex{0.3, 0.2}, Complex{-2, 1}, Complex{0, 0}}) {
    CurveMap f = exp_curve({1, 0});
    auto [g, U] = unitary_to_origin(f, p);
    CHECK((U.adjoint() * U - CMat::Identity(2, 2)).norm() <= 1e-14);
    CVec v = evaluate(g, {0, 0}).lift();
    CHECK(std::abs(v[1]) <= 1e-14);
    CHECK(spherical_derivative(g, {0, 0}) ==
          doctest::Approx(spherical_derivative(f, p)).epsilon(1e-12));
  }
  // Higher dimension with a nontrivial value direction.
  CurveMap f3 =
      CurveMap::weierstrass(hexagonal_lattice(1.0),
                            {WpComponent::one, WpComponent::wp, WpComponent::wp_prime});
  Complex p{0.4, 0.33};
  auto [g3, U3] = unitary_to_origin(f3, p);
  CHECK((U3.adjoint() * U3 - CMat::Identity(3, 3)).norm() <= 1e-14);
  CVec v3 = evaluate(g3, {0, 0}).lift();
  CHECK(std::hypot(std::abs(v3[1]), std::abs(v3[2])) <= 1e-13);
  // The value component that survives is real and positive (phase fixing).
  CHECK(v3[0].imag() == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(v3[0].real() > 0.99);
}

TEST_CASE("sup search finds interior and radial maxima") {
  // [1:z]: max at the disk center.
  SupResult s = sup_spherical_derivative(linear_curve(), Region::disk({0, 0}, 2.0), 0.05);
  CHECK(s.value == doctest::Approx(1.0 / kSqrtPi).epsilon(1e-9));
  CHECK(std::abs(s.argmax) <= 1e-4);
  // [1:z^3]: Brody-normalized family, max 2^{2/3}/sqrt(pi) on the ring r^6 = 1/2.
  SupResult c = sup_spherical_derivative(cubic_curve(), Region::disk({0, 0}, 2.0), 0.02);
  double expect = std::pow(2.0, 2.0 / 3.0) / kSqrtPi;
  CHECK(c.value == doctest::Approx(expect).epsilon(1e-7));
  CHECK(std::abs(std::pow(std::abs(c.argmax), 6.0) - 0.5) <= 1e-3);
  // Lower-bound semantics: never exceeds the true sup.
  CHECK(c.value <= expect * (1 + 1e-12));
  // Square regions: e^z on a tall box attains the sup on the x = 0 line.
  SupResult e = sup_spherical_derivative(exp_curve({1, 0}),
                                         Region::square({1, 0}, 4.0), 0.05);
  CHECK(e.value == doctest::Approx(0.28209479177387814).epsilon(1e-9));
  CHECK(std::abs(e.argmax.real()) <= 1e-5);
  // Argmax stays inside the region.
  CHECK(Region::square({1, 0}, 4.0).contains(e.argmax));
  // Constant curve: sup is exactly zero.
  SupResult k = sup_spherical_derivative(
      CurveMap::constant(ProjectivePoint::affine({{0.5, 0.5}})), Region::disk({0, 0}, 1.0),
      0.1);
  CHECK(k.value == 0.0);
}

TEST_CASE("expsum lifts stay finite far out along the axis") {
  CurveMap ex = exp_curve({1, 0});
  for (double x : {350.0, 800.0, -700.0}) {
    Lift L = lift(ex, {x, 0});
    CHECK(L.F.allFinite());
    CHECK(L.dF.allFinite());
    double m = L.F.cwiseAbs().maxCoeff();
    CHECK(m >= 1.0);
    CHECK(m < 2.0);
    CHECK(spherical_derivative(ex, {x, 0}) ==
          doctest::Approx(oracle::sph_exp(1.0, {x, 0})).epsilon(1e-10));
  }
  // Purely imaginary direction: |e^z| = 1, |df| = 1/(2 sqrt(pi)) everywhere.
  CHECK(spherical_derivative(ex, {0, 700}) ==
        doctest::Approx(1.0 / (2.0 * kSqrtPi)).epsilon(1e-12));
  // Two-term spread: scale set by the dominant exponent.
  CurveMap two = CurveMap::expsum({{{{1, 0}, 0, {1, 0}}}, {{{1, 0}, 0, {2, 0}}}});
  Lift L2 = lift(two, {400, 0});
  CHECK(L2.F.allFinite());
  CHECK(L2.F.cwiseAbs().maxCoeff() < 2.0);
}

TEST_CASE("weierstrass curve lifts: poles, periodicity, branch seam") {
  Lattice L = hexagonal_lattice(1.0);
  CurveMap f = CurveMap::weierstrass(L);
  // At the lattice point the curve passes through [0:1] smoothly with
  // vanishing derivative (double pole of wp <-> double zero in the chart).
  Lift at0 = lift(f, {0, 0});
  CHECK(std::abs(at0.F[0]) <= 1e-300);
  CHECK(spherical_derivative(f, {0, 0}) == 0.0);
  // Double periodicity of values and of |df|.
  for (Complex z : {Complex{0.21, 0.13}, Complex{-0.4, 0.52}}) {
    for (Complex per : {L.period1(), L.period2(), L.period1() + L.period2()}) {
      CHECK(fs_distance(evaluate(f, z), evaluate(f, z + per)) <= 1e-10);
      CHECK(spherical_derivative(f, z + per) ==
            doctest::Approx(spherical_derivative(f, z)).epsilon(1e-9));
    }
  }
  // Continuity across the series/affine evaluation seam at |s| = 0.25 lambda1.
  double seam = 0.25 * L.min_norm();
  for (double bump : {-1e-7, 1e-7}) {
    Complex lo = std::polar(seam + bump, 0.9);
    Complex hi = std::polar(seam - bump, 0.9);
    CHECK(spherical_derivative(f, lo) ==
          doctest::Approx(spherical_derivative(f, hi)).epsilon(1e-7));
  }
  // wp' component: triple pole handled the same way.
  CurveMap fp = CurveMap::weierstrass(L, {WpComponent::one, WpComponent::wp_prime});
  CHECK(lift(fp, {0, 0}).F.allFinite());
  CHECK(spherical_derivative(fp, {0, 0}) == 0.0);
}

TEST_CASE("gluing onto a constant curve is exactly the standard bump") {
  double a = 10.0;
  CurveMap base = CurveMap::constant(ProjectivePoint::affine({{0, 0}}));
  CurveMap g = base.with_bump({{0, 0}, a, CMat::Identity(2, 2)});
  for (double r : {0.5, 1.0, std::pow(a * a / 2.0, 1.0 / 6.0), 5.0, 20.0}) {
    Complex z = std::polar(r, 0.7);
    CHECK(spherical_derivative(g, z) ==
          doctest::Approx(oracle::sph_bump(a, 1, z)).epsilon(1e-12));
  }
  // Its peak is 2^{2/3}/(sqrt(pi) a^{1/3}) on the ring r^6 = a^2/2.
  SupResult s = sup_spherical_derivative(g, Region::disk({0, 0}, 6.0), 0.02);
  CHECK(s.value ==
        doctest::Approx(std::pow(2.0, 2.0 / 3.0) / (kSqrtPi * std::cbrt(a))).epsilon(1e-6));
  // Far field decays like 3a/(sqrt(pi) r^4).
  double far = spherical_derivative(g, {40, 0});
  CHECK(far == doctest::Approx(3.0 * a / (kSqrtPi * std::pow(40.0, 4.0))).epsilon(1e-3));
}

TEST_CASE("glued curves keep the base far away and stay consistent") {
  CurveMap base = exp_curve({0.25, 0});
  CMat U = random_unitary(2, 5);
  CurveMap g = base.with_bump({{-30, 0}, 1241.2919896086577, U});
  // Far from the bump center the derivative change is tiny.
  for (Complex z : {Complex{30, 0}, Complex{0, 25}}) {
    CHECK(spherical_derivative(g, z) ==
          doctest::Approx(spherical_derivative(base, z)).epsilon(1e-3));
  }
  // Unitary invariance still holds for glued curves.
  CMat V = random_unitary(2, 6);
  CurveMap gV = g.postcompose(V);
  for (Complex z : {Complex{-30.5, 0.2}, Complex{3, 1}})
    CHECK(spherical_derivative(gV, z) ==
          doctest::Approx(spherical_derivative(g, z)).epsilon(1e-12));
  // Stacking a second bump leaves the first intact far from the second.
  CurveMap g2 = g.with_bump({{40, 0}, 1241.2919896086577, CMat::Identity(2, 2)});
  CHECK(spherical_derivative(g2, {-30.5, 0.2}) ==
        doctest::Approx(spherical_derivative(g, {-30.5, 0.2})).epsilon(1e-4));
}

TEST_CASE("degenerate inputs are rejected") {
  CHECK_THROWS_AS(CurveMap::rational({}), const PreconditionViolated&);
  CHECK_THROWS_AS(CurveMap::rational({{{1, 0}}}), const PreconditionViolated&);
  CHECK_THROWS_AS(CurveMap::rational({{{0, 0}}, {{0, 0}}}), const DegenerateCurve&);
  CHECK_THROWS_AS(ProjectivePoint(CVec::Zero(3)), const LiftUndefined&);
  CHECK_THROWS_AS(CurveMap::expsum({}), const PreconditionViolated&);
}
