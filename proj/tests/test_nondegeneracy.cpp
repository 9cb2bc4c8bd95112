// Copyright (c) 2026 the brodylab authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "brody/elliptic.hpp"
#include "brody/nondegeneracy.hpp"
#include "brody/types.hpp"

using namespace brody;

namespace {

CurveMap exp_curve() { return CurveMap::expsum({{{{1, 0}, 0, {1, 0}}}}); }

CMat random_unitary(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g;
  CMat M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M(i, j) = Complex(g(rng), g(rng));
  return Eigen::HouseholderQR<CMat>(M).householderQ();
}

}  // namespace

TEST_CASE("constant curves profile to zero and classify as degenerate") {
  CurveMap c = CurveMap::constant(ProjectivePoint::affine({{0.3, -1.0}}));
  std::vector<Region> windows = {Region::square({0, 0}, 4.0), Region::square({0, 0}, 8.0)};
  NondegeneracyCertificate cert = nondegeneracy_profile(c, 1.0, windows);
  for (const NondegPoint& p : cert.trend) CHECK(p.delta_hat == 0.0);
  CHECK(classify(cert, 0.1) == NondegVerdict::degenerate_trend);
}

TEST_CASE("exponential curve: exact leftmost-center decay, degenerate trend") {
  // Windows pushing to Re z = -W; the leftmost sampled center sits exactly
  // at -W and sup over D_2(-W) is sech(W-2)/(2 sqrt(pi)), hit exactly by
  // the absolute R/64 grid.
  CurveMap f = exp_curve();
  double R = 2.0;
  std::vector<Region> windows;
  for (double W : {8.0, 16.0, 24.0})
    windows.push_back(Region::square({-W / 2, 0}, W));
  NondegeneracyCertificate cert = nondegeneracy_profile(f, R, windows);
  REQUIRE(cert.trend.size() == 3);
  for (size_t i = 0; i < 3; ++i) {
    double W = windows[i].size;
    double expect = 1.0 / (2.0 * kSqrtPi * std::cosh(W - R));
    CHECK(cert.trend[i].delta_hat == doctest::Approx(expect).epsilon(1e-3));
    // sech(x) <= 2 e^{-x}, so the decay envelope is e^{-(W-2)}/sqrt(pi).
    CHECK(cert.trend[i].delta_hat <= std::exp(-(W - R)) / kSqrtPi * 1.001);
    CHECK(cert.trend[i].argmin.real() == doctest::Approx(-W).epsilon(1e-12));
  }
  // Non-increasing trend, and a clear >2x decay: degenerate.
  CHECK(cert.trend[0].delta_hat >= cert.trend[1].delta_hat);
  CHECK(cert.trend[1].delta_hat >= cert.trend[2].delta_hat);
  CHECK(classify(cert, 1e-6) == NondegVerdict::degenerate_trend);
  // The refined sup never undercuts the grid bound.
  for (const NondegPoint& p : cert.trend) CHECK(p.refined_sup >= p.delta_hat);
}

TEST_CASE("rescaled elliptic curve: flat positive trend, nondegenerate") {
  Lattice L = hexagonal_lattice(1.0);
  CurveMap wp = CurveMap::weierstrass(L);
  auto [wpr, c] = brody_rescale(wp, Region::square({0, 0}, std::abs(L.period1())));
  double period = std::abs(L.period1()) / c;
  std::vector<Region> windows = {Region::square({0, 0}, 2 * period),
                                 Region::square({0, 0}, 3 * period),
                                 Region::square({0, 0}, 4 * period)};
  NondegeneracyCertificate cert = nondegeneracy_profile(wpr, period, windows);
  double d = cert.delta_hat();
  CHECK(d > 0.05);
  for (const NondegPoint& p : cert.trend)
    CHECK(p.delta_hat == doctest::Approx(d).epsilon(0.02));
  CHECK(classify(cert, 0.5 * d) == NondegVerdict::nondegenerate_at_scale);
}

TEST_CASE("profile is PU-invariant and grid-translation covariant") {
  CurveMap f = exp_curve();
  std::vector<Region> windows = {Region::square({0, 0}, 4.0), Region::square({0, 0}, 6.0)};
  NondegeneracyCertificate base = nondegeneracy_profile(f, 2.0, windows);
  NondegeneracyCertificate rot =
      nondegeneracy_profile(f.postcompose(random_unitary(2, 3)), 2.0, windows);
  for (size_t i = 0; i < windows.size(); ++i)
    CHECK(rot.trend[i].delta_hat ==
          doctest::Approx(base.trend[i].delta_hat).epsilon(1e-8));
  // Shift by a multiple of the center step: same grids, same answers.
  double b = 0.25;
  std::vector<Region> shifted;
  for (const Region& w : windows) shifted.push_back(w.translated({b, 0}));
  NondegeneracyCertificate tr = nondegeneracy_profile(f.precompose({1, 0}, {b, 0}), 2.0, windows);
  NondegeneracyCertificate sh = nondegeneracy_profile(f, 2.0, shifted);
  for (size_t i = 0; i < windows.size(); ++i)
    CHECK(tr.trend[i].delta_hat == doctest::Approx(sh.trend[i].delta_hat).epsilon(1e-12));
}

TEST_CASE("delta_hat grows with R and shrinks along nested windows") {
  CurveMap f = exp_curve();
  std::vector<Region> windows = {Region::square({-4, 0}, 8.0)};
  double d1 = nondegeneracy_profile(f, 1.0, windows).delta_hat();
  double d2 = nondegeneracy_profile(f, 2.0, windows).delta_hat();
  CHECK(d1 <= d2 + 1e-12);
}

TEST_CASE("classification edge cases") {
  CHECK_THROWS_AS(nondegeneracy_profile(exp_curve(), -1.0, {Region::square({0, 0}, 2.0)}),
                  const PreconditionViolated&);
  CHECK_THROWS_AS(nondegeneracy_profile(exp_curve(), 1.0,
                                        {Region::square({0, 0}, 4.0),
                                         Region::square({5, 5}, 4.0)}),
                  const PreconditionViolated&);
  // A single window with a healthy value cannot certify flatness.
  NondegeneracyCertificate one =
      nondegeneracy_profile(exp_curve(), 2.0, {Region::square({0, 0}, 4.0)});
  CHECK(classify(one, one.delta_hat() * 0.5) == NondegVerdict::inconclusive);
  CHECK_THROWS_AS(classify(one, 0.0), const PreconditionViolated&);
}
