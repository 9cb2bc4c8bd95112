// Copyright (c) 2026 the brodylab authors
// SPDX-License-Identifier: Apache-2.0
#include "brody/curve.hpp"

#include <algorithm>
#include <cmath>

#include "brody/parallel.hpp"

namespace brody {

namespace {

using Poly = std::vector<Complex>;

double poly_max_abs(const Poly& p) {
  double m = 0;
  for (Complex a : p) m = std::max(m, std::abs(a));
  return m;
}

void poly_trim(Poly& p, double rel_tol = 1e-14) {
  double m = poly_max_abs(p);
  double tol = m * rel_tol;
  while (p.size() > 1 && std::abs(p.back()) <= tol) p.pop_back();
  if (p.size() == 1 && std::abs(p[0]) <= tol) p[0] = 0.0;
}

int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

bool poly_is_zero(const Poly& p) { return poly_max_abs(p) == 0.0; }

// A = Q*B + R by synthetic division; B must have nonzero leading coefficient.
void poly_divmod(const Poly& a, const Poly& b, Poly* q, Poly* r) {
  Poly rem = a;
  int db = poly_degree(b);
  Complex lead = b[db];
  int dq = poly_degree(a) - db;
  q->assign(std::max(dq + 1, 1), Complex(0, 0));
  for (int k = dq; k >= 0; --k) {
    Complex f = rem[k + db] / lead;
    (*q)[k] = f;
    for (int j = 0; j <= db; ++j) rem[k + j] -= f * b[j];
  }
  rem.resize(std::max(db, 1));
  *r = rem;
}

Poly poly_gcd(Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  if (poly_is_zero(a)) return b;
  if (poly_is_zero(b)) return a;
  for (int it = 0; it < 256; ++it) {
    if (poly_degree(a) < poly_degree(b)) std::swap(a, b);
    if (poly_degree(b) == 0) return {Complex(1, 0)};
    Poly q, r;
    poly_divmod(a, b, &q, &r);
    poly_trim(r, 1e-12);
    if (poly_is_zero(r)) return b;
    a = std::move(b);
    b = std::move(r);
  }
  return {Complex(1, 0)};
}

void remove_common_factor(std::vector<Poly>& comps) {
  Poly g = comps[0];
  for (std::size_t i = 1; i < comps.size() && poly_degree(g) > 0; ++i)
    g = poly_gcd(g, comps[i]);
  poly_trim(g);
  if (poly_degree(g) < 1) return;
  Complex lead = g[poly_degree(g)];
  for (Complex& c : g) c /= lead;
  std::vector<Poly> out;
  out.reserve(comps.size());
  for (const Poly& c : comps) {
    if (poly_is_zero(c)) {
      out.push_back(c);
      continue;
    }
    if (poly_degree(c) < poly_degree(g)) return;  // not a true common factor
    Poly q, r;
    poly_divmod(c, g, &q, &r);
    if (poly_max_abs(r) > 1e-8 * std::max(1.0, poly_max_abs(c))) return;
    poly_trim(q);
    out.push_back(std::move(q));
  }
  comps = std::move(out);
}

void poly_eval(const Poly& p, Complex z, Complex* v, Complex* d) {
  Complex val = p.back(), der(0, 0);
  for (int k = static_cast<int>(p.size()) - 2; k >= 0; --k) {
    der = der * z + val;
    val = val * z + p[k];
  }
  *v = val;
  *d = der;
}

void finalize_lift(Lift& out) {
  double m = 0;
  for (Eigen::Index i = 0; i < out.F.size(); ++i) m = std::max(m, std::abs(out.F[i]));
  if (!(m > 0) || !std::isfinite(m))
    throw LiftUndefined("lift vanished or overflowed at the queried point");
  int k = std::ilogb(m);
  if (k != 0) {
    double s = std::ldexp(1.0, -k);
    out.F *= s;
    out.dF *= s;
    out.scale_exponent += k;
  }
}

void lift_impl(const CurveMap::Impl& impl, Complex z, Lift& out);

void lift_rational(const RationalData& d, Complex z, Lift& out) {
  int n = static_cast<int>(d.comps.size());
  out.F.resize(n);
  out.dF.resize(n);
  out.scale_exponent = 0;
  for (int i = 0; i < n; ++i) poly_eval(d.comps[i], z, &out.F[i], &out.dF[i]);
}

void lift_expsum(const ExpSumData& d, Complex z, Lift& out) {
  int n = static_cast<int>(d.comps.size()) + 1;
  out.F.resize(n);
  out.dF.resize(n);
  out.scale_exponent = 0;
  constexpr double kLn2 = 0.69314718055994530942;
  double az = std::abs(z);
  double mu = 0;  // max term exponent, with 0 for the constant chart
  for (const auto& comp : d.comps)
    for (const ExpTerm& t : comp) {
      if (t.c == Complex(0, 0)) continue;
      double ex = (t.lambda * z).real() + std::log(std::abs(t.c));
      if (t.k > 0) ex += az > 0 ? t.k * std::log(az) : -1e308;
      mu = std::max(mu, ex);
    }
  long m = mu > 300 ? std::lround(mu / kLn2) : 0;
  out.scale_exponent = static_cast<int>(m);
  double shift = m * kLn2;
  out.F[0] = std::exp(-shift);
  out.dF[0] = 0;
  for (int i = 1; i < n; ++i) {
    Complex v(0, 0), dv(0, 0);
    for (const ExpTerm& t : d.comps[i - 1]) {
      if (t.c == Complex(0, 0)) continue;
      Complex e = std::exp(t.lambda * z - shift);
      Complex zk = t.k > 0 ? std::pow(z, t.k) : Complex(1, 0);
      Complex zk1 = t.k > 1 ? std::pow(z, t.k - 1) : (t.k == 1 ? Complex(1, 0) : Complex(0, 0));
      v += t.c * zk * e;
      dv += t.c * (static_cast<double>(t.k) * zk1 + t.lambda * zk) * e;
    }
    out.F[i] = v;
    out.dF[i] = dv;
  }
}

void lift_weierstrass(const WeierstrassData& d, Complex z, Lift& out) {
  int n = static_cast<int>(d.comps.size());
  out.F.resize(n);
  out.dF.resize(n);
  out.scale_exponent = 0;
  const Lattice& L = d.lattice;
  int pole_order = 0;
  for (WpComponent c : d.comps) {
    if (c == WpComponent::wp) pole_order = std::max(pole_order, 2);
    if (c == WpComponent::wp_prime) pole_order = std::max(pole_order, 3);
  }
  Complex s = L.reduce(z);
  if (pole_order > 0 && std::abs(s) <= 0.25 * L.min_norm()) {
    // Factored lift s^m * (components); regular and nonzero through the pole.
    Lattice::Factored fa = L.factored(s);
    for (int i = 0; i < n; ++i) {
      switch (d.comps[i]) {
        case WpComponent::one:
          if (pole_order == 2) {
            out.F[i] = s * s;
            out.dF[i] = 2.0 * s;
          } else {
            out.F[i] = s * s * s;
            out.dF[i] = 3.0 * s * s;
          }
          break;
        case WpComponent::wp:
          if (pole_order == 2) {
            out.F[i] = fa.A;
            out.dF[i] = fa.dA;
          } else {
            out.F[i] = s * fa.A;
            out.dF[i] = fa.A + s * fa.dA;
          }
          break;
        case WpComponent::wp_prime:
          out.F[i] = fa.B;
          out.dF[i] = fa.dB;
          break;
      }
    }
    return;
  }
  Complex p(0, 0), pp(0, 0);
  if (pole_order > 0) L.wp_pair(z, &p, &pp);
  Complex ppp = 6.0 * p * p - 0.5 * L.g2();
  for (int i = 0; i < n; ++i) {
    switch (d.comps[i]) {
      case WpComponent::one:
        out.F[i] = 1;
        out.dF[i] = 0;
        break;
      case WpComponent::wp:
        out.F[i] = p;
        out.dF[i] = pp;
        break;
      case WpComponent::wp_prime:
        out.F[i] = pp;
        out.dF[i] = ppp;
        break;
    }
  }
}

void lift_glued(const GluedData& d, Complex z, Lift& out) {
  lift_impl(d.base->impl(), z, out);
  CVec t, td, g, gd;
  for (const GluedBump& bump : d.bumps) {
    Complex s = z - bump.p;
    Complex s2 = s * s, s3 = s2 * s;
    t.noalias() = bump.U * out.F;
    td.noalias() = bump.U * out.dF;
    g = s3 * t;
    gd = 3.0 * s2 * t + s3 * td;
    for (Eigen::Index i = 1; i < g.size(); ++i) {
      g[i] += bump.a * t[0];
      gd[i] += bump.a * td[0];
    }
    out.F.noalias() = bump.U.adjoint() * g;
    out.dF.noalias() = bump.U.adjoint() * gd;
    double m = out.F.cwiseAbs().maxCoeff();
    if (m > 0 && std::isfinite(m)) {
      int k = std::ilogb(m);
      if (k > 30 || k < -30) {
        double sc = std::ldexp(1.0, -k);
        out.F *= sc;
        out.dF *= sc;
        out.scale_exponent += k;
      }
    }
  }
}

void lift_impl(const CurveMap::Impl& impl, Complex z, Lift& out) {
  if (const auto* r = std::get_if<RationalData>(&impl)) {
    lift_rational(*r, z, out);
  } else if (const auto* e = std::get_if<ExpSumData>(&impl)) {
    lift_expsum(*e, z, out);
  } else if (const auto* w = std::get_if<WeierstrassData>(&impl)) {
    lift_weierstrass(*w, z, out);
  } else if (const auto* pre = std::get_if<PrecomposedData>(&impl)) {
    lift_impl(pre->base->impl(), pre->c * z + pre->b, out);
    out.dF *= pre->c;
  } else if (const auto* post = std::get_if<PostcomposedData>(&impl)) {
    lift_impl(post->base->impl(), z, out);
    out.F = post->U * out.F;
    out.dF = post->U * out.dF;
  } else {
    lift_glued(std::get<GluedData>(impl), z, out);
  }
}

}  // namespace

ProjectivePoint::ProjectivePoint(CVec v) : v_(std::move(v)) {
  if (v_.size() < 2) throw PreconditionViolated("projective point needs N >= 1");
  double n = v_.norm();
  if (!(n > 0) || !std::isfinite(n)) throw LiftUndefined("projective point has no nonzero lift");
  v_ /= n;
}

ProjectivePoint ProjectivePoint::affine(const std::vector<Complex>& chart) {
  CVec v(chart.size() + 1);
  v[0] = 1;
  for (std::size_t i = 0; i < chart.size(); ++i) v[i + 1] = chart[i];
  return ProjectivePoint(std::move(v));
}

CurveMap CurveMap::constant(const ProjectivePoint& p) {
  std::vector<std::vector<Complex>> comps;
  for (Eigen::Index i = 0; i < p.lift().size(); ++i) comps.push_back({p.lift()[i]});
  return rational(std::move(comps));
}

CurveMap CurveMap::rational(std::vector<std::vector<Complex>> comps) {
  if (comps.size() < 2) throw PreconditionViolated("rational curve needs N+1 >= 2 components");
  bool all_zero = true;
  for (auto& c : comps) {
    if (c.empty()) c = {Complex(0, 0)};
    poly_trim(c);
    if (!poly_is_zero(c)) all_zero = false;
  }
  if (all_zero) throw DegenerateCurve("all components identically zero");
  remove_common_factor(comps);
  RationalData d;
  d.degree = 0;
  for (const auto& c : comps)
    if (!poly_is_zero(c)) d.degree = std::max(d.degree, poly_degree(c));
  d.comps = std::move(comps);
  int dim = static_cast<int>(d.comps.size()) - 1;
  return CurveMap(std::make_shared<const Impl>(std::move(d)), dim);
}

CurveMap CurveMap::expsum(std::vector<std::vector<ExpTerm>> affine_comps) {
  if (affine_comps.empty()) throw PreconditionViolated("expsum curve needs >= 1 component");
  for (auto& comp : affine_comps)
    for (const ExpTerm& t : comp)
      if (t.k < 0) throw PreconditionViolated("expsum powers must be nonnegative");
  ExpSumData d{std::move(affine_comps)};
  int dim = static_cast<int>(d.comps.size());
  return CurveMap(std::make_shared<const Impl>(std::move(d)), dim);
}

CurveMap CurveMap::weierstrass(const Lattice& lattice, std::vector<WpComponent> comps) {
  if (comps.size() < 2) throw PreconditionViolated("weierstrass curve needs N+1 >= 2 components");
  WeierstrassData d{lattice, std::move(comps)};
  int dim = static_cast<int>(d.comps.size()) - 1;
  return CurveMap(std::make_shared<const Impl>(std::move(d)), dim);
}

CurveMap CurveMap::precompose(Complex c, Complex b) const {
  PrecomposedData d{std::make_shared<const CurveMap>(*this), c, b};
  return CurveMap(std::make_shared<const Impl>(std::move(d)), dim_);
}

CurveMap CurveMap::postcompose(CMat unitary) const {
  if (unitary.rows() != dim_ + 1 || unitary.cols() != dim_ + 1)
    throw PreconditionViolated("unitary dimension mismatch");
  double dev = (unitary.adjoint() * unitary - CMat::Identity(dim_ + 1, dim_ + 1)).norm();
  if (dev > 1e-10) throw PreconditionViolated("matrix is not unitary");
  PostcomposedData d{std::make_shared<const CurveMap>(*this), std::move(unitary)};
  return CurveMap(std::make_shared<const Impl>(std::move(d)), dim_);
}

CurveMap CurveMap::with_bump(const GluedBump& bump) const {
  if (!(bump.a > 0)) throw PreconditionViolated("bump amplitude must be positive");
  if (bump.U.rows() != dim_ + 1 || bump.U.cols() != dim_ + 1)
    throw PreconditionViolated("bump unitary dimension mismatch");
  if (const auto* g = std::get_if<GluedData>(impl_.get())) {
    GluedData d = *g;
    d.bumps.push_back(bump);
    return CurveMap(std::make_shared<const Impl>(std::move(d)), dim_);
  }
  GluedData d{std::make_shared<const CurveMap>(*this), {bump}};
  return CurveMap(std::make_shared<const Impl>(std::move(d)), dim_);
}

void lift_into(const CurveMap& f, Complex z, Lift& out) {
  lift_impl(f.impl(), z, out);
  finalize_lift(out);
}

Lift lift(const CurveMap& f, Complex z) {
  Lift out;
  lift_into(f, z, out);
  return out;
}

ProjectivePoint evaluate(const CurveMap& f, Complex z) {
  thread_local Lift tl;
  lift_into(f, z, tl);
  return ProjectivePoint(tl.F);
}

double spherical_derivative(const CurveMap& f, Complex z) {
  thread_local Lift tl;
  lift_into(f, z, tl);
  double num = 0;
  const Eigen::Index n = tl.F.size();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      num += std::norm(tl.F[i] * tl.dF[j] - tl.F[j] * tl.dF[i]);
  double den = tl.F.squaredNorm();
  return std::sqrt(num) / (kSqrtPi * den);
}

double fs_distance(const ProjectivePoint& p, const ProjectivePoint& q) {
  if (p.dimension() != q.dimension())
    throw PreconditionViolated("points live in different projective spaces");
  const CVec* u = &p.lift();
  const CVec* v = &q.lift();
  // Canonical argument order: d(p,q) and d(q,p) run the identical
  // expression, so the metric is symmetric to the last bit.
  for (Eigen::Index i = 0; i < u->size(); ++i) {
    double a = (*u)[i].real(), b = (*v)[i].real();
    if (a != b) {
      if (a > b) std::swap(u, v);
      break;
    }
    a = (*u)[i].imag(), b = (*v)[i].imag();
    if (a != b) {
      if (a > b) std::swap(u, v);
      break;
    }
  }
  Complex h = u->dot(*v);
  double ah = std::abs(h);
  CVec w = ah > 0 ? CVec((std::conj(h) / ah) * (*v)) : *v;
  double chord = (*u - w).norm();
  double theta = 2.0 * std::asin(std::min(1.0, 0.5 * chord));
  return theta / kSqrtPi;
}

std::pair<CurveMap, CMat> unitary_to_origin(const CurveMap& f, Complex p) {
  Lift lf = lift(f, p);
  CVec u = lf.F / lf.F.norm();
  const Eigen::Index n = u.size();
  // Tail norm summed directly: the subtraction 1 - |u0|^2 would lose all
  // relative accuracy near e0 and de-unitarize the reflector.
  double beta = n > 1 ? u.tail(n - 1).squaredNorm() : 0.0;
  Complex alpha = std::abs(u[0]) > 0 ? u[0] / std::abs(u[0]) : Complex(1, 0);
  CMat U;
  if (beta <= 0) {
    U = CMat::Identity(n, n);
    U(0, 0) = std::conj(alpha);
  } else {
    // Householder with the cancellation-free v0 = -alpha beta / (1 + |u0|).
    CVec v = u;
    v[0] = -alpha * beta / (1.0 + std::abs(u[0]));
    double vv = std::norm(v[0]) + beta;
    U = std::conj(alpha) * (CMat::Identity(n, n) - (2.0 / vv) * (v * v.adjoint()));
  }
  CurveMap shifted = f.precompose(Complex(1, 0), p);
  return {shifted.postcompose(U), U};
}

SupResult sup_spherical_derivative(const CurveMap& f, const Region& region, double resolution) {
  if (!(resolution > 0)) throw PreconditionViolated("sup search needs positive resolution");
  double h = region.half_extent();
  Complex c = region.center;
  int n = std::max(2, static_cast<int>(std::ceil(2 * h / resolution)) + 1);
  double step = 2 * h / (n - 1);

  struct RowBest {
    double value = -1;
    Complex at{0, 0};
  };
  std::vector<RowBest> rows(n);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
    double y = c.imag() - h + step * static_cast<double>(i);
    RowBest best;
    for (int j = 0; j < n; ++j) {
      Complex z(c.real() - h + step * j, y);
      if (!region.contains(z)) continue;
      double v = spherical_derivative(f, z);
      if (v > best.value) best = {v, z};
    }
    rows[i] = best;
  });
  SupResult res;
  res.grid_step = step;
  res.value = -1;
  for (const RowBest& rb : rows)
    if (rb.value > res.value) {
      res.value = rb.value;
      res.argmax = rb.at;
    }
  if (res.value < 0) {
    res.value = spherical_derivative(f, c);
    res.argmax = c;
  }

  // Compass refinement around the grid argmax.
  double s = step;
  Complex at = res.argmax;
  double best = res.value;
  for (int it = 0; it < 200 && s > step * 1e-9; ++it) {
    bool moved = false;
    for (int dx = -1; dx <= 1; ++dx)
      for (int dy = -1; dy <= 1; ++dy) {
        if (!dx && !dy) continue;
        Complex z = at + Complex(dx * s, dy * s);
        if (!region.contains(z)) continue;
        double v = spherical_derivative(f, z);
        if (v > best) {
          best = v;
          at = z;
          moved = true;
        }
      }
    if (!moved) s *= 0.5;
  }
  res.value = best;
  res.argmax = at;
  return res;
}

}  // namespace brody
