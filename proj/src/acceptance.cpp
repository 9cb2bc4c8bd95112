// Copyright (c) 2026 the brodylab authors
// SPDX-License-Identifier: Apache-2.0
#include "brody/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "brody/curve.hpp"
#include "brody/curve_io.hpp"
#include "brody/dynmetrics.hpp"
#include "brody/elliptic.hpp"
#include "brody/energy.hpp"
#include "brody/gluing.hpp"
#include "brody/lattice.hpp"
#include "brody/nondegeneracy.hpp"
#include "brody/quadrature.hpp"
#include "brody/region.hpp"
#include "brody/types.hpp"

namespace brody {

double extremal_density_constant(double* error_estimate) {
  // I = Integral_1^inf dx / sqrt(x^3 - 1), with both ends regularized:
  // x = 1 + t^2 maps [1, 2] to t in [0, 1] with integrand 2 / sqrt(3 + 3t^2 + t^4);
  // x = v^-2 maps [2, inf) to v in (0, 1/sqrt(2)] with integrand 2 / sqrt(1 - v^6).
  QuadratureOptions o;
  o.rel_tol = 1e-13;
  o.abs_tol = 1e-14;
  o.parallel = false;
  QuadResult head = integrate_1d(
      [](double t) { return 2.0 / std::sqrt(3.0 + 3.0 * t * t + t * t * t * t); }, 0.0, 1.0, o);
  QuadResult tail = integrate_1d(
      [](double v) { return 2.0 / std::sqrt(1.0 - std::pow(v, 6)); }, 0.0,
      1.0 / std::sqrt(2.0), o);
  double I = head.value + tail.value;
  double V = 2.0 * kPi / (std::sqrt(3.0) * I * I);
  if (error_estimate)
    *error_estimate =
        2.0 * V / I * (head.error_estimate + tail.error_estimate) + 1e-15 * V;
  return V;
}

namespace {

using Clock = std::chrono::steady_clock;

struct CorpusEntry {
  std::string id;
  CurveMap curve;
};

struct Ctx {
  const AcceptanceOptions& opts;
  std::vector<CorpusEntry> corpus;
  std::ostream* log = nullptr;
};

std::vector<CorpusEntry> load_corpus(const std::string& data_dir) {
  std::string manifest_path = data_dir + "/curves/manifest.json";
  std::ifstream in(manifest_path);
  if (!in) throw ParseError("cannot open corpus manifest " + manifest_path);
  nlohmann::json m;
  try {
    in >> m;
  } catch (const std::exception& e) {
    throw ParseError(std::string("corpus manifest: ") + e.what());
  }
  if (!m.contains("corpus") || !m["corpus"].is_array())
    throw ParseError("corpus manifest: missing 'corpus' array");
  std::vector<CorpusEntry> out;
  for (const auto& item : m["corpus"]) {
    if (!item.contains("id") || !item.contains("file"))
      throw ParseError("corpus manifest: entries need 'id' and 'file'");
    out.push_back({item["id"].get<std::string>(),
                   load_curve(data_dir + "/curves/" + item["file"].get<std::string>())});
  }
  if (out.empty()) throw ParseError("corpus manifest lists no curves");
  return out;
}

const CurveMap& corpus_curve(const Ctx& ctx, const std::string& id) {
  for (const CorpusEntry& e : ctx.corpus)
    if (e.id == id) return e.curve;
  throw PreconditionViolated("corpus entry '" + id + "' is missing");
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

CriterionResult make_result(int id, const char* name) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  return r;
}

// 1. The closed-form constant, digit for digit.
CriterionResult crit_constant(Ctx&) {
  CriterionResult r = make_result(1, "extremal-density-constant");
  double err = 0;
  r.measured = extremal_density_constant(&err);
  r.target = 0.6150198678198;
  r.tol = 1e-9;
  r.pass = std::abs(r.measured - r.target) <= r.tol;
  r.detail = "quadrature error estimate " + fmt(err);
  return r;
}

// 2. Spherical-derivative closed forms for the identity chart and exp.
CriterionResult crit_closed_forms(Ctx& ctx) {
  CriterionResult r = make_result(2, "spherical-derivative-closed-forms");
  const CurveMap& lin = corpus_curve(ctx, "linear");
  const CurveMap& ex = corpus_curve(ctx, "exp_one");
  const int n = 33;  // 33 x 33 = 1089 >= 1000 samples
  double worst = 0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      Complex z(-4.0 + 8.0 * i / (n - 1), -4.0 + 8.0 * j / (n - 1));
      double dl = std::abs(spherical_derivative(lin, z) -
                           1.0 / (kSqrtPi * (1.0 + std::norm(z))));
      double de = std::abs(spherical_derivative(ex, z) -
                           1.0 / (2.0 * kSqrtPi * std::cosh(z.real())));
      worst = std::max({worst, dl, de});
    }
  r.measured = worst;
  r.target = 0;
  r.tol = 1e-10;
  r.pass = worst <= r.tol;
  r.detail = "worst deviation over a 1089-point grid on [-4,4]^2";
  return r;
}

// 3. Plane energy of a degree-d rational curve equals d.
CriterionResult crit_degree(Ctx& ctx) {
  CriterionResult r = make_result(3, "rational-degree-energy-identity");
  QuadratureOptions o;
  o.rel_tol = 1e-9;
  o.abs_tol = 1e-12;
  const double R = 1e4;
  const std::pair<const char*, double> cases[] = {{"linear", 1.0}, {"cubic", 3.0}};
  double worst = 0;
  std::string det;
  for (const auto& [id, d] : cases) {
    EnergyEstimate e = energy(corpus_curve(ctx, id), Region::disk({0, 0}, R), o);
    double tail = d / (1.0 + std::pow(R, 2.0 * d));
    double dev = std::abs(e.value + tail - d);
    worst = std::max(worst, dev);
    det += std::string(id) + " dev " + fmt(dev) + "; ";
  }
  r.measured = worst;
  r.target = 0;
  r.tol = 1e-6;
  r.pass = worst <= r.tol;
  r.detail = det + "cutoff 1e4 plus analytic tail";
  return r;
}

// 4. Characteristic closed form for the identity chart; growth bound corpus-wide.
CriterionResult crit_characteristic(Ctx& ctx) {
  CriterionResult r = make_result(4, "characteristic-closed-form-growth-bound");
  QuadratureOptions o;
  o.rel_tol = 1e-9;
  o.abs_tol = 1e-12;
  NsaProfile prof(corpus_curve(ctx, "linear"), 10.5, o);
  double worst = 0;
  for (double rr : {2.0, 3.0, 10.0})
    worst = std::max(worst,
                     std::abs(prof.T(rr) - 0.5 * std::log((1.0 + rr * rr) / 2.0)));
  QuadratureOptions ob;
  ob.rel_tol = 1e-6;
  ob.abs_tol = 1e-10;
  double worst_slack = -1e300;
  std::string worst_id;
  for (const CorpusEntry& e : ctx.corpus) {
    NsaProfile p(e.curve, 8.0, ob);
    for (double rr : {2.0, 4.0, 8.0}) {
      double slack = p.T(rr) - kPi * rr * rr / 2.0;
      if (slack > worst_slack) {
        worst_slack = slack;
        worst_id = e.id;
      }
    }
  }
  r.measured = worst;
  r.target = 0;
  r.tol = 1e-6;
  r.pass = worst <= r.tol && worst_slack <= 1e-9;
  r.detail = "worst T - pi r^2/2 over corpus " + fmt(worst_slack) + " (" + worst_id + ")";
  return r;
}

// 5. Exp profile decays >= 2x per window extension; the rescaled hexagonal
// elliptic curve stays flat and positive across three nested windows.
CriterionResult crit_dichotomy(Ctx& ctx) {
  CriterionResult r = make_result(5, "degeneracy-dichotomy");
  const CurveMap& eq = corpus_curve(ctx, "exp_quarter");
  std::vector<Region> wins_e = {Region::square({0, 0}, 8.0), Region::square({0, 0}, 16.0),
                                Region::square({0, 0}, 32.0)};
  NondegeneracyCertificate ce = nondegeneracy_profile(eq, 1.0, wins_e, 1.0, 1.0 / 16.0);
  double q1 = ce.trend[1].delta_hat / ce.trend[0].delta_hat;
  double q2 = ce.trend[2].delta_hat / ce.trend[1].delta_hat;
  bool exp_ok = q1 <= 0.5 && q2 <= 0.5 &&
                classify(ce, 0.05) == NondegVerdict::degenerate_trend;

  const CurveMap& wp = corpus_curve(ctx, "wp_hex_a");
  auto lat = period_lattice(wp);
  if (!lat) throw PreconditionViolated("wp_hex_a should expose a period lattice");
  double lam = lat->min_norm();
  std::vector<Region> wins_w = {Region::square({0, 0}, 2.0 * lam),
                                Region::square({0, 0}, 3.0 * lam),
                                Region::square({0, 0}, 4.0 * lam)};
  NondegeneracyCertificate cw = nondegeneracy_profile(wp, lam, wins_w);
  NondegVerdict vw = classify(cw, 0.05);
  bool wp_ok = cw.delta_hat() > 0.05 && vw == NondegVerdict::nondegenerate_at_scale;

  r.measured = std::max(q1, q2);
  r.target = 0.5;
  r.tol = 0;
  r.pass = exp_ok && wp_ok;
  r.detail = "exp delta-hats " + fmt(ce.trend[0].delta_hat) + "/" +
             fmt(ce.trend[1].delta_hat) + "/" + fmt(ce.trend[2].delta_hat) +
             "; elliptic delta-hat " + fmt(cw.delta_hat()) + ", verdict " + to_string(vw);
  return r;
}

// 6. Cell mean vs windowed Folner estimates, shape independence, and the
// quadratic rescaling law at c = 1/2.
CriterionResult crit_elliptic(Ctx& ctx) {
  CriterionResult r = make_result(6, "elliptic-density-consistency");
  const CurveMap& wa = corpus_curve(ctx, "wp_hex_a");
  const CurveMap& wb = corpus_curve(ctx, "wp_hex_b");
  auto la = period_lattice(wa);
  if (!la) throw PreconditionViolated("wp_hex_a should expose a period lattice");

  QuadratureOptions eo;
  eo.rel_tol = 1e-6;
  eo.abs_tol = 1e-12;
  double rho_cell = rho_elliptic(wa, *la, eo);
  double cell_area = la->area();

  // Disk-Folner estimate over a disk covering >= 36 lattice cells, in a
  // near-tight window so the translation sup stays close to the centered
  // placement.
  QuadratureOptions fo;
  fo.rel_tol = 1e-4;
  fo.abs_tol = 1e-8;
  double r_cells = std::sqrt(36.5 * cell_area / kPi);
  double cells = kPi * r_cells * r_cells / cell_area;
  FolnerSequence cell_seq{Region::Kind::disk, {r_cells}};
  Region win_a = Region::square({0, 0}, 2.0 * r_cells + 0.2);
  RhoEstimate ra = rho_estimate(wa, cell_seq, win_a, fo);
  double rho_disk = ra.points.back().rho_hat;
  double dev_cell = std::abs(rho_disk - rho_cell) / rho_cell;

  // Shape insensitivity: centered disk vs a square of equal area.  The
  // boundary strips of a shape of diameter L perturb the mean by O(1/L), so
  // this comparison runs at a larger scale than the cell-count check above.
  QuadratureOptions so;
  so.rel_tol = 1e-6;
  so.abs_tol = 1e-9;
  double r_shape = 30.0;
  double side = std::sqrt(kPi) * r_shape;
  double rho_big_disk =
      energy(wa, Region::disk({0, 0}, r_shape), so).value / (kPi * r_shape * r_shape);
  double rho_square = energy(wa, Region::square({0, 0}, side), so).value / (side * side);
  double dev_shape = std::abs(rho_big_disk - rho_square) / rho_big_disk;

  // f_c(z) = f(z/2): estimate at doubled radius in a doubled window, which is
  // the same Folner configuration under the change of variables.
  FolnerSequence half_seq{Region::Kind::disk, {2.0 * r_cells}};
  Region win_b = Region::square({0, 0}, 2.0 * win_a.size);
  RhoEstimate rb = rho_estimate(wb, half_seq, win_b, fo);
  double rho_half = rb.points.back().rho_hat;
  double dev_scale = std::abs(rho_half - 0.25 * rho_disk) / (0.25 * rho_disk);

  r.measured = std::max(dev_cell, dev_shape);
  r.target = 0;
  r.tol = 0.02;
  r.pass = cells >= 36.0 && dev_cell <= 0.02 && dev_shape <= 0.02 && dev_scale <= 0.01;
  r.detail = "cell-mean dev " + fmt(dev_cell) + ", disk/square dev " + fmt(dev_shape) +
             ", half-rescale dev " + fmt(dev_scale) + " (tol 0.01), disk covers " +
             fmt(cells) + " cells";
  return r;
}

// 7. The characteristic-based density proxy never exceeds the Folner proxy
// by more than 3%, corpus-wide.
CriterionResult crit_nsa_bound(Ctx& ctx) {
  CriterionResult r = make_result(7, "nsa-density-upper-bound");
  QuadratureOptions o;
  o.rel_tol = 1e-4;
  o.abs_tol = 1e-9;
  double worst = -1e300;
  std::string worst_id;
  bool ok = true;
  for (const CorpusEntry& e : ctx.corpus) {
    auto lat = period_lattice(e.curve);
    std::vector<double> sizes;
    double r_nsa = 0;
    if (lat) {
      double lam = lat->min_norm();
      sizes = {lam, 2.0 * lam, 3.0 * lam};
      r_nsa = 12.0 * lam;
    } else {
      sizes = {2.0, 4.0, 8.0, 12.0};
      r_nsa = 24.0;
    }
    // Centered-disk ladder: the tight-window Folner estimate (the only
    // admissible translate is the center, so the sup is the plain energy).
    double rho_hat = 0;
    for (double s : sizes)
      rho_hat = std::max(rho_hat,
                         energy(e.curve, Region::disk({0, 0}, s), o).value / (kPi * s * s));
    RhoNsaEstimate nsa = rho_nsa_estimate(e.curve, r_nsa, o);
    double excess = (nsa.value - rho_hat) / std::max(rho_hat, 1e-12);
    ok &= nsa.value <= 1.03 * rho_hat + 1e-9;
    if (excess > worst) {
      worst = excess;
      worst_id = e.id;
    }
    if (ctx.log)
      *ctx.log << "[accept]   nsa-bound " << e.id << ": rho_hat " << rho_hat << ", rho_nsa "
               << nsa.value << ", excess " << excess << "\n";
  }
  r.measured = worst;
  r.target = 0.03;
  r.tol = 0;
  r.pass = ok;
  r.detail = "worst relative excess at " + worst_id;
  return r;
}

// 8. Bump normalization: amplitude, peak value, and peak location.
CriterionResult crit_bump(Ctx&) {
  CriterionResult r = make_result(8, "bump-normalization");
  GluingConstants c = solve_constants(1, GluingMode::analytic);
  double a_closed = 12.0 * 12.0 * 12.0 * 4.0 / std::pow(kPi, 1.5);
  CurveMap q = bump_curve(c.a, 1);
  auto g = [&](double rr) { return spherical_derivative(q, Complex(rr, 0)); };
  double best_r = 0.05, best_v = 0;
  for (double rr = 0.05; rr <= 20.0 + 1e-12; rr += 0.05) {
    double v = g(rr);
    if (v > best_v) {
      best_v = v;
      best_r = rr;
    }
  }
  double lo = best_r - 0.05, hi = best_r + 0.05;
  for (int it = 0; it < 300; ++it) {
    double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (g(m1) < g(m2))
      lo = m1;
    else
      hi = m2;
  }
  double r_hat = 0.5 * (lo + hi);
  double v_hat = g(r_hat);
  double dev_r6 = std::abs(std::pow(r_hat, 6) - c.a * c.a / 2.0) / (c.a * c.a / 2.0);
  double dev_a = std::abs(c.a - a_closed) / a_closed;
  r.measured = v_hat;
  r.target = 1.0 / 12.0;
  r.tol = 1e-8;
  r.pass = std::abs(v_hat - r.target) <= r.tol && dev_r6 <= 1e-6 && dev_a <= 1e-6;
  r.detail = "a " + fmt(c.a) + ", rel dev vs closed form " + fmt(dev_a) +
             "; argmax r^6 rel dev " + fmt(dev_r6);
  return r;
}

// 9. Gluing conditions at desk scale, plus a falsification control.
CriterionResult crit_glue_verify(Ctx& ctx) {
  CriterionResult r = make_result(9, "glue-condition-verification");
  GluingConstants consts = solve_constants(1, GluingMode::empirical, 5.0);
  struct Case {
    const char* id;
    Complex p;
  };
  const Case cases[] = {{"constant", {0, 0}}, {"exp_quarter", {-40, 0}}};
  bool ok = true;
  std::string det;
  double measured_slope = 0;
  for (const Case& cs : cases) {
    const CurveMap& f = corpus_curve(ctx, cs.id);
    CurveMap g = glue_once(f, cs.p, 6.0, consts);
    GluingReport rep = verify_glue(f, g, cs.p, 6.0, consts.K, 48.0);
    // Condition (ii) decays faster than cubic here, so its fit is checked as
    // an inequality; condition (iii) is genuinely cubic and checked two-sided.
    bool case_ok = rep.cond1_pass && rep.cond3.bound_pass && rep.cond2.bound_pass &&
                   rep.cond3.slope >= -3.1 && rep.cond3.slope <= -2.9 &&
                   rep.cond2.slope <= -2.9;
    GluingReport ctrl = verify_glue(f, g, cs.p, 6.0, consts.K / 100.0, 48.0);
    case_ok &= !ctrl.pass();
    ok &= case_ok;
    if (std::string(cs.id) == "exp_quarter") measured_slope = rep.cond3.slope;
    det += std::string(cs.id) + ": sup " + fmt(rep.sup_disk) + ", slopes " +
           fmt(rep.cond2.slope) + "/" + fmt(rep.cond3.slope) + ", scaled sups " +
           fmt(rep.cond2.sup_scaled) + "/" + fmt(rep.cond3.sup_scaled) + "; ";
  }
  r.measured = measured_slope;
  r.target = -3.0;
  r.tol = 0.1;
  r.pass = ok;
  r.detail = det + "K " + fmt(consts.K) + ", control at K/100 rejected";
  return r;
}

// 10. Finite-window construction on e^{z/4} over a 5x5 tiling.
CriterionResult crit_construction(Ctx& ctx) {
  CriterionResult r = make_result(10, "finite-window-construction");
  const CurveMap& f = corpus_curve(ctx, "exp_quarter");
  GluingConstants consts = solve_constants(1, GluingMode::empirical, 47.0);
  TilingPlan plan = TilingPlan::spiral(48.0, 2);
  const double eps = 1e-4, tau = 0.9;
  MakeNondegResult res = make_nondegenerate(f, eps, tau, plan, consts);

  bool ok = true;
  int expected_bumps = 0;
  double min_after = 1e300, worst_drop = -1e300;
  for (const TileLogEntry& e : res.log) {
    bool should_glue = e.sup_f < res.delta;
    if (should_glue) ++expected_bumps;
    ok &= (e.kase == 3) == should_glue;
    if (!e.interior) continue;
    min_after = std::min(min_after, e.sup_after);
    ok &= e.sup_after >= res.delta / 2.0;
    double area = plan.tile(static_cast<size_t>(e.index)).area();
    double drop = e.energy_before - e.energy_after - eps * area;
    worst_drop = std::max(worst_drop, drop);
    ok &= drop <= 1e-5 * (std::abs(e.energy_before) + std::abs(e.energy_after)) + 1e-9;
  }
  ok &= res.bumps == expected_bumps;
  ok &= res.interior_sup <= res.interior_bound + 1e-6;

  MakeNondegResult rerun = make_nondegenerate(res.g, eps, tau, plan, consts);
  ok &= rerun.bumps == 0;

  r.measured = res.bumps;
  r.target = expected_bumps;
  r.tol = 0;
  r.pass = ok;
  r.detail = "interior sup " + fmt(res.interior_sup) + " <= " + fmt(res.interior_bound) +
             ", min interior tile sup " + fmt(min_after) + " vs delta/2 " +
             fmt(res.delta / 2.0) + ", worst energy drop beyond eps*area " +
             fmt(worst_drop) + ", rerun bumps " + std::to_string(rerun.bumps);
  return r;
}

// 11. Compact-open metric inequality on random corpus pairs.
CriterionResult crit_metric(Ctx& ctx) {
  CriterionResult r = make_result(11, "compact-open-metric-inequality");
  std::mt19937_64 rng(ctx.opts.seed);
  const size_t n = ctx.corpus.size();
  if (n < 2) throw PreconditionViolated("metric criterion needs at least two corpus curves");
  int violations = 0;
  double worst_margin = 1e300;
  for (int k = 0; k < 50; ++k) {
    size_t i = static_cast<size_t>(rng() % n);
    size_t j = static_cast<size_t>(rng() % n);
    while (j == i) j = static_cast<size_t>(rng() % n);
    DistanceResult d = curve_distance(ctx.corpus[i].curve, ctx.corpus[j].curve);
    double dev = std::abs(d.value - d.disk_sups.front());
    double bound = d.disk_sups.back() / 9.0 + d.sampling_slack + 1e-12;
    worst_margin = std::min(worst_margin, bound - dev);
    if (dev > bound) ++violations;
  }
  r.measured = violations;
  r.target = 0;
  r.tol = 0;
  r.pass = violations == 0;
  r.detail = "50 sampled pairs, smallest bound margin " + fmt(worst_margin);
  return r;
}

// 12. Every curve that passes the windowed Brody check has unit-square
// energy strictly below one.
CriterionResult crit_unit_square(Ctx& ctx) {
  CriterionResult r = make_result(12, "unit-square-energy-bound");
  QuadratureOptions o;
  o.rel_tol = 1e-8;
  o.abs_tol = 1e-12;
  double worst = 0;
  std::string worst_id;
  int verified = 0;
  bool ok = true;
  std::string det;
  for (const CorpusEntry& e : ctx.corpus) {
    SupResult s = sup_spherical_derivative(e.curve, Region::square({0, 0}, 120.0), 0.1);
    if (s.value <= 1.0 + 1e-9) {
      ++verified;
      double en = energy(e.curve, Region::square({0, 0}, 1.0), o).value;
      if (en > worst) {
        worst = en;
        worst_id = e.id;
      }
      ok &= en < 1.0;
    } else {
      det += e.id + std::string(" failed the Brody check (sup ") + fmt(s.value) + "); ";
    }
  }
  ok &= verified == static_cast<int>(ctx.corpus.size());
  r.measured = worst;
  r.target = 1.0;
  r.tol = 0;
  r.pass = ok;
  r.detail = det + std::to_string(verified) + "/" + std::to_string(ctx.corpus.size()) +
             " verified, largest unit-square energy at " + worst_id;
  return r;
}

struct RunOutput {
  int status = -1;
  std::string bytes;
};

RunOutput run_command(const std::string& cmd) {
  RunOutput out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return out;
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.bytes.append(buf, n);
  out.status = pclose(p);
  return out;
}

// 13. Re-running a fixed sub-suite must be byte-identical across repeats and
// across worker counts 1 and 8.
CriterionResult crit_determinism(Ctx& ctx) {
  CriterionResult r = make_result(13, "determinism");
  if (ctx.opts.self_command.empty()) {
    r.pass = false;
    r.detail = "no self command configured";
    return r;
  }
  std::string base = ctx.opts.self_command + " --criteria 1,2,8 --data-dir \"" +
                     ctx.opts.data_dir + "\" --seed " + std::to_string(ctx.opts.seed);
  RunOutput a = run_command(base + " --threads 1 2>/dev/null");
  RunOutput b = run_command(base + " --threads 1 2>/dev/null");
  RunOutput c = run_command(base + " --threads 8 2>/dev/null");
  int mismatches = int(a.bytes != b.bytes) + int(a.bytes != c.bytes);
  bool statuses_ok = a.status == 0 && b.status == 0 && c.status == 0;
  r.measured = mismatches;
  r.target = 0;
  r.tol = 0;
  r.pass = statuses_ok && mismatches == 0 && !a.bytes.empty();
  r.detail = "3 runs (threads 1,1,8) of criteria 1,2,8; " +
             std::to_string(a.bytes.size()) + " bytes each" +
             (statuses_ok ? "" : "; a run exited nonzero");
  return r;
}

constexpr const char* kNames[13] = {
    "extremal-density-constant",
    "spherical-derivative-closed-forms",
    "rational-degree-energy-identity",
    "characteristic-closed-form-growth-bound",
    "degeneracy-dichotomy",
    "elliptic-density-consistency",
    "nsa-density-upper-bound",
    "bump-normalization",
    "glue-condition-verification",
    "finite-window-construction",
    "compact-open-metric-inequality",
    "unit-square-energy-bound",
    "determinism",
};

using Runner = CriterionResult (*)(Ctx&);

struct RunnerEntry {
  Runner fn;
  double budget_seconds;  // 0 = no budget in the criterion statement
};

constexpr RunnerEntry kRunners[13] = {
    {crit_constant, 1.0},      {crit_closed_forms, 1.0}, {crit_degree, 30.0},
    {crit_characteristic, 0},  {crit_dichotomy, 120.0},  {crit_elliptic, 0},
    {crit_nsa_bound, 0},       {crit_bump, 0},           {crit_glue_verify, 120.0},
    {crit_construction, 300.0}, {crit_metric, 0},        {crit_unit_square, 0},
    {crit_determinism, 0},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts, std::ostream& table,
                                            std::ostream& log) {
  std::vector<int> ids = opts.criteria;
  if (ids.empty()) {
    ids.resize(13);
    std::iota(ids.begin(), ids.end(), 1);
  }
  for (int id : ids)
    if (id < 1 || id > 13) throw PreconditionViolated("criterion ids run from 1 to 13");

  Ctx ctx{opts, load_corpus(opts.data_dir), &log};

  std::vector<CriterionResult> out;
  int passed = 0;
  for (int id : ids) {
    auto t0 = Clock::now();
    CriterionResult res;
    try {
      res = kRunners[id - 1].fn(ctx);
    } catch (const std::exception& e) {
      res.id = id;
      res.name = kNames[id - 1];
      res.pass = false;
      res.detail = std::string("exception: ") + e.what();
    }
    res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    double budget = kRunners[id - 1].budget_seconds;
    if (budget > 0 && res.seconds > budget) {
      res.pass = false;
      res.detail += (res.detail.empty() ? "" : "; ");
      res.detail += "exceeded the time budget";
    }
    char buf[768];
    std::snprintf(buf, sizeof buf, "criterion %2d %-42s %s measured=%.12g target=%.12g tol=%.12g%s%s\n",
                  res.id, res.name.c_str(), res.pass ? "PASS" : "FAIL", res.measured,
                  res.target, res.tol, res.detail.empty() ? "" : " :: ", res.detail.c_str());
    table << buf;
    table.flush();
    log << "[accept] criterion " << res.id << " (" << res.name << "): "
        << (res.pass ? "PASS" : "FAIL") << " in " << fmt(res.seconds) << " s\n";
    log.flush();
    if (res.pass) ++passed;
    out.push_back(std::move(res));
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "acceptance: %d/%zu passed\n", passed, ids.size());
  table << buf;
  table.flush();
  return out;
}

}  // namespace brody
