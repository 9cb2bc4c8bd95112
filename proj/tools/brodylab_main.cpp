// Copyright (c) 2026 the brodylab authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Subcommands wrap the library operations and emit
// JSON-lines records on stdout (or --out); every record embeds the full run
// configuration. Timings go to stderr only, so equal configurations produce
// byte-identical output streams. Exit codes: 0 success, 2 precondition
// violation (including bad flags and parse errors), 3 numerical
// non-convergence, 4 violated bound.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "brody/acceptance.hpp"
#include "brody/curve_io.hpp"
#include "brody/dynmetrics.hpp"
#include "brody/elliptic.hpp"
#include "brody/energy.hpp"
#include "brody/gluing.hpp"
#include "brody/nondegeneracy.hpp"
#include "brody/parallel.hpp"
#include "brody/types.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace brody;

Json cx(Complex z) { return Json::array({z.real(), z.imag()}); }

Json region_json(const Region& r) { return Json::parse(region_to_json(r)); }

Complex parse_complex_flag(const std::string& s) {
  std::istringstream in(s);
  double re = 0, im = 0;
  char sep = 0;
  if (!(in >> re)) throw ParseError("expected RE or RE,IM, got \"" + s + "\"");
  if (in >> sep) {
    if (sep != ',' || !(in >> im))
      throw ParseError("expected RE or RE,IM, got \"" + s + "\"");
  }
  char trailing;
  if (in >> trailing) throw ParseError("trailing characters in complex value \"" + s + "\"");
  return {re, im};
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("bad number \"" + item + "\" in list \"" + s + "\"");
    }
  }
  if (out.empty()) throw ParseError("empty number list");
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (double v : parse_double_list(s)) out.push_back(static_cast<int>(v));
  return out;
}

std::vector<Region> parse_region_list(const std::string& s) {
  std::vector<Region> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ';'))
    if (!item.empty()) out.push_back(parse_region_spec(item));
  if (out.empty()) throw ParseError("empty region list");
  return out;
}

// Run configuration serialized into every record.
Json g_config;
std::ostream* g_out = &std::cout;

void emit(Json record) {
  record["config"] = g_config;
  (*g_out) << record.dump() << '\n';
}

void dump_field_csv(const CurveMap& f, const Region& region, double step,
                    const std::string& path) {
  std::ofstream csv(path);
  if (!csv) throw ParseError("cannot write CSV file \"" + path + "\"");
  csv << "x,y,value\n";
  double h = region.half_extent();
  Complex c = region.center;
  int n = static_cast<int>(std::ceil(2 * h / step));
  char line[128];
  for (int iy = 0; iy <= n; ++iy)
    for (int ix = 0; ix <= n; ++ix) {
      Complex z(c.real() - h + ix * (2 * h / n), c.imag() - h + iy * (2 * h / n));
      if (!region.contains(z)) continue;
      std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", z.real(), z.imag(),
                    spherical_derivative(f, z));
      csv << line;
    }
}

QuadratureOptions quad_opts(int order, double rel, double abs) {
  QuadratureOptions q;
  if (order > 0) q.order = order;
  if (rel > 0) q.rel_tol = rel;
  if (abs > 0) q.abs_tol = abs;
  return q;
}

int run(int argc, char** argv) {
  CLI::App app{"numerical laboratory for holomorphic curves C -> CP^N"};
  app.require_subcommand(1);

  int threads = 0;
  std::uint64_t seed = 20260814;
  std::string out_path = "-";
  const char* env_dir = std::getenv("BRODY_DATA_DIR");
  std::string data_dir = env_dir ? env_dir : "data";
  app.add_option("--threads", threads, "worker threads (0 = hardware default)");
  app.add_option("--seed", seed, "seed for sampled grids");
  app.add_option("--out", out_path, "output file for JSON-lines records (- = stdout)");
  app.add_option("--data-dir", data_dir, "directory holding the curve corpus");

  auto* c_constants =
      app.add_subcommand("constants", "extremal mean energy density constant");
  c_constants->fallthrough();

  std::string curve_path, curve2_path, z_flag, region_flag, omega_flag;
  auto* c_eval = app.add_subcommand("eval", "evaluate a curve and its spherical derivative");
  c_eval->fallthrough();
  c_eval->add_option("--curve", curve_path, "curve file")->required();
  c_eval->add_option("--z", z_flag, "point RE,IM")->required();

  int q_order = 0;
  double q_rel = 0, q_abs = 0;
  auto* c_energy = app.add_subcommand("energy", "integral of |df|^2 over a region");
  c_energy->fallthrough();
  c_energy->add_option("--curve", curve_path, "curve file")->required();
  c_energy->add_option("--region", region_flag, "disk:CX,CY,R or square:CX,CY,SIDE")->required();
  c_energy->add_option("--order", q_order, "Gauss-Legendre order");
  c_energy->add_option("--rel-tol", q_rel, "relative tolerance");
  c_energy->add_option("--abs-tol", q_abs, "absolute tolerance");

  double field_step = 0.1;
  std::string csv_path;
  auto* c_field = app.add_subcommand("field", "CSV grid of |df| for plotting");
  c_field->fallthrough();
  c_field->add_option("--curve", curve_path, "curve file")->required();
  c_field->add_option("--region", region_flag, "grid region")->required();
  c_field->add_option("--step", field_step, "grid step");
  c_field->add_option("--csv", csv_path, "output CSV path")->required();

  double r_max = 0;
  std::string r_list_flag;
  auto* c_nsa = app.add_subcommand("nsa", "growth characteristic T(r) and its density proxy");
  c_nsa->fallthrough();
  c_nsa->add_option("--curve", curve_path, "curve file")->required();
  c_nsa->add_option("--r-max", r_max, "profile extent")->required();
  c_nsa->add_option("--r", r_list_flag, "radii r1,r2,... to report T(r) at");
  c_nsa->add_option("--order", q_order, "Gauss-Legendre order");
  c_nsa->add_option("--rel-tol", q_rel, "relative tolerance");
  c_nsa->add_option("--abs-tol", q_abs, "absolute tolerance");

  std::string shape_flag = "disk", sizes_flag;
  bool elliptic_flag = false;
  auto* c_rho = app.add_subcommand("rho", "windowed mean energy density estimates");
  c_rho->fallthrough();
  c_rho->add_option("--curve", curve_path, "curve file")->required();
  c_rho->add_option("--shape", shape_flag, "averaging shape: disk or square");
  c_rho->add_option("--sizes", sizes_flag, "shape sizes s1,s2,...");
  c_rho->add_option("--window", region_flag, "window the translated shapes must stay in");
  c_rho->add_flag("--elliptic", elliptic_flag, "also report the exact cell mean (periodic curves)");
  c_rho->add_option("--order", q_order, "Gauss-Legendre order");
  c_rho->add_option("--rel-tol", q_rel, "relative tolerance");
  c_rho->add_option("--abs-tol", q_abs, "absolute tolerance");

  double ndg_R = 0, center_step = 0, inner_res = 0, threshold = kDelta0;
  std::string windows_flag;
  auto* c_nondeg = app.add_subcommand("nondeg", "scale-qualified non-degeneracy trend");
  c_nondeg->fallthrough();
  c_nondeg->add_option("--curve", curve_path, "curve file")->required();
  c_nondeg->add_option("--R", ndg_R, "disk radius of the inner sup")->required();
  c_nondeg->add_option("--windows", windows_flag, "nested windows SPEC;SPEC;...")->required();
  c_nondeg->add_option("--center-step", center_step, "center grid step (default R/8)");
  c_nondeg->add_option("--inner-res", inner_res, "inner sup resolution (default R/64)");
  c_nondeg->add_option("--threshold", threshold, "verdict threshold");

  auto* c_glue = app.add_subcommand("glue", "attach normalized bumps");
  c_glue->require_subcommand(1);
  std::string p_flag, mode_flag = "analytic", save_path, order_flag = "spiral", field_prefix;
  double glue_R = 0, glue_r0 = 0, glue_K = 0, glue_r_out = 0, glue_eps = 0, glue_tau = 0;
  int window_tiles = 0;
  auto* c_once = c_glue->add_subcommand("once", "one bump at a quiet point");
  c_once->fallthrough();
  c_once->add_option("--curve", curve_path, "curve file")->required();
  c_once->add_option("--p", p_flag, "glue center RE,IM")->required();
  c_once->add_option("--R", glue_R, "quiet-disk radius (>= R0 + 1)")->required();
  c_once->add_option("--mode", mode_flag, "analytic or empirical");
  c_once->add_option("--r0", glue_r0, "empirical-mode R0");
  c_once->add_option("--K", glue_K, "empirical-mode far-field constant");
  c_once->add_option("--r-out", glue_r_out, "verify decay out to this radius");
  c_once->add_option("--save", save_path, "write the glued curve here");
  auto* c_tile = c_glue->add_subcommand("tile", "bump every degenerate tile of a window");
  c_tile->fallthrough();
  c_tile->add_option("--curve", curve_path, "curve file")->required();
  c_tile->add_option("--eps", glue_eps, "energy-defect budget per tile")->required();
  c_tile->add_option("--tau", glue_tau, "sup headroom: requires sup |df| <= 1 - tau")->required();
  c_tile->add_option("--window", window_tiles, "window width in tiles (odd)")->required();
  c_tile->add_option("--R", glue_R, "half tile side")->required();
  c_tile->add_option("--mode", mode_flag, "analytic or empirical");
  c_tile->add_option("--r0", glue_r0, "empirical-mode R0");
  c_tile->add_option("--K", glue_K, "empirical-mode far-field constant");
  c_tile->add_option("--order", order_flag, "tile order: spiral or rowmajor");
  c_tile->add_option("--save", save_path, "write the glued curve here");
  c_tile->add_option("--field-csv", field_prefix, "dump |df| grids PREFIX_before/after.csv");

  int n_max = 0;
  double dist_res = 0;
  auto* c_dist = app.add_subcommand("dist", "compactified distance between curves");
  c_dist->fallthrough();
  c_dist->add_option("--lhs", curve_path, "first curve file")->required();
  c_dist->add_option("--rhs", curve2_path, "second curve file")->required();
  c_dist->add_option("--omega", omega_flag, "translate window SPEC");
  c_dist->add_option("--n-max", n_max, "series truncation depth");
  c_dist->add_option("--resolution", dist_res, "disk sampling resolution");

  std::string criteria_flag;
  auto* c_accept = app.add_subcommand("acceptance", "run the acceptance suite");
  c_accept->fallthrough();
  c_accept->add_option("--criteria", criteria_flag, "subset, e.g. 1,2,8 (default all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (threads > 0) set_thread_count(threads);

  g_config = Json{{"tool", "brodylab"},
                  {"command", app.get_subcommands().front()->get_name()},
                  {"argv", std::vector<std::string>(argv + 1, argv + argc)},
                  {"threads", thread_count()},
                  {"seed", seed},
                  {"data_dir", data_dir},
                  {"out", out_path}};

  std::ofstream out_file;
  if (out_path != "-") {
    out_file.open(out_path);
    if (!out_file) throw ParseError("cannot open output file \"" + out_path + "\"");
    g_out = &out_file;
  }

  const auto t0 = std::chrono::steady_clock::now();
  const auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  if (*c_constants) {
    double err = 0;
    double value = extremal_density_constant(&err);
    emit(Json{{"op", "constants"},
              {"value", value},
              {"error_estimate", err},
              {"params", Json{{"method", "adaptive-gauss-legendre"},
                              {"substitutions", Json::array({"x=1+t^2", "x=v^-2"})}}}});
  } else if (*c_eval) {
    CurveMap f = load_curve(curve_path);
    Complex z = parse_complex_flag(z_flag);
    Lift L = lift(f, z);
    Json comps = Json::array();
    for (Eigen::Index i = 0; i < L.F.size(); ++i) comps.push_back(cx(L.F[i]));
    emit(Json{{"op", "eval"},
              {"curve", curve_path},
              {"z", cx(z)},
              {"value", spherical_derivative(f, z)},
              {"error_estimate", 0.0},
              {"lift", std::move(comps)},
              {"scale_exponent", L.scale_exponent},
              {"params", Json::object()}});
  } else if (*c_energy) {
    CurveMap f = load_curve(curve_path);
    Region region = parse_region_spec(region_flag);
    QuadratureOptions q = quad_opts(q_order, q_rel, q_abs);
    EnergyEstimate e = energy(f, region, q);
    emit(Json{{"op", "energy"},
              {"curve", curve_path},
              {"region", region_json(region)},
              {"value", e.value},
              {"error_estimate", e.error_estimate},
              {"params", Json{{"order", e.order}, {"depth", e.depth}, {"evals", e.evals},
                              {"rel_tol", q.rel_tol}, {"abs_tol", q.abs_tol}}}});
  } else if (*c_field) {
    CurveMap f = load_curve(curve_path);
    Region region = parse_region_spec(region_flag);
    if (!(field_step > 0)) throw PreconditionViolated("--step must be positive");
    dump_field_csv(f, region, field_step, csv_path);
    emit(Json{{"op", "field"},
              {"curve", curve_path},
              {"region", region_json(region)},
              {"value", sup_spherical_derivative(f, region, field_step).value},
              {"error_estimate", 0.0},
              {"csv", csv_path},
              {"params", Json{{"step", field_step}}}});
  } else if (*c_nsa) {
    CurveMap f = load_curve(curve_path);
    QuadratureOptions q = quad_opts(q_order, q_rel, q_abs);
    NsaProfile prof(f, r_max, q);
    if (!r_list_flag.empty())
      for (double r : parse_double_list(r_list_flag)) {
        double T = prof.T(r);
        emit(Json{{"op", "nsa"},
                  {"curve", curve_path},
                  {"r", r},
                  {"value", T},
                  {"A", prof.A(r)},
                  {"error_estimate", q.rel_tol * std::max(1.0, std::abs(T))},
                  {"params", Json{{"r_max", r_max}, {"rel_tol", q.rel_tol}}}});
      }
    RhoNsaEstimate rho = rho_nsa_estimate(f, r_max, q);
    emit(Json{{"op", "rho_nsa"},
              {"curve", curve_path},
              {"value", rho.value},
              {"error_estimate", q.rel_tol * std::max(1.0, rho.value)},
              {"r_at_max", rho.r_at_max},
              {"tail", Json::array({rho.r_lo, rho.r_hi})},
              {"params", Json{{"r_max", r_max}, {"rel_tol", q.rel_tol}}}});
  } else if (*c_rho) {
    CurveMap f = load_curve(curve_path);
    QuadratureOptions q = quad_opts(q_order, q_rel, q_abs);
    if (!sizes_flag.empty()) {
      if (region_flag.empty()) throw PreconditionViolated("rho needs --window with --sizes");
      Region window = parse_region_spec(region_flag);
      FolnerSequence fol(shape_flag == "square" ? Region::Kind::square : Region::Kind::disk,
                         parse_double_list(sizes_flag));
      RhoEstimate rho = rho_estimate(f, fol, window, q);
      for (const RhoPoint& p : rho.points)
        emit(Json{{"op", "rho"},
                  {"curve", curve_path},
                  {"shape", shape_flag},
                  {"size", p.size},
                  {"area", p.area},
                  {"sup_energy", p.sup_energy},
                  {"value", p.rho_hat},
                  {"error_estimate", q.rel_tol * std::max(1.0, p.rho_hat)},
                  {"argmax", cx(p.argmax)},
                  {"params", Json{{"window", region_json(window)}, {"rel_tol", q.rel_tol}}}});
      emit(Json{{"op", "rho_summary"},
                {"curve", curve_path},
                {"value", rho.points.back().rho_hat},
                {"error_estimate", q.rel_tol * std::max(1.0, rho.points.back().rho_hat)},
                {"last_rel_change", rho.last_rel_change},
                {"stabilized", rho.stabilized},
                {"params", Json{{"sizes", parse_double_list(sizes_flag)}}}});
    } else if (!elliptic_flag) {
      throw PreconditionViolated("rho needs --sizes, --elliptic, or both");
    }
    if (elliptic_flag) {
      std::optional<Lattice> lat = period_lattice(f);
      if (!lat)
        throw PreconditionViolated("no period lattice recoverable from the curve structure");
      double value = rho_elliptic(f, *lat, q);
      emit(Json{{"op", "rho_elliptic"},
                {"curve", curve_path},
                {"value", value},
                {"error_estimate", q.rel_tol * std::max(1.0, value)},
                {"params", Json{{"omega1", cx(lat->omega1())}, {"omega2", cx(lat->omega2())},
                                {"cell_area", lat->area()}}}});
    }
  } else if (*c_nondeg) {
    CurveMap f = load_curve(curve_path);
    NondegeneracyCertificate cert = nondegeneracy_profile(f, ndg_R, parse_region_list(windows_flag),
                                                          center_step, inner_res);
    for (const NondegPoint& p : cert.trend)
      emit(Json{{"op", "nondeg"},
                {"curve", curve_path},
                {"window", region_json(p.window)},
                {"value", p.delta_hat},
                {"error_estimate", 0.0},
                {"argmin", cx(p.argmin)},
                {"refined_sup", p.refined_sup},
                {"params", Json{{"R", cert.R}, {"center_step", cert.center_step},
                                {"inner_resolution", cert.inner_resolution}}}});
    emit(Json{{"op", "nondeg_verdict"},
              {"curve", curve_path},
              {"verdict", to_string(classify(cert, threshold))},
              {"value", cert.delta_hat()},
              {"error_estimate", 0.0},
              {"params", Json{{"threshold", threshold}}}});
  } else if (*c_once) {
    CurveMap f = load_curve(curve_path);
    Complex p = parse_complex_flag(p_flag);
    GluingMode mode = mode_flag == "empirical" ? GluingMode::empirical : GluingMode::analytic;
    GluingConstants consts = solve_constants(f.dimension(), mode, glue_r0, glue_K);
    CurveMap g = glue_once(f, p, glue_R, consts);
    if (!save_path.empty()) save_curve(g, save_path);
    emit(Json{{"op", "glue_once"},
              {"curve", curve_path},
              {"p", cx(p)},
              {"R", glue_R},
              {"mode", mode_flag},
              {"value", consts.a},
              {"error_estimate", 0.0},
              {"saved", save_path},
              {"params", Json{{"R0", consts.R0}, {"eps_glue", consts.eps_glue},
                              {"K", consts.K}, {"delta0", consts.delta0}}}});
    if (glue_r_out > glue_R) {
      GluingReport rep = verify_glue(f, g, p, glue_R, consts.K, glue_r_out);
      auto fit = [](const DecayFit& d) {
        return Json{{"slope", d.slope}, {"sup_scaled", d.sup_scaled},
                    {"bound_pass", d.bound_pass}};
      };
      emit(Json{{"op", "verify_glue"},
                {"curve", curve_path},
                {"value", rep.sup_disk},
                {"error_estimate", 0.0},
                {"cond1_pass", rep.cond1_pass},
                {"cond2", fit(rep.cond2)},
                {"cond3", fit(rep.cond3)},
                {"pass", rep.pass()},
                {"params", Json{{"r_out", rep.r_out}, {"K", rep.K}, {"delta0", rep.delta0},
                                {"n_circles", rep.n_circles}, {"n_rays", rep.n_rays}}}});
    }
  } else if (*c_tile) {
    CurveMap f = load_curve(curve_path);
    if (window_tiles < 1 || window_tiles % 2 == 0)
      throw PreconditionViolated("--window must be a positive odd tile count");
    GluingMode mode = mode_flag == "empirical" ? GluingMode::empirical : GluingMode::analytic;
    GluingConstants consts = solve_constants(f.dimension(), mode, glue_r0, glue_K);
    TilingPlan plan = order_flag == "rowmajor" ? TilingPlan::row_major(glue_R, window_tiles / 2)
                                               : TilingPlan::spiral(glue_R, window_tiles / 2);
    if (!field_prefix.empty())
      dump_field_csv(f, plan.bounding_window(), glue_R / 16, field_prefix + "_before.csv");
    MakeNondegResult res = make_nondegenerate(f, glue_eps, glue_tau, plan, consts);
    if (!field_prefix.empty())
      dump_field_csv(res.g, plan.bounding_window(), glue_R / 16, field_prefix + "_after.csv");
    if (!save_path.empty()) save_curve(res.g, save_path);
    for (const TileLogEntry& e : res.log) {
      Json rec{{"op", "glue_tile"},
               {"tile", e.index},
               {"case", e.kase},
               {"center", cx(plan.center(static_cast<std::size_t>(e.index)))},
               {"interior", e.interior},
               {"sup_f", e.sup_f},
               {"sup_before", e.sup_cur},
               {"sup_after", e.sup_after},
               {"value", e.sup_after},
               {"error_estimate", 0.0}};
      rec["energy_before"] = e.interior ? Json(e.energy_before) : Json();
      rec["energy_after"] = e.interior ? Json(e.energy_after) : Json();
      emit(std::move(rec));
    }
    emit(Json{{"op", "glue_tile_summary"},
              {"curve", curve_path},
              {"value", res.interior_sup},
              {"error_estimate", 0.0},
              {"bumps", res.bumps},
              {"delta", res.delta},
              {"interior_bound", res.interior_bound},
              {"tail_bound", res.tail_bound},
              {"saved", save_path},
              {"params", Json{{"eps", res.eps}, {"tau", res.tau}, {"R", plan.R},
                              {"tiles", plan.order.size()}, {"order", order_flag},
                              {"R0", consts.R0}, {"K", consts.K}, {"a", consts.a}}}});
  } else if (*c_dist) {
    CurveMap g = load_curve(curve_path);
    CurveMap h = load_curve(curve2_path);
    DistanceOptions d;
    if (n_max > 0) d.n_max = n_max;
    if (dist_res > 0) d.resolution = dist_res;
    if (omega_flag.empty()) {
      DistanceResult r = curve_distance(g, h, d);
      emit(Json{{"op", "dist"},
                {"g", curve_path},
                {"h", curve2_path},
                {"value", r.value},
                {"error_estimate", r.tail_bound + r.sampling_slack},
                {"tail_bound", r.tail_bound},
                {"sampling_slack", r.sampling_slack},
                {"disk_sups", r.disk_sups},
                {"params", Json{{"n_max", d.n_max}, {"resolution", d.resolution}}}});
    } else {
      Region omega = parse_region_spec(omega_flag);
      OmegaDistanceResult w = dist_omega(g, h, omega, d);
      emit(Json{{"op", "dist_omega"},
                {"g", curve_path},
                {"h", curve2_path},
                {"omega", region_json(omega)},
                {"value", w.value},
                {"error_estimate", w.tail_bound + w.sampling_slack},
                {"argmax", cx(w.argmax)},
                {"grid_step", w.grid_step},
                {"params", Json{{"n_max", d.n_max}, {"resolution", d.resolution}}}});
      InequalityCheck k = dist_inequality_check(g, h, omega, d);
      emit(Json{{"op", "dist_inequality"},
                {"g", curve_path},
                {"h", curve2_path},
                {"omega", region_json(omega)},
                {"value", k.deviation},
                {"error_estimate", 0.0},
                {"omega_distance", k.omega_distance},
                {"sup_omega", k.sup_omega},
                {"bound", k.bound},
                {"margin", k.margin},
                {"pass", k.pass},
                {"params", Json{{"n_max", d.n_max}, {"resolution", d.resolution}}}});
    }
  } else if (*c_accept) {
    AcceptanceOptions o;
    o.data_dir = data_dir;
    o.self_command = std::string("\"") + argv[0] + "\" acceptance";
    o.seed = seed;
    if (!criteria_flag.empty()) o.criteria = parse_int_list(criteria_flag);
    std::vector<CriterionResult> results = run_acceptance(o, *g_out, std::cerr);
    bool ok = !results.empty();
    for (const CriterionResult& r : results) ok = ok && r.pass;
    std::fprintf(stderr, "[time] acceptance: %.2f s\n", elapsed());
    return ok ? 0 : 1;
  }

  std::fprintf(stderr, "[time] %s: %.2f s\n",
               app.get_subcommands().front()->get_name().c_str(), elapsed());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const brody::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
