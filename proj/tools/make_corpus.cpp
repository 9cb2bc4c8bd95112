// Copyright (c) 2026 the brodylab authors
// SPDX-License-Identifier: Apache-2.0
//
// Regenerates the reference curve corpus under data/curves. The corpus is
// committed; this tool documents exactly how each file was produced and
// lets it be rebuilt after a schema change. Usage: make_corpus [DIR]
#include <complex>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

#include "brody/curve_io.hpp"
#include "brody/elliptic.hpp"
#include "brody/gluing.hpp"

using namespace brody;

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "data/curves";
  nlohmann::ordered_json manifest;
  manifest["corpus"] = nlohmann::ordered_json::array();
  auto emit = [&](const std::string& id, const CurveMap& f, const std::string& notes) {
    save_curve(f, dir + "/" + id + ".json");
    manifest["corpus"].push_back({{"id", id}, {"file", id + ".json"}, {"notes", notes}});
    std::cout << "wrote " << id << ".json\n";
  };

  emit("constant", CurveMap::constant(ProjectivePoint::affine({{0.25, 0.5}})),
       "constant map to [1 : 0.25+0.5i]");
  emit("linear", CurveMap::rational({{{1, 0}}, {{0, 0}, {1, 0}}}),
       "identity chart z -> [1 : z], degree 1");
  emit("cubic", CurveMap::rational({{{1, 0}}, {{0, 0}, {0, 0}, {0, 0}, {1, 0}}}),
       "z -> [1 : z^3], degree 3");
  emit("exp_one", CurveMap::expsum({{{{1, 0}, 0, {1, 0}}}}), "z -> [1 : e^z]");
  CurveMap exp_quarter = CurveMap::expsum({{{{1, 0}, 0, {0.25, 0}}}});
  emit("exp_quarter", exp_quarter, "z -> [1 : e^{z/4}]");

  // Hexagonal Weierstrass family at three scales. The base lattice is
  // rescaled so the measured spherical-derivative sup over one cell is
  // 0.95 (comfortably inside the Brody range); the two coarser entries
  // halve the scale each step, quartering the mean energy density.
  Lattice L = hexagonal_lattice(1.0);
  CurveMap wp = CurveMap::weierstrass(L);
  auto [wp_a, c] = brody_rescale(wp, Region::square({0, 0}, std::abs(L.period1())), 0.95);
  std::cout << "hexagonal rescale factor c = " << c << "\n";
  CurveMap wp_b = wp_a.precompose({0.5, 0});
  CurveMap wp_c = wp_b.precompose({0.5, 0});
  emit("wp_hex_a", wp_a, "[1 : p] on the hexagonal lattice, rescaled to sup |df| = 0.95");
  emit("wp_hex_b", wp_b, "wp_hex_a at half scale");
  emit("wp_hex_c", wp_c, "wp_hex_a at quarter scale");

  // One glued curve: a normalized bump attached to e^{z/4} deep in its
  // quiet left half-plane, empirical constants at desk scale.
  GluingConstants consts = solve_constants(1, GluingMode::empirical, 5.0);
  emit("glued_demo", glue_once(exp_quarter, {-40, 0}, 6.0, consts),
       "exp_quarter with one bump glued at p = -40 (empirical mode, R0 = 5, R = 6)");

  std::ofstream out(dir + "/manifest.json");
  out << manifest.dump(2) << '\n';
  std::cout << "wrote manifest.json (" << manifest["corpus"].size() << " curves)\n";
  return 0;
}
