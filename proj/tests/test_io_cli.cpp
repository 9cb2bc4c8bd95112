// Copyright (c) 2026 the brodylab authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "brody/curve.hpp"
#include "brody/curve_io.hpp"
#include "brody/lattice.hpp"
#include "brody/region.hpp"
#include "brody/types.hpp"

using namespace brody;

namespace {

std::string data_path(const std::string& rel) { return std::string(BRODY_DATA_DIR) + "/" + rel; }

struct CliResult {
  int status = -1;
  std::string out;
};

// Runs the CLI with stderr discarded and stdout captured.
CliResult run_cli(const std::string& args) {
  std::string cmd = std::string("\"") + BRODY_CLI_PATH + "\" " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
  int rc = pclose(pipe);
  r.status = (rc >= 0 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
  return r;
}

// Serialization is canonical: a parsed curve re-serializes to the same text,
// and the reloaded curve evaluates identically (shortest-round-trip number
// formatting keeps every double bit-exact).
void check_round_trip(const CurveMap& f) {
  std::string text = curve_to_json(f);
  CurveMap g = curve_from_json(text);
  CHECK(curve_to_json(g) == text);
  CHECK(g.dimension() == f.dimension());
  for (Complex z : {Complex(0.3, 0.7), Complex(-1.2, 0.4), Complex(2.0, 1.0)}) {
    CHECK(fs_distance(evaluate(f, z), evaluate(g, z)) <= 1e-12);
    CHECK(spherical_derivative(f, z) == spherical_derivative(g, z));
  }
}

double json_field(const std::string& line, const char* key) {
  auto doc = nlohmann::json::parse(line);
  REQUIRE(doc.contains(key));
  return doc.at(key).get<double>();
}

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

}  // namespace

TEST_CASE("curve json round-trip covers all six variants") {
  CurveMap rat = CurveMap::rational({{{0.5, -0.125}, {0.0, 0.0}, {3.0, 4.0}}, {{1.0, 0.0}, {0.0, -2.0}}});
  check_round_trip(rat);

  std::vector<ExpTerm> t1{{Complex(0.25, -1.0), 2, Complex(0.5, 0.25)},
                          {Complex(0.0, 1.0), 0, Complex(-1.0, 0.125)}};
  std::vector<ExpTerm> t2{{Complex(1.5, 0.0), 1, Complex(0.0, -0.75)}};
  CurveMap es = CurveMap::expsum({t1, t2});
  check_round_trip(es);

  Lattice hex({1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0});
  CurveMap wp = CurveMap::weierstrass(
      hex, {WpComponent::one, WpComponent::wp, WpComponent::wp_prime});
  check_round_trip(wp);

  CurveMap pre = wp.precompose(Complex(0.47, 0.13), Complex(-2.0, 0.7));
  check_round_trip(pre);

  auto [moved, U] = unitary_to_origin(es, Complex(1.0, 1.0));
  check_round_trip(moved);  // postcomposed over precomposed over expsum
  check_round_trip(es.postcompose(U));

  check_round_trip(load_curve(data_path("curves/glued_demo.json")));
}

TEST_CASE("save and load through a file reproduce the document") {
  CurveMap f = CurveMap::rational({{{0.0, 0.0}, {1.0, 0.0}}, {{1.0, 0.0}}});
  auto path = std::filesystem::temp_directory_path() / "brody_io_roundtrip.json";
  save_curve(f, path.string());
  CurveMap g = load_curve(path.string());
  CHECK(curve_to_json(g) == curve_to_json(f));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_curve(path.string()), ParseError);
}

TEST_CASE("every corpus file parses and re-serializes canonically") {
  int seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(data_path("curves"))) {
    if (entry.path().extension() != ".json" || entry.path().filename() == "manifest.json")
      continue;
    CurveMap f = load_curve(entry.path().string());
    CHECK(curve_to_json(curve_from_json(curve_to_json(f))) == curve_to_json(f));
    ++seen;
  }
  CHECK(seen >= 9);
}

TEST_CASE("malformed curve documents are rejected") {
  CHECK_THROWS_AS(curve_from_json("this is not json"), ParseError);
  CHECK_THROWS_AS(curve_from_json("[1, 2, 3]"), ParseError);
  CHECK_THROWS_AS(curve_from_json("{}"), ParseError);
  CHECK_THROWS_AS(curve_from_json(R"({"type": "heptagonal"})"), ParseError);
  CHECK_THROWS_AS(curve_from_json(R"({"type": "rational"})"), ParseError);
  CHECK_THROWS_AS(curve_from_json(R"({"type": "rational", "components": [[[1.0]]]})"),
                  ParseError);
  CHECK_THROWS_AS(curve_from_json(R"({"type": "expsum", "components": [[{"c": [1,0], "k": 0.5, "lambda": [0,0]}]]})"),
                  ParseError);
  CHECK_THROWS_AS(curve_from_json(R"({"type": "weierstrass", "lattice": {"omega1": [1,0], "omega2": [0.5]}, "components": ["wp"]})"),
                  ParseError);
  CHECK_THROWS_AS(curve_from_json(R"({"type": "weierstrass", "lattice": {"omega1": [1,0], "omega2": [0.5, 0.866]}, "components": ["cubed"]})"),
                  ParseError);
}

TEST_CASE("region documents and specs round-trip") {
  Region d = Region::disk({0.5, -2.0}, 3.25);
  Region d2 = region_from_json(region_to_json(d));
  CHECK(d2.kind == Region::Kind::disk);
  CHECK(d2.center == d.center);
  CHECK(d2.size == d.size);

  Region s = Region::square({-1.0, 4.0}, 10.0);
  Region s2 = region_from_json(region_to_json(s));
  CHECK(s2.kind == Region::Kind::square);
  CHECK(s2.center == s.center);
  CHECK(s2.size == s.size);

  Region p = parse_region_spec("disk:0.5,-2,3.25");
  CHECK(p.kind == Region::Kind::disk);
  CHECK(p.center == Complex(0.5, -2.0));
  CHECK(p.size == 3.25);
  Region q = parse_region_spec("square:0,0,10");
  CHECK(q.kind == Region::Kind::square);
  CHECK(q.size == 10.0);

  CHECK_THROWS_AS(parse_region_spec("triangle:1,2,3"), ParseError);
  CHECK_THROWS_AS(parse_region_spec("disk:1,2"), ParseError);
  CHECK_THROWS_AS(parse_region_spec("disk:a,b,c"), ParseError);
  CHECK_THROWS_AS(parse_region_spec(""), ParseError);
  CHECK_THROWS_AS(parse_region_spec("disk:0,0,-1"), ParseError);
}

TEST_CASE("cli eval and energy emit json-lines records") {
  CliResult ev = run_cli("eval --curve \"" + data_path("curves/constant.json") + "\" --z 0,0");
  CHECK(ev.status == 0);
  CHECK(json_field(first_line(ev.out), "value") == 0.0);

  CliResult en =
      run_cli("energy --curve \"" + data_path("curves/linear.json") + "\" --region disk:0,0,1");
  CHECK(en.status == 0);
  // The affine line z has energy R^2 / (1 + R^2) over a radius-R disk.
  CHECK(json_field(first_line(en.out), "value") == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("cli dist compares two curves") {
  CliResult dv = run_cli("dist --lhs \"" + data_path("curves/constant.json") + "\" --rhs \"" +
                         data_path("curves/linear.json") + "\"");
  CHECK(dv.status == 0);
  double value = json_field(first_line(dv.out), "value");
  CHECK(value > 0.0);
  CHECK(value <= std::sqrt(kPi) / 2.0 + 1e-12);
}

TEST_CASE("cli glue tile bumps every degenerate tile and saves a loadable curve") {
  auto saved = std::filesystem::temp_directory_path() / "brody_cli_tiled.json";
  CliResult gt = run_cli("glue tile --curve \"" + data_path("curves/constant.json") +
                         "\" --eps 1e-4 --tau 0.5 --window 3 --R 26 --mode empirical --r0 25" +
                         " --save \"" + saved.string() + "\"");
  CHECK(gt.status == 0);
  int tile_records = 0;
  std::string summary_line;
  std::istringstream lines(gt.out);
  for (std::string line; std::getline(lines, line);) {
    auto doc = nlohmann::json::parse(line);
    if (doc.at("op") == "glue_tile") {
      ++tile_records;
      CHECK(doc.at("case").get<int>() == 3);  // a constant curve is degenerate everywhere
    }
    if (doc.at("op") == "glue_tile_summary") summary_line = line;
  }
  CHECK(tile_records == 9);
  REQUIRE(!summary_line.empty());
  CHECK(json_field(summary_line, "bumps") == 9.0);

  CurveMap g = load_curve(saved.string());
  CHECK(std::holds_alternative<GluedData>(g.impl()));
  CHECK(std::get<GluedData>(g.impl()).bumps.size() == 9);
  std::filesystem::remove(saved);
}

TEST_CASE("cli failure modes use the documented exit codes") {
  CHECK(run_cli("eval --curve /nonexistent/curve.json --z 0,0").status == 2);
  CHECK(run_cli("energy --curve \"" + data_path("curves/linear.json") +
                "\" --region triangle:0,0,1")
            .status == 2);
  CHECK(run_cli("eval --curve \"" + data_path("curves/linear.json") + "\"").status != 0);
  CHECK(run_cli("no-such-subcommand").status != 0);
}

TEST_CASE("cli output is byte-identical across repeated runs") {
  std::string args =
      "energy --curve \"" + data_path("curves/exp_quarter.json") + "\" --region square:0,0,8";
  CliResult a = run_cli(args);
  CliResult b = run_cli(args);
  CHECK(a.status == 0);
  CHECK(!a.out.empty());
  CHECK(a.out == b.out);
}
