// Copyright (c) 2026 the brodylab authors
// SPDX-License-Identifier: Apache-2.0
#include "brody/curve_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "brody/types.hpp"

namespace brody {
namespace {

using Json = nlohmann::ordered_json;

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError(what + ": expected a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json matrix_to_json(const CMat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMat matrix_from_json(const Json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw ParseError(what + ": expected an array of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  CMat m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      throw ParseError(what + ": matrix must be square");
    for (Eigen::Index k = 0; k < n; ++k)
      m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)],
                                  what + " entry (" + std::to_string(i) + "," +
                                      std::to_string(k) + ")");
  }
  return m;
}

const Json& require(const Json& j, const char* field) {
  auto it = j.find(field);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + field + "\"");
  return *it;
}

const char* wp_component_name(WpComponent c) {
  switch (c) {
    case WpComponent::one: return "one";
    case WpComponent::wp: return "wp";
    case WpComponent::wp_prime: return "wp_prime";
  }
  throw ParseError("unknown weierstrass component");
}

WpComponent wp_component_from_name(const std::string& s) {
  if (s == "one") return WpComponent::one;
  if (s == "wp") return WpComponent::wp;
  if (s == "wp_prime") return WpComponent::wp_prime;
  throw ParseError("weierstrass component must be one of \"one\", \"wp\", \"wp_prime\", got \"" +
                   s + "\"");
}

Json curve_to_json_impl(const CurveMap& f);

struct Writer {
  Json operator()(const RationalData& d) const {
    Json comps = Json::array();
    for (const auto& poly : d.comps) {
      Json coeffs = Json::array();
      for (Complex c : poly) coeffs.push_back(complex_to_json(c));
      comps.push_back(std::move(coeffs));
    }
    return Json{{"type", "rational"}, {"components", std::move(comps)}};
  }
  Json operator()(const ExpSumData& d) const {
    Json comps = Json::array();
    for (const auto& comp : d.comps) {
      Json terms = Json::array();
      for (const ExpTerm& t : comp)
        terms.push_back(Json{{"c", complex_to_json(t.c)},
                             {"k", t.k},
                             {"lambda", complex_to_json(t.lambda)}});
      comps.push_back(std::move(terms));
    }
    return Json{{"type", "expsum"}, {"components", std::move(comps)}};
  }
  Json operator()(const WeierstrassData& d) const {
    Json comps = Json::array();
    for (WpComponent c : d.comps) comps.push_back(wp_component_name(c));
    return Json{{"type", "weierstrass"},
                {"lattice", Json{{"omega1", complex_to_json(d.lattice.omega1())},
                                 {"omega2", complex_to_json(d.lattice.omega2())}}},
                {"components", std::move(comps)}};
  }
  Json operator()(const PrecomposedData& d) const {
    return Json{{"type", "precomposed"},
                {"base", curve_to_json_impl(*d.base)},
                {"c", complex_to_json(d.c)},
                {"b", complex_to_json(d.b)}};
  }
  Json operator()(const PostcomposedData& d) const {
    return Json{{"type", "postcomposed"},
                {"base", curve_to_json_impl(*d.base)},
                {"unitary", matrix_to_json(d.U)}};
  }
  Json operator()(const GluedData& d) const {
    Json bumps = Json::array();
    for (const GluedBump& b : d.bumps)
      bumps.push_back(Json{{"p", complex_to_json(b.p)},
                           {"a", b.a},
                           {"unitary", matrix_to_json(b.U)}});
    return Json{{"type", "glued"},
                {"base", curve_to_json_impl(*d.base)},
                {"bumps", std::move(bumps)}};
  }
};

Json curve_to_json_impl(const CurveMap& f) { return std::visit(Writer{}, f.impl()); }

CurveMap curve_from_json_impl(const Json& j) {
  if (!j.is_object()) throw ParseError("curve description must be a JSON object");
  const Json& type = require(j, "type");
  if (!type.is_string()) throw ParseError("\"type\" must be a string");
  const std::string kind = type.get<std::string>();

  if (kind == "rational") {
    const Json& comps = require(j, "components");
    if (!comps.is_array()) throw ParseError("rational: \"components\" must be an array");
    std::vector<std::vector<Complex>> out;
    for (const Json& poly : comps) {
      if (!poly.is_array()) throw ParseError("rational: each component is a coefficient array");
      std::vector<Complex> coeffs;
      for (const Json& c : poly) coeffs.push_back(complex_from_json(c, "rational coefficient"));
      out.push_back(std::move(coeffs));
    }
    return CurveMap::rational(std::move(out));
  }

  if (kind == "expsum") {
    const Json& comps = require(j, "components");
    if (!comps.is_array()) throw ParseError("expsum: \"components\" must be an array");
    std::vector<std::vector<ExpTerm>> out;
    for (const Json& comp : comps) {
      if (!comp.is_array()) throw ParseError("expsum: each component is an array of terms");
      std::vector<ExpTerm> terms;
      for (const Json& t : comp) {
        if (!t.is_object()) throw ParseError("expsum: each term is an object {c, k, lambda}");
        ExpTerm term;
        term.c = complex_from_json(require(t, "c"), "expsum term c");
        const Json& k = require(t, "k");
        if (!k.is_number_integer()) throw ParseError("expsum term k must be an integer");
        term.k = k.get<int>();
        term.lambda = complex_from_json(require(t, "lambda"), "expsum term lambda");
        terms.push_back(term);
      }
      out.push_back(std::move(terms));
    }
    return CurveMap::expsum(std::move(out));
  }

  if (kind == "weierstrass") {
    const Json& lat = require(j, "lattice");
    if (!lat.is_object()) throw ParseError("weierstrass: \"lattice\" must be an object");
    Lattice lattice = [&] {
      if (lat.contains("hexagonal")) {
        const Json& s = lat["hexagonal"];
        if (!s.is_number()) throw ParseError("lattice \"hexagonal\" must be a scale");
        return Lattice::hexagonal(s.get<double>());
      }
      return Lattice(complex_from_json(require(lat, "omega1"), "lattice omega1"),
                     complex_from_json(require(lat, "omega2"), "lattice omega2"));
    }();
    std::vector<WpComponent> comps = {WpComponent::one, WpComponent::wp};
    if (j.contains("components")) {
      const Json& names = j["components"];
      if (!names.is_array()) throw ParseError("weierstrass: \"components\" must be an array");
      comps.clear();
      for (const Json& n : names) {
        if (!n.is_string()) throw ParseError("weierstrass component names must be strings");
        comps.push_back(wp_component_from_name(n.get<std::string>()));
      }
    }
    return CurveMap::weierstrass(lattice, std::move(comps));
  }

  if (kind == "precomposed") {
    CurveMap base = curve_from_json_impl(require(j, "base"));
    Complex c = complex_from_json(require(j, "c"), "precomposed c");
    Complex b = complex_from_json(require(j, "b"), "precomposed b");
    return base.precompose(c, b);
  }

  if (kind == "postcomposed") {
    CurveMap base = curve_from_json_impl(require(j, "base"));
    return base.postcompose(matrix_from_json(require(j, "unitary"), "postcomposed unitary"));
  }

  if (kind == "glued") {
    CurveMap cur = curve_from_json_impl(require(j, "base"));
    const Json& bumps = require(j, "bumps");
    if (!bumps.is_array()) throw ParseError("glued: \"bumps\" must be an array");
    for (const Json& b : bumps) {
      if (!b.is_object()) throw ParseError("glued: each bump is an object {p, a, unitary}");
      GluedBump bump;
      bump.p = complex_from_json(require(b, "p"), "bump p");
      const Json& a = require(b, "a");
      if (!a.is_number()) throw ParseError("bump amplitude \"a\" must be a number");
      bump.a = a.get<double>();
      bump.U = matrix_from_json(require(b, "unitary"), "bump unitary");
      cur = cur.with_bump(bump);
    }
    return cur;
  }

  throw ParseError("unknown curve type \"" + kind + "\"");
}

Json parse_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(what + ": " + e.what());
  }
}

}  // namespace

std::string curve_to_json(const CurveMap& f, int indent) {
  return curve_to_json_impl(f).dump(indent);
}

CurveMap curve_from_json(const std::string& text) {
  return curve_from_json_impl(parse_text(text, "curve description"));
}

CurveMap load_curve(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open curve file \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return curve_from_json(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_curve(const CurveMap& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write curve file \"" + path + "\"");
  out << curve_to_json(f) << '\n';
}

std::string region_to_json(const Region& region) {
  Json j{{"shape", region.kind == Region::Kind::disk ? "disk" : "square"},
         {"center", complex_to_json(region.center)}};
  j[region.kind == Region::Kind::disk ? "radius" : "side"] = region.size;
  return j.dump();
}

namespace {

Region checked_region(Region::Kind kind, Complex center, double size) {
  if (!std::isfinite(center.real()) || !std::isfinite(center.imag()) || !std::isfinite(size))
    throw ParseError("region parameters must be finite");
  if (size <= 0)
    throw ParseError(kind == Region::Kind::disk ? "disk radius must be positive"
                                                : "square side must be positive");
  return {kind, center, size};
}

}  // namespace

Region region_from_json(const std::string& text) {
  Json j = parse_text(text, "region");
  if (!j.is_object()) throw ParseError("region must be a JSON object");
  const Json& shape = require(j, "shape");
  if (!shape.is_string()) throw ParseError("region \"shape\" must be a string");
  const std::string kind = shape.get<std::string>();
  Complex center = complex_from_json(require(j, "center"), "region center");
  if (kind == "disk") {
    const Json& r = require(j, "radius");
    if (!r.is_number()) throw ParseError("disk \"radius\" must be a number");
    return checked_region(Region::Kind::disk, center, r.get<double>());
  }
  if (kind == "square") {
    const Json& s = require(j, "side");
    if (!s.is_number()) throw ParseError("square \"side\" must be a number");
    return checked_region(Region::Kind::square, center, s.get<double>());
  }
  throw ParseError("region shape must be \"disk\" or \"square\", got \"" + kind + "\"");
}

Region parse_region_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw ParseError("region spec must look like disk:CX,CY,R or square:CX,CY,SIDE, got \"" +
                     spec + "\"");
  const std::string kind = spec.substr(0, colon);
  if (kind != "disk" && kind != "square")
    throw ParseError("region spec must start with disk: or square:, got \"" + spec + "\"");
  double v[3];
  std::istringstream in(spec.substr(colon + 1));
  for (int i = 0; i < 3; ++i) {
    char sep = ',';
    if (!(in >> v[i]) || (i < 2 && !(in >> sep && sep == ',')))
      throw ParseError("region spec needs three comma-separated numbers, got \"" + spec + "\"");
  }
  char trailing;
  if (in >> trailing) throw ParseError("trailing characters in region spec \"" + spec + "\"");
  return checked_region(kind == "disk" ? Region::Kind::disk : Region::Kind::square,
                        {v[0], v[1]}, v[2]);
}

}  // namespace brody
