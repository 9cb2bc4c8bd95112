// Copyright (c) 2026 the brodylab authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "brody/curve.hpp"
#include "brody/region.hpp"

namespace brody {

// JSON curve descriptions. Every document is an object whose "type" field
// names one of the six curve variants; the remaining fields carry that
// variant's parameters. Complex scalars are written as [re, im] pairs,
// unitary matrices as row-major arrays of such pairs. The full schema is
// documented in README.md; save followed by load reproduces the curve
// exactly (same variant tree, bit-identical parameters).
std::string curve_to_json(const CurveMap& f, int indent = 2);
CurveMap curve_from_json(const std::string& text);  // throws ParseError

CurveMap load_curve(const std::string& path);  // throws ParseError
void save_curve(const CurveMap& f, const std::string& path);

// Region documents: {"shape": "disk", "center": [re, im], "radius": r} or
// {"shape": "square", "center": [re, im], "side": s}.
std::string region_to_json(const Region& region);
Region region_from_json(const std::string& text);  // throws ParseError

// Compact command-line spelling: "disk:CX,CY,RADIUS" or
// "square:CX,CY,SIDE" (e.g. "square:0,0,10").
Region parse_region_spec(const std::string& spec);  // throws ParseError

}  // namespace brody
