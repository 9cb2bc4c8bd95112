// Copyright (c) 2026 the brodylab authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "brody/types.hpp"

namespace brody {

// Disk (center, radius) or axis-aligned square (center, side).
struct Region {
  enum class Kind { disk, square };

  Kind kind = Kind::disk;
  Complex center{0.0, 0.0};
  double size = 1.0;  // radius for disks, full side length for squares

  static Region disk(Complex center, double radius) { return {Kind::disk, center, radius}; }
  static Region square(Complex center, double side) { return {Kind::square, center, side}; }
  static Region square_corner(Complex corner, double side) {
    return {Kind::square, corner + Complex(side / 2, side / 2), side};
  }

  double area() const {
    return kind == Kind::disk ? kPi * size * size : size * size;
  }
  // Half-width of the bounding box around center.
  double half_extent() const { return kind == Kind::disk ? size : size / 2; }
  bool contains(Complex z) const {
    Complex d = z - center;
    if (kind == Kind::disk) return std::abs(d) <= size;
    double h = size / 2;
    return std::abs(d.real()) <= h && std::abs(d.imag()) <= h;
  }
  Region translated(Complex a) const { return {kind, center + a, size}; }
  Region scaled(double c) const { return {kind, center * c, size * c}; }
};

// Increasing family of averaging shapes; boundary/area ratio must decay
// along the list for the averages to stabilize.
struct FolnerSequence {
  Region::Kind shape = Region::Kind::disk;
  std::vector<double> sizes;

  FolnerSequence(Region::Kind s, std::vector<double> sz);
  Region region_at(std::size_t i, Complex center = {0, 0}) const;
  // r-thickened boundary area over area, the quantity that must vanish.
  double boundary_ratio(std::size_t i, double r) const;
};

}  // namespace brody
