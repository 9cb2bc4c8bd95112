// Copyright (c) 2026 the brodylab authors
// SPDX-License-Identifier: Apache-2.0
#include "brody/region.hpp"

namespace brody {

FolnerSequence::FolnerSequence(Region::Kind s, std::vector<double> sz)
    : shape(s), sizes(std::move(sz)) {
  if (sizes.empty()) throw PreconditionViolated("folner sequence must be non-empty");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] <= 0) throw PreconditionViolated("folner sizes must be positive");
    if (i && sizes[i] <= sizes[i - 1])
      throw PreconditionViolated("folner sizes must be strictly increasing");
  }
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (boundary_ratio(i, 1.0) > boundary_ratio(i - 1, 1.0) + 1e-12)
      throw PreconditionViolated("folner boundary/area ratio must decay");
  }
}

Region FolnerSequence::region_at(std::size_t i, Complex center) const {
  if (i >= sizes.size()) throw PreconditionViolated("folner index out of range");
  return {shape, center, sizes[i]};
}

double FolnerSequence::boundary_ratio(std::size_t i, double r) const {
  double s = sizes[i];
  double per = shape == Region::Kind::disk ? 2 * kPi * s : 4 * s;
  double area = shape == Region::Kind::disk ? kPi * s * s : s * s;
  return r * per / area;
}

}  // namespace brody
