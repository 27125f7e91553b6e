#pragma once

// Exact convex hulls on integer coordinates. Rational input is scaled by the
// lcm of all denominators first; orientation signs are scale invariant.

#include <array>
#include <span>
#include <vector>

#include "qf/polytope.hpp"

namespace qf::detail {

using IPoint = std::array<BigInt, 3>;  // z = 0 in the plane

struct ScaledPoints {
  std::vector<IPoint> points;
  BigInt scale;  // original = points / scale
};

ScaledPoints to_integer(std::span<const Point> points, int dim);

struct PlaneGroup {
  IPoint normal;  // primitive, outward
  BigInt offset;  // <normal, p> <= offset for integer points
};

struct HullResult {
  int affine_dim = 0;
  std::vector<std::size_t> vertices;  // extreme input indices
  std::vector<std::size_t> ring;      // planar, full-dimensional: ccw vertex cycle
  std::vector<std::array<std::size_t, 3>> triangles;  // spatial, full-dimensional: outward
  std::vector<PlaneGroup> facets;     // full-dimensional only
};

HullResult hull(const std::vector<IPoint>& points, int dim);

}  // namespace qf::detail
