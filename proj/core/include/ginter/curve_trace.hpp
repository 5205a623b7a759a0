#pragma once

#include <array>
#include <vector>

#include "ginter/poly.hpp"

namespace ginter {

enum class CurveKind { re, im };

struct Polyline {
  CurveKind kind;
  std::vector<std::array<double, 2>> points;  // always >= 2 points
};

/// Polyline approximations of the curves Re f = 0 and Im f = 0 over a
/// rectangle, extracted by marching squares with linear edge interpolation.
struct CurveSet {
  std::vector<Polyline> curves;
  std::array<double, 4> bbox{};  // x_min, x_max, y_min, y_max
  int resolution = 0;            // grid cells per axis
};

/// Samples f on a (resolution+1)^2 grid and contours both fields. Saddle
/// cells are disambiguated by the sign of f at the cell center.
/// resolution must lie in [16, 8192] and bbox must be nondegenerate.
CurveSet trace(const ComplexPoly& f, std::array<double, 4> bbox, int resolution);

/// All crossings between a Re-polyline segment and an Im-polyline segment,
/// deduplicated within tol. Crossings of each field with itself are not
/// reported. Returns {} when either family is absent.
std::vector<std::array<double, 2>> curve_intersections(const CurveSet& cs, double tol);

}  // namespace ginter
