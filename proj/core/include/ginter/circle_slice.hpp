#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "ginter/poly.hpp"

namespace ginter {

/// Zero structure of Re f and Im f restricted to the circle |z| = r, for a
/// monic real-coefficient f of degree N. On the circle,
///   Re f(r e^{i t}) = p(cos t)   and   Im f(r e^{i t}) = sin t * q(cos t),
/// so the angular zero sets reduce to real roots of p and q in (-1, 1).
struct CircleSection {
  double r = 0.0;
  int n = 0;  // degree of f
  RealPoly p, q;
  std::vector<double> alphas;  // zeros of Re f on [0, 2pi), sorted
  std::vector<double> betas;   // zeros of Im f on [0, 2pi), sorted
  bool interleaving = false;
  // Smallest cyclic distance between any alpha and any beta; +inf when a
  // list is empty, 0 when a cluster was merged.
  double min_gap = std::numeric_limits<double>::infinity();
};

/// r* = max(1, sqrt(2) * sum |c_n|, n < N): every radius beyond it carries the
/// full interleaving pattern. Requires monic input.
double dominance_radius(const RealPoly& f);

/// Cosine-variable reduction (p, q) at radius r, degrees <= N and <= N-1.
/// Built by the Chebyshev three-term recurrence; internally computed on the
/// rescaled polynomial f(r w)/r^N when r > 1 so magnitudes stay O(1).
std::pair<RealPoly, RealPoly> circle_polys(const RealPoly& f, double r);

/// Full slice structure at radius r. Requires f monic with f(0) != 0.
CircleSection circle_zeros(const RealPoly& f, double r);

/// True iff both zero sets have 2N entries and the merged cyclic sequence
/// strictly alternates starting with the beta at 0. Writes section.min_gap.
bool is_interleaving(CircleSection& section);

/// Evaluates Re f and Im f at the 4N+1 grid angles t_k = (2k-1)pi/(4N) and
/// checks the alternating dominance sign pattern. Requires r > r*.
bool check_sign_pattern(const RealPoly& f, double r);

}  // namespace ginter
