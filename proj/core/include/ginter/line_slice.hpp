#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "ginter/poly.hpp"

namespace ginter {

/// Zero structure of Re f and Im f restricted to the horizontal line
/// Im z = y, for monic complex f of degree N >= 2: writing
/// f(x + iy) = R(x) + i I(x) with real polynomials R (monic, degree N) and
/// I (degree <= N-1), the slice reduces to real roots of R and I.
struct LineSection {
  double y = 0.0;
  int n = 0;
  RealPoly R, I;
  std::vector<double> alphas;  // real roots of R, sorted
  std::vector<double> betas;   // real roots of I, sorted (empty when I == 0)
  bool interleaving = false;
  bool degenerate = false;  // deg I < N-1 or I identically zero
  double min_gap = std::numeric_limits<double>::infinity();
};

/// Coefficients of f(x + iy) as a polynomial in x, split into real and
/// imaginary parts. Computed by a Taylor shift (repeated synthetic division
/// by iy). The degree-(N-1) coefficient of I equals N*y + Im(c_{N-1}).
std::pair<RealPoly, RealPoly> line_polys(const ComplexPoly& f, double y);

/// The unique height -Im(c_{N-1})/N at which I_y drops below degree N-1.
double degenerate_height(const ComplexPoly& f);

/// Start-of-descent height: above it every tested height interleaves. The
/// bound is validated empirically and callers raise it adaptively.
double dominance_height(const ComplexPoly& f);

/// Full slice structure at height y.
LineSection line_zeros(const ComplexPoly& f, double y);

/// True iff |alphas| = N, |betas| = N-1 and the merged order strictly
/// alternates alpha, beta, ..., beta, alpha. Writes section.min_gap.
bool is_interleaving_line(LineSection& section);

}  // namespace ginter
