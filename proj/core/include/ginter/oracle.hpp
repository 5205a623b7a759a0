#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ginter/poly.hpp"

namespace ginter {

/// The verification oracle did not converge; tests halt rather than compare
/// against garbage.
struct OracleFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bijective pairing between two root sets of equal size.
struct RootMatch {
  std::vector<std::pair<int, int>> pairing;  // (index in a, index in b)
  double max_distance = 0.0;
  bool matched = false;
};

/// All deg(f) roots by Aberth-Ehrlich simultaneous iteration, independent of
/// the slice machinery. Initial guesses sit on the circle of radius
/// 1 + max|c_n/c_N| with a fixed angular offset.
std::vector<Complex> aberth_roots(const ComplexPoly& f, int max_sweeps = 200);

/// Greedy nearest-neighbor pairing refined by local swaps; matched when the
/// largest paired distance is within tol. Sizes must agree.
RootMatch match_root_sets(std::span<const Complex> a, std::span<const Complex> b, double tol);

/// |f(z)| for each candidate root.
std::vector<double> residual_spectrum(const ComplexPoly& f, std::span<const Complex> roots);

}  // namespace ginter
