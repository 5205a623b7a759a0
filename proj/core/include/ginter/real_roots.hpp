#pragma once

#include <vector>

#include "ginter/poly.hpp"

namespace ginter {

/// All real roots of p strictly inside (lo, hi), sorted ascending, each
/// located to about 1e-13 absolute. Roots closer together than the isolation
/// width (1e-6) are reported once per sign-change cluster. Throws
/// std::domain_error for the zero polynomial or an empty interval.
std::vector<double> real_roots_in(const RealPoly& p, double lo, double hi);

/// Number of distinct real roots of p in (lo, hi], by Sturm variation counts.
int count_real_roots_in(const RealPoly& p, double lo, double hi);

namespace detail {

/// Sturm chain over doubles. Elements are scaled to unit max-norm (positive
/// scaling preserves sign variations); tiny leading coefficients are trimmed
/// so divisions stay bounded.
class SturmChain {
 public:
  explicit SturmChain(const RealPoly& p);
  int variations(double x) const;
  int count(double lo, double hi) const { return variations(lo) - variations(hi); }
  size_t length() const { return seq_.size(); }

 private:
  std::vector<std::vector<double>> seq_;
};

}  // namespace detail
}  // namespace ginter
