#pragma once

#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "ginter/circle_slice.hpp"
#include "ginter/line_slice.hpp"
#include "ginter/poly.hpp"

namespace ginter {

/// Raised when the descent cannot produce a residual-validated root; carries
/// bracket and candidate diagnostics in what().
struct SearchFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Method { circle, line };
const char* method_name(Method m);

struct DescentConfig {
  double gap_tol = 1e-7;  // zero-gap threshold (radians / abscissa units)
  double s_tol = 1e-9;    // boundary bisection width
  double res_tol = 1e-10; // residual acceptance, relative to coefficient scale
  double circle_shrink = 0.9;
  double circle_start_factor = 1.05;
  int line_sweep_steps = 128;
  int max_bracket_steps = 6000;
  int max_newton_iters = 100;
};

struct Bracket {
  double bad = 0.0;   // non-interleaving (or gap-collapsed) side
  double good = 0.0;  // interleaving side
};

struct RootReport {
  Complex root;
  double residual = 0.0;
  Method method = Method::circle;
  int polish_iterations = 0;
  Bracket bracket;
};

/// Family-agnostic slice summary used by the descent driver.
struct SliceView {
  std::vector<double> alphas, betas;
  bool interleaving = false;
  double min_gap = std::numeric_limits<double>::infinity();
};

/// A one-parameter family of slices whose interleaving structure degrades as
/// the parameter descends toward the boundary of the non-interleaving set.
class SliceFamily {
 public:
  virtual ~SliceFamily() = default;
  virtual SliceView section(double s) const = 0;
  /// Maps an angle/abscissa at parameter s to a point in the plane.
  virtual Complex candidate(double s, double t) const = 0;
  virtual double start() const = 0;
  virtual double floor_param() const = 0;
  virtual double next_down(double s) const = 0;
  /// Raises the start parameter when the initial section fails to interleave.
  virtual void raise_start() = 0;
  /// Line family: true when I at the boundary is the zero polynomial, in
  /// which case every alpha is a root candidate.
  virtual bool emit_all_alphas_at(double /*s*/) const { return false; }
  virtual const char* name() const = 0;
};

/// Circle family (parameter r) over a monic real polynomial with f(0) != 0.
class CircleFamily final : public SliceFamily {
 public:
  explicit CircleFamily(RealPoly f, const DescentConfig& cfg = {});
  SliceView section(double r) const override;
  Complex candidate(double r, double theta) const override;
  double start() const override { return start_; }
  double floor_param() const override { return floor_; }
  double next_down(double r) const override { return r * shrink_; }
  void raise_start() override { start_ *= 1.5; }
  const char* name() const override { return "circle"; }
  double r_star() const { return r_star_; }

 private:
  RealPoly f_;
  double r_star_, start_, floor_, shrink_;
};

/// Horizontal-line family (parameter y) over a monic complex polynomial of
/// degree >= 2. The floor is the degenerate height, which can never
/// interleave, so the downward sweep always terminates with a bracket.
class LineFamily final : public SliceFamily {
 public:
  explicit LineFamily(ComplexPoly f, const DescentConfig& cfg = {});
  SliceView section(double y) const override;
  Complex candidate(double y, double x) const override;
  double start() const override { return start_; }
  double floor_param() const override { return floor_; }
  double next_down(double y) const override;
  void raise_start() override { start_ = floor_ + 2.0 * (start_ - floor_); }
  bool emit_all_alphas_at(double y) const override;
  const char* name() const override { return "line"; }

 private:
  ComplexPoly f_;
  double start_, floor_;
  int sweep_steps_;
};

/// Descends from family.start() until a non-interleaving (or gap-collapsed)
/// section appears; returns that bracket. May raise the start a few times if
/// the initial section is not interleaving. Throws SearchFailure when the
/// floor is reached while still cleanly interleaving.
Bracket bracket_boundary(SliceFamily& family, const DescentConfig& cfg = {});

/// Shrinks the bracket to width <= s_tol, keeping the good-side/bad-side
/// invariant, and returns the refined bracket.
Bracket bisect_bracket(const SliceFamily& family, Bracket br, double s_tol,
                       const DescentConfig& cfg = {});

/// Spec surface: returns the good-side endpoint of bisect_bracket.
double bisect_boundary(const SliceFamily& family, double s_bad, double s_good,
                       double s_tol, const DescentConfig& cfg = {});

/// Candidate collision points read off the interleaving-side section of a
/// refined bracket: every (alpha, beta) pair within 10*gap_tol, and always
/// the globally minimal pair. With the line family's I == 0 boundary branch,
/// every alpha is emitted.
std::vector<Complex> collision_candidates(const SliceFamily& family, Bracket br,
                                          const DescentConfig& cfg = {});

/// Damped Newton polish. Never returns a worse point than z0; non-convergence
/// shows up as a large residual, not an exception.
RootReport newton_refine(const ComplexPoly& f, Complex z0, const DescentConfig& cfg = {});

/// One root of f via the requested slice family. Complex input to the circle
/// method runs on realify(f) and both the candidate and its conjugate are
/// tested against f. Requires f nonconstant with f(0) != 0.
RootReport find_one_root(const ComplexPoly& f, Method method, const DescentConfig& cfg = {});

/// All deg(f) roots: strips zero roots, then alternates find_one_root /
/// polish-against-original / deflate. Real-coefficient inputs get conjugate
/// pairs emitted together so the deflated polynomial stays real.
std::vector<RootReport> find_all_roots(const ComplexPoly& f, Method method = Method::circle,
                                       const DescentConfig& cfg = {});

}  // namespace ginter
