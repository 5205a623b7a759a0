#include "ginter/descent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ginter/log.hpp"
#include "ginter/poly_io.hpp"

namespace ginter {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double cyclic_dist(double a, double b) {
  double d = std::abs(a - b);
  d = std::fmod(d, kTwoPi);
  return std::min(d, kTwoPi - d);
}

bool bad_section(const SliceView& v, const DescentConfig& cfg) {
  return !v.interleaving || v.min_gap < cfg.gap_tol;
}

// Avoids -0 components leaking into reports and serialized output.
Complex canonical(Complex z) {
  return {z.real() == 0.0 ? 0.0 : z.real(), z.imag() == 0.0 ? 0.0 : z.imag()};
}

std::string describe_view(const SliceView& v) {
  std::ostringstream os;
  os << "alphas=" << v.alphas.size() << " betas=" << v.betas.size()
     << " interleaving=" << (v.interleaving ? "yes" : "no") << " min_gap=" << v.min_gap;
  return os.str();
}

}  // namespace

const char* method_name(Method m) { return m == Method::circle ? "circle" : "line"; }

CircleFamily::CircleFamily(RealPoly f, const DescentConfig& cfg)
    : f_(std::move(f)), shrink_(cfg.circle_shrink) {
  r_star_ = dominance_radius(f_);
  start_ = cfg.circle_start_factor * r_star_;
  floor_ = 1e-14 * start_;
}

SliceView CircleFamily::section(double r) const {
  CircleSection sec = circle_zeros(f_, r);
  return {std::move(sec.alphas), std::move(sec.betas), sec.interleaving, sec.min_gap};
}

Complex CircleFamily::candidate(double r, double theta) const { return std::polar(r, theta); }

LineFamily::LineFamily(ComplexPoly f, const DescentConfig& cfg)
    : f_(std::move(f)), sweep_steps_(std::max(2, cfg.line_sweep_steps)) {
  floor_ = degenerate_height(f_);
  start_ = dominance_height(f_);
  if (start_ <= floor_) start_ = floor_ + 1.0;
}

SliceView LineFamily::section(double y) const {
  LineSection sec = line_zeros(f_, y);
  return {std::move(sec.alphas), std::move(sec.betas), sec.interleaving, sec.min_gap};
}

Complex LineFamily::candidate(double y, double x) const { return {x, y}; }

double LineFamily::next_down(double y) const {
  const double step = (start_ - floor_) / static_cast<double>(sweep_steps_);
  return y - step;
}

bool LineFamily::emit_all_alphas_at(double y) const {
  LineSection sec = line_zeros(f_, y);
  return sec.degenerate && sec.betas.empty() && sec.I.max_abs_coeff() <=
         1e-14 * std::max(1.0, sec.R.max_abs_coeff());
}

Bracket bracket_boundary(SliceFamily& family, const DescentConfig& cfg) {
  double s = family.start();
  SliceView view = family.section(s);
  int raises = 0;
  while (bad_section(view, cfg)) {
    if (++raises > 8) {
      throw SearchFailure(std::string("bracket_boundary(") + family.name() +
                          "): start parameter never interleaves; " + describe_view(view));
    }
    family.raise_start();
    s = family.start();
    view = family.section(s);
  }

  for (int step = 0; step < cfg.max_bracket_steps; ++step) {
    double s_next = family.next_down(s);
    const double floor = family.floor_param();
    if (s_next < floor) s_next = floor;
    view = family.section(s_next);
    if (bad_section(view, cfg)) {
      log_debug(std::string("bracket(") + family.name() + "): bad at s=" +
                format_double(s_next) + " " + describe_view(view));
      return {s_next, s};
    }
    if (s_next == floor) {
      throw SearchFailure(std::string("bracket_boundary(") + family.name() +
                          "): reached floor while interleaving (was f(0)=0 stripped?); " +
                          describe_view(view));
    }
    s = s_next;
  }
  throw SearchFailure(std::string("bracket_boundary(") + family.name() +
                      "): exceeded max descent steps");
}

Bracket bisect_bracket(const SliceFamily& family, Bracket br, double s_tol,
                       const DescentConfig& cfg) {
  if (!(s_tol > 0.0)) throw std::domain_error("bisect_boundary: s_tol must be positive");
  if (!(br.bad < br.good)) throw std::domain_error("bisect_boundary: invalid bracket");
  while (br.good - br.bad > s_tol) {
    const double mid = 0.5 * (br.bad + br.good);
    if (!(mid > br.bad && mid < br.good)) break;  // fp exhaustion
    if (bad_section(family.section(mid), cfg)) {
      br.bad = mid;
    } else {
      br.good = mid;
    }
  }
  return br;
}

double bisect_boundary(const SliceFamily& family, double s_bad, double s_good,
                       double s_tol, const DescentConfig& cfg) {
  return bisect_bracket(family, {s_bad, s_good}, s_tol, cfg).good;
}

std::vector<Complex> collision_candidates(const SliceFamily& family, Bracket br,
                                          const DescentConfig& cfg) {
  const SliceView view = family.section(br.good);
  std::vector<Complex> out;
  auto push_unique = [&](Complex z) {
    for (Complex w : out) {
      if (std::abs(w - z) <= 1e-12 * (1.0 + std::abs(z))) return;
    }
    out.push_back(z);
  };

  if (family.emit_all_alphas_at(br.bad)) {
    for (double a : view.alphas) push_unique(family.candidate(br.good, a));
    return out;
  }

  if (view.alphas.empty() || view.betas.empty()) return out;

  struct Pair {
    double gap, alpha;
  };
  std::vector<Pair> pairs;
  double best_gap = std::numeric_limits<double>::infinity();
  for (double a : view.alphas) {
    for (double b : view.betas) {
      const double d = cyclic_dist(a, b);
      pairs.push_back({d, a});
      best_gap = std::min(best_gap, d);
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& l, const Pair& r) { return l.gap < r.gap; });

  // Everything within 10*gap_tol, and always the minimal pair including its
  // exact/near ties (symmetric sections collide at several angles at once).
  const double keep = std::max(10.0 * cfg.gap_tol, best_gap * (1.0 + 1e-9));
  for (const Pair& pr : pairs) {
    if (pr.gap <= keep) push_unique(family.candidate(br.good, pr.alpha));
  }
  return out;
}

RootReport newton_refine(const ComplexPoly& f, Complex z0, const DescentConfig& cfg) {
  const ComplexPoly df = derivative(f);
  Complex z = z0;
  Complex best_z = z0;
  double best_res = std::abs(eval(f, z0));
  int iters = 0;

  for (int it = 0; it < cfg.max_newton_iters; ++it) {
    const Complex fz = eval(f, z);
    const double res = std::abs(fz);
    if (res < best_res) {
      best_res = res;
      best_z = z;
    }
    if (res <= cfg.res_tol * residual_scale(f, z)) {
      // One undamped sharpening step; quadratic convergence usually lands
      // at machine precision from here.
      const Complex d = eval(df, z);
      if (d != Complex{0.0}) {
        const Complex sharp = z - fz / d;
        const double sharp_res = std::abs(eval(f, sharp));
        if (sharp_res < best_res) {
          best_res = sharp_res;
          best_z = sharp;
        }
      }
      break;
    }
    const Complex dz = eval(df, z);
    if (dz == Complex{0.0}) {
      z += Complex(1e-12 * (1.0 + std::abs(z)), 1e-12);
      continue;
    }
    const Complex full_step = fz / dz;
    double lambda = 1.0;
    bool accepted = false;
    for (int h = 0; h < 7; ++h, lambda *= 0.5) {
      const Complex cand = z - lambda * full_step;
      if (std::abs(eval(f, cand)) < res) {
        z = cand;
        accepted = true;
        break;
      }
    }
    ++iters;
    if (!accepted) break;
    if (std::abs(lambda * full_step) < 1e-15 * std::max(1.0, std::abs(z))) break;
  }

  const double final_res = std::abs(eval(f, z));
  if (final_res < best_res) {
    best_res = final_res;
    best_z = z;
  }
  RootReport rep;
  rep.root = canonical(best_z);
  rep.residual = best_res;
  rep.polish_iterations = iters;
  return rep;
}

namespace {

RootReport linear_root(const ComplexPoly& f, Method method) {
  const Complex root = canonical(-f.coeff(0) / f.coeff(1));
  RootReport rep;
  rep.root = root;
  rep.residual = std::abs(eval(f, root));
  rep.method = method;
  rep.polish_iterations = 0;
  return rep;
}

std::string failure_diagnostics(const SliceFamily& family, Bracket br,
                                const std::vector<Complex>& cands, double best_res) {
  std::ostringstream os;
  os << "family=" << family.name() << " bracket=[" << format_double(br.bad) << ", "
     << format_double(br.good) << "] candidates=" << cands.size()
     << " best_residual=" << best_res;
  return os.str();
}

}  // namespace

RootReport find_one_root(const ComplexPoly& f, Method method, const DescentConfig& cfg) {
  if (f.degree() < 1) throw std::domain_error("find_one_root: nonconstant polynomial required");
  if (f.coeff(0) == Complex{0.0}) {
    throw std::domain_error("find_one_root: f(0) = 0; strip zero roots first");
  }
  if (f.degree() == 1) return linear_root(f, method);

  const ComplexPoly fm = monicize(f);
  std::unique_ptr<SliceFamily> family;
  bool test_conjugate = false;
  if (method == Method::circle) {
    if (fm.is_real()) {
      family = std::make_unique<CircleFamily>(fm.real_part(), cfg);
    } else {
      log_info("circle method on nonreal coefficients: running on the conjugate product");
      family = std::make_unique<CircleFamily>(realify(fm), cfg);
      test_conjugate = true;  // the product's roots include conjugates
    }
  } else {
    family = std::make_unique<LineFamily>(fm, cfg);
  }

  Bracket br = bracket_boundary(*family, cfg);
  br = bisect_bracket(*family, br, cfg.s_tol, cfg);
  const std::vector<Complex> cands = collision_candidates(*family, br, cfg);

  RootReport best;
  best.residual = std::numeric_limits<double>::infinity();
  for (Complex z0 : cands) {
    for (int side = 0; side < (test_conjugate ? 2 : 1); ++side) {
      const Complex start = side == 0 ? z0 : std::conj(z0);
      RootReport rep = newton_refine(f, start, cfg);
      if (rep.residual < best.residual) best = rep;
    }
    if (best.residual <= cfg.res_tol * residual_scale(f, best.root)) break;
  }

  if (!(best.residual <= cfg.res_tol * residual_scale(f, best.root))) {
    throw SearchFailure("find_one_root: no candidate polished to a root; " +
                        failure_diagnostics(*family, br, cands, best.residual));
  }
  best.method = method;
  best.bracket = br;
  return best;
}

namespace {

// After deflating a conjugate pair from a real-coefficient polynomial the
// coefficients carry imaginary dust; restore exact realness.
ComplexPoly drop_imag_dust(const ComplexPoly& p) { return ComplexPoly(p.real_part()); }

}  // namespace

std::vector<RootReport> find_all_roots(const ComplexPoly& f, Method method,
                                       const DescentConfig& cfg) {
  if (f.degree() < 1) throw std::domain_error("find_all_roots: nonconstant polynomial required");

  std::vector<RootReport> reports;
  auto [m, stripped] = strip_zero_roots(f);
  for (int k = 0; k < m; ++k) {
    RootReport rep;
    rep.root = 0.0;
    rep.residual = std::abs(eval(f, 0.0));
    rep.method = method;
    reports.push_back(rep);
  }

  ComplexPoly work = monicize(stripped);
  bool real_track = work.is_real();
  if (real_track) work = drop_imag_dust(work);

  int stage = 0;
  while (work.degree() > 0) {
    ++stage;
    RootReport rep;
    if (work.degree() == 1) {
      const Complex z = -work.coeff(0);
      rep = newton_refine(f, z, cfg);
      rep.method = method;
      if (real_track && rep.root.imag() != 0.0 &&
          std::abs(rep.root.imag()) <= 1e-9 * (1.0 + std::abs(rep.root))) {
        RootReport snapped = newton_refine(f, Complex(rep.root.real(), 0.0), cfg);
        if (snapped.residual <= cfg.res_tol * residual_scale(f, snapped.root)) rep = snapped;
      }
      reports.push_back(rep);
      break;
    }

    RootReport found;
    try {
      found = find_one_root(work, method, cfg);
    } catch (const SearchFailure& e) {
      throw SearchFailure("find_all_roots: deflation stage " + std::to_string(stage) + ": " +
                          e.what());
    }

    rep = newton_refine(f, found.root, cfg);  // re-polish against the original
    rep.method = found.method;
    rep.bracket = found.bracket;

    if (real_track) {
      if (std::abs(rep.root.imag()) <= 1e-9 * (1.0 + std::abs(rep.root))) {
        RootReport snapped = newton_refine(f, Complex(rep.root.real(), 0.0), cfg);
        if (snapped.residual <= cfg.res_tol * residual_scale(f, snapped.root)) {
          snapped.method = rep.method;
          snapped.bracket = rep.bracket;
          rep = snapped;
        }
      }
      if (rep.root.imag() != 0.0) {
        RootReport twin = newton_refine(f, std::conj(rep.root), cfg);
        twin.method = rep.method;
        twin.bracket = rep.bracket;
        reports.push_back(rep);
        reports.push_back(twin);
        work = deflate(work, rep.root).quotient;
        work = deflate(work, twin.root).quotient;
        if (work.is_real(1e-8)) {
          work = drop_imag_dust(work);
        } else {
          real_track = false;  // drift too large to trust realness
        }
        continue;
      }
    }

    reports.push_back(rep);
    work = deflate(work, rep.root).quotient;
  }
  return reports;
}

}  // namespace ginter
