#include "ginter/circle_slice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ginter/real_roots.hpp"

namespace ginter {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kClusterTol = 1e-10;

double cyclic_dist(double a, double b) {
  double d = std::abs(a - b);
  d = std::fmod(d, kTwoPi);
  return std::min(d, kTwoPi - d);
}

// Accumulates sum a_n * B_n(x) where B follows the Chebyshev recurrence
// B_{n+1} = 2x B_n - B_{n-1}. b1_lead = 1 gives T, 2 gives U.
std::vector<double> chebyshev_combine(const std::vector<double>& a, double b1_lead) {
  const size_t m = a.size();
  std::vector<double> acc(m, 0.0);
  std::vector<double> prev{1.0};
  acc[0] += a[0];
  if (m == 1) return acc;
  std::vector<double> cur{0.0, b1_lead};
  acc[0] += a[1] * cur[0];
  acc[1] += a[1] * cur[1];
  for (size_t n = 2; n < m; ++n) {
    std::vector<double> next(n + 1, 0.0);
    for (size_t i = 0; i < cur.size(); ++i) next[i + 1] = 2.0 * cur[i];
    for (size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    for (size_t i = 0; i <= n; ++i) acc[i] += a[n] * next[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return acc;
}

void require_monic(const RealPoly& f, const char* who) {
  if (f.is_zero() || std::abs(f.leading() - 1.0) > 1e-12) {
    throw std::domain_error(std::string(who) + ": monic polynomial required");
  }
}

// Merges entries closer than kClusterTol (cyclically for angle lists).
// Returns true when anything was merged.
bool merge_clusters(std::vector<double>& v, bool cyclic) {
  if (v.size() < 2) return false;
  bool merged = false;
  std::vector<double> out;
  out.reserve(v.size());
  out.push_back(v[0]);
  for (size_t i = 1; i < v.size(); ++i) {
    if (v[i] - out.back() <= kClusterTol) {
      out.back() = 0.5 * (out.back() + v[i]);
      merged = true;
    } else {
      out.push_back(v[i]);
    }
  }
  if (cyclic && out.size() >= 2 && cyclic_dist(out.front(), out.back()) <= kClusterTol) {
    out.pop_back();
    merged = true;
  }
  v = std::move(out);
  return merged;
}

}  // namespace

double dominance_radius(const RealPoly& f) {
  require_monic(f, "dominance_radius");
  const int n = f.degree();
  if (n < 1) throw std::domain_error("dominance_radius: degree >= 1 required");
  double sum = 0.0;
  for (int k = 0; k < n; ++k) sum += std::abs(f.coeff(k));
  return std::max(1.0, std::sqrt(2.0) * sum);
}

std::pair<RealPoly, RealPoly> circle_polys(const RealPoly& f, double r) {
  if (!(r > 0.0)) throw std::domain_error("circle_polys: radius must be positive");
  if (f.is_zero()) throw std::domain_error("circle_polys: zero polynomial");
  const int n = f.degree();

  // a_n = c_n r^n, computed as c_n r^{n-N} when r > 1 and rescaled at the
  // end, so the accumulation never sees r^N blowup.
  const bool rescale = r > 1.0;
  std::vector<double> a(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    a[static_cast<size_t>(k)] = f.coeff(k) * std::pow(r, rescale ? k - n : k);
  }

  std::vector<double> p_coeffs = chebyshev_combine(a, 1.0);
  std::vector<double> q_coeffs;
  if (n >= 1) {
    std::vector<double> a_shift(a.begin() + 1, a.end());
    q_coeffs = chebyshev_combine(a_shift, 2.0);
  }

  if (rescale) {
    const double rn = std::pow(r, n);
    if (!std::isfinite(rn)) throw std::overflow_error("circle_polys: r^N overflows");
    for (double& c : p_coeffs) c *= rn;
    for (double& c : q_coeffs) c *= rn;
  }
  return {RealPoly(std::move(p_coeffs)), RealPoly(std::move(q_coeffs))};
}

CircleSection circle_zeros(const RealPoly& f, double r) {
  require_monic(f, "circle_zeros");
  if (f.coeff(0) == 0.0) throw std::domain_error("circle_zeros: f(0) must be nonzero (strip zero roots first)");
  CircleSection sec;
  sec.r = r;
  sec.n = f.degree();
  std::tie(sec.p, sec.q) = circle_polys(f, r);

  for (double c : real_roots_in(sec.p, -1.0, 1.0)) {
    const double t = std::acos(std::clamp(c, -1.0, 1.0));
    sec.alphas.push_back(t);
    sec.alphas.push_back(kTwoPi - t);
  }
  const double p_scale = std::max(1.0, sec.p.max_abs_coeff());
  if (std::abs(sec.p.eval(1.0)) <= 1e-12 * p_scale) sec.alphas.push_back(0.0);
  if (std::abs(sec.p.eval(-1.0)) <= 1e-12 * p_scale) sec.alphas.push_back(std::numbers::pi);

  sec.betas.push_back(0.0);
  sec.betas.push_back(std::numbers::pi);
  if (!sec.q.is_zero()) {
    for (double c : real_roots_in(sec.q, -1.0, 1.0)) {
      const double t = std::acos(std::clamp(c, -1.0, 1.0));
      sec.betas.push_back(t);
      sec.betas.push_back(kTwoPi - t);
    }
  }
  std::sort(sec.alphas.begin(), sec.alphas.end());
  std::sort(sec.betas.begin(), sec.betas.end());

  const bool merged = merge_clusters(sec.alphas, true) | merge_clusters(sec.betas, true);
  if (merged) {
    // A merged cluster is the collision signal; never report interleaving.
    sec.interleaving = false;
    sec.min_gap = 0.0;
  } else {
    sec.interleaving = is_interleaving(sec);
  }
  return sec;
}

bool is_interleaving(CircleSection& section) {
  const auto& a = section.alphas;
  const auto& b = section.betas;

  if (a.empty() || b.empty()) {
    section.min_gap = std::numeric_limits<double>::infinity();
    return false;
  }
  double gap = std::numeric_limits<double>::infinity();
  for (double x : a) {
    for (double y : b) gap = std::min(gap, cyclic_dist(x, y));
  }
  section.min_gap = gap;

  const size_t need = 2 * static_cast<size_t>(section.n);
  if (a.size() != need || b.size() != need) return false;
  if (gap == 0.0) return false;

  // Merged cyclic order must be beta, alpha, beta, alpha, ... from angle 0.
  struct Entry {
    double t;
    bool is_alpha;
  };
  std::vector<Entry> merged;
  merged.reserve(a.size() + b.size());
  for (double x : a) merged.push_back({x, true});
  for (double y : b) merged.push_back({y, false});
  std::sort(merged.begin(), merged.end(), [](const Entry& l, const Entry& r) { return l.t < r.t; });
  if (merged.front().is_alpha) return false;
  for (size_t i = 0; i < merged.size(); ++i) {
    if (merged[i].is_alpha != (i % 2 == 1)) return false;
    if (i > 0 && !(merged[i - 1].t < merged[i].t)) return false;
  }
  return true;
}

bool check_sign_pattern(const RealPoly& f, double r) {
  require_monic(f, "check_sign_pattern");
  const double r_star = dominance_radius(f);
  if (!(r > r_star)) throw std::domain_error("check_sign_pattern: requires r > dominance radius");
  const int n = f.degree();

  // Scale-free evaluation of f(r e^{it}) / r^N; signs are unaffected.
  std::vector<Complex> scaled(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) scaled[static_cast<size_t>(k)] = f.coeff(k) * std::pow(r, k - n);

  for (int k = 0; k <= 4 * n; ++k) {
    const double t = (2.0 * k - 1.0) * std::numbers::pi / (4.0 * n);
    const Complex w = std::polar(1.0, t);
    Complex acc = 0.0;
    for (auto it = scaled.rbegin(); it != scaled.rend(); ++it) acc = acc * w + *it;
    // Sign grid of Re/Im of e^{iNt_k}: period 4 in k.
    const int m = k % 4;
    const int want_re = (m == 0 || m == 1) ? 1 : -1;
    const int want_im = (m == 1 || m == 2) ? 1 : -1;
    if (want_re * acc.real() <= 0.0) return false;
    if (want_im * acc.imag() <= 0.0) return false;
  }
  return true;
}

}  // namespace ginter
