#include "ginter/line_slice.hpp"

#include <algorithm>
#include <cmath>

#include "ginter/real_roots.hpp"

namespace ginter {

namespace {

constexpr double kClusterTol = 1e-10;
constexpr double kDegenerateTol = 1e-12;
constexpr double kZeroPolyTol = 1e-14;

void require_monic_line(const ComplexPoly& f, const char* who) {
  if (!f.is_monic()) throw std::domain_error(std::string(who) + ": monic polynomial required");
  if (f.degree() < 2) throw std::domain_error(std::string(who) + ": degree >= 2 required");
}

bool merge_clusters_linear(std::vector<double>& v) {
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
  v = std::move(out);
  return merged;
}

// Drops numerically insignificant leading coefficients so Cauchy bounds and
// Sturm divisions are not poisoned by shift dust.
RealPoly trim_leading(const RealPoly& p, double rel_tol) {
  std::vector<double> c(p.coeffs().begin(), p.coeffs().end());
  const double scale = p.max_abs_coeff();
  while (!c.empty() && std::abs(c.back()) <= rel_tol * scale) c.pop_back();
  return RealPoly(std::move(c));
}

double cauchy_bound(const RealPoly& p) {
  const double lead = std::abs(p.leading());
  double m = 0.0;
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, std::abs(p.coeff(k)));
  return 1.0 + m / lead;
}

// p(s w) / s^deg: root magnitudes shrink by s, coefficients of the shifted
// slice polynomials drop from O(y^{N-k}) to O(binom(N,k)). Exponent deg is
// passed separately so R (monic, degree N) and I (degree <= N-1) scale
// consistently.
RealPoly rescale_by(const RealPoly& p, double s, int deg) {
  std::vector<double> c(p.coeffs().begin(), p.coeffs().end());
  for (size_t k = 0; k < c.size(); ++k) {
    c[k] *= std::pow(s, static_cast<double>(static_cast<int>(k) - deg));
  }
  return RealPoly(std::move(c));
}

}  // namespace

std::pair<RealPoly, RealPoly> line_polys(const ComplexPoly& f, double y) {
  require_monic_line(f, "line_polys");
  const int n = f.degree();
  const Complex shift(0.0, y);

  // Taylor shift: b_k of f(z + iy) via repeated synthetic division by iy.
  std::vector<Complex> work(f.coeffs().begin(), f.coeffs().end());
  std::vector<Complex> shifted;
  shifted.reserve(static_cast<size_t>(n) + 1);
  while (!work.empty()) {
    Complex carry = work.back();
    std::vector<Complex> quot(work.size() - 1);
    for (int j = static_cast<int>(work.size()) - 2; j >= 0; --j) {
      quot[static_cast<size_t>(j)] = carry;
      carry = carry * shift + work[static_cast<size_t>(j)];
    }
    shifted.push_back(carry);
    work = std::move(quot);
  }

  std::vector<double> re(shifted.size()), im(shifted.size());
  for (size_t k = 0; k < shifted.size(); ++k) {
    re[k] = shifted[k].real();
    im[k] = shifted[k].imag();
  }
  return {RealPoly(std::move(re)), RealPoly(std::move(im))};
}

double degenerate_height(const ComplexPoly& f) {
  require_monic_line(f, "degenerate_height");
  const int n = f.degree();
  return -f.coeff(n - 1).imag() / static_cast<double>(n);
}

double dominance_height(const ComplexPoly& f) {
  require_monic_line(f, "dominance_height");
  double sum = 0.0;
  for (int k = 0; k < f.degree(); ++k) sum += std::abs(f.coeff(k));
  return std::max(1.0, std::sqrt(2.0) * sum) + std::abs(degenerate_height(f));
}

LineSection line_zeros(const ComplexPoly& f, double y) {
  require_monic_line(f, "line_zeros");
  LineSection sec;
  sec.y = y;
  sec.n = f.degree();
  std::tie(sec.R, sec.I) = line_polys(f, y);

  // Root isolation runs on the rescaled slice polynomials so coefficient
  // magnitudes stay O(1) at any height; the section stores the true R, I.
  const double s = std::max(1.0, std::abs(y));
  const RealPoly r_hat = rescale_by(sec.R, s, sec.n);
  const RealPoly i_hat = sec.I.is_zero() ? RealPoly{} : rescale_by(sec.I, s, sec.n - 1);

  const double shift_scale = std::max({1.0, r_hat.max_abs_coeff(), i_hat.max_abs_coeff()});
  const bool i_is_zero = i_hat.is_zero() || i_hat.max_abs_coeff() <= kZeroPolyTol * shift_scale;
  const RealPoly i_eff = i_is_zero ? RealPoly{} : trim_leading(i_hat, kDegenerateTol);
  sec.degenerate = i_is_zero || i_eff.degree() < sec.n - 1;

  const double b_r = cauchy_bound(r_hat) + 1.0;
  for (double w : real_roots_in(r_hat, -b_r, b_r)) sec.alphas.push_back(s * w);
  if (!i_is_zero && i_eff.degree() >= 1) {
    const double b_i = cauchy_bound(i_eff) + 1.0;
    for (double w : real_roots_in(i_eff, -b_i, b_i)) sec.betas.push_back(s * w);
  }

  const bool merged = merge_clusters_linear(sec.alphas) | merge_clusters_linear(sec.betas);
  if (merged) {
    sec.interleaving = false;
    sec.min_gap = 0.0;
  } else {
    sec.interleaving = is_interleaving_line(sec);
  }
  return sec;
}

bool is_interleaving_line(LineSection& section) {
  const auto& a = section.alphas;
  const auto& b = section.betas;

  if (a.empty() || b.empty()) {
    section.min_gap = std::numeric_limits<double>::infinity();
    return false;
  }
  double gap = std::numeric_limits<double>::infinity();
  for (double x : a) {
    for (double y : b) gap = std::min(gap, std::abs(x - y));
  }
  section.min_gap = gap;

  if (section.degenerate) return false;
  const size_t n = static_cast<size_t>(section.n);
  if (a.size() != n || b.size() != n - 1) return false;
  if (gap == 0.0) return false;
  for (size_t i = 0; i + 1 < a.size(); ++i) {
    if (!(a[i] < b[i] && b[i] < a[i + 1])) return false;
  }
  return true;
}

}  // namespace ginter
