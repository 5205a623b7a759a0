#include "ginter/poly.hpp"

#include <algorithm>
#include <cmath>

namespace ginter {

namespace {

void require_finite(double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error("polynomial coefficient is not finite");
  }
}

void require_finite(Complex z) {
  require_finite(z.real());
  require_finite(z.imag());
}

// Trailing-entry normalization: exact zeros only. Near-zero leading
// coefficients are the caller's problem; silent degree reduction hides bugs.
template <typename T>
void normalize(std::vector<T>& c) {
  while (!c.empty() && c.back() == T{0.0}) c.pop_back();
}

}  // namespace

RealPoly::RealPoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  for (double c : coeffs_) require_finite(c);
  normalize(coeffs_);
}

double RealPoly::leading() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

double RealPoly::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Complex RealPoly::eval(Complex z) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

RealPoly RealPoly::derivative() const {
  if (coeffs_.size() <= 1) return RealPoly{};
  std::vector<double> d(coeffs_.size() - 1);
  for (size_t n = 1; n < coeffs_.size(); ++n) d[n - 1] = coeffs_[n] * static_cast<double>(n);
  return RealPoly(std::move(d));
}

double RealPoly::max_abs_coeff() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

ComplexPoly::ComplexPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  for (Complex c : coeffs_) require_finite(c);
  normalize(coeffs_);
}

ComplexPoly::ComplexPoly(const RealPoly& p) {
  coeffs_.assign(p.coeffs().begin(), p.coeffs().end());
}

Complex ComplexPoly::leading() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool ComplexPoly::is_real(double tol) const {
  double scale = 0.0;
  for (Complex c : coeffs_) scale = std::max(scale, std::abs(c));
  for (Complex c : coeffs_) {
    if (std::abs(c.imag()) > tol * scale) return false;
  }
  return true;
}

RealPoly ComplexPoly::real_part() const {
  std::vector<double> r(coeffs_.size());
  for (size_t n = 0; n < coeffs_.size(); ++n) r[n] = coeffs_[n].real();
  return RealPoly(std::move(r));
}

bool ComplexPoly::is_monic(double tol) const {
  return !is_zero() && std::abs(leading() - 1.0) <= tol;
}

Complex eval(const ComplexPoly& p, Complex z) {
  Complex acc = 0.0;
  auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

ComplexPoly monicize(const ComplexPoly& p) {
  if (p.is_zero()) throw std::domain_error("monicize: zero polynomial");
  Complex lead = p.leading();
  std::vector<Complex> c(p.coeffs().begin(), p.coeffs().end());
  for (auto& x : c) x /= lead;
  c.back() = 1.0;
  return ComplexPoly(std::move(c));
}

RealPoly monicize(const RealPoly& p) {
  if (p.is_zero()) throw std::domain_error("monicize: zero polynomial");
  double lead = p.leading();
  std::vector<double> c(p.coeffs().begin(), p.coeffs().end());
  for (auto& x : c) x /= lead;
  c.back() = 1.0;
  return RealPoly(std::move(c));
}

ComplexPoly conjugate_poly(const ComplexPoly& f) {
  std::vector<Complex> c(f.coeffs().begin(), f.coeffs().end());
  for (auto& x : c) x = std::conj(x);
  return ComplexPoly(std::move(c));
}

RealPoly realify(const ComplexPoly& f) {
  if (f.degree() < 1) throw std::domain_error("realify: nonconstant polynomial required");
  const auto c = f.coeffs();
  const int n = static_cast<int>(c.size());
  std::vector<double> out(2 * n - 1, 0.0);
  for (int k = 0; k < 2 * n - 1; ++k) {
    // g_k = sum_{i+j=k} c_i * conj(c_j), compensated in both components.
    double re = 0.0, re_c = 0.0;
    double im = 0.0, im_c = 0.0;
    double scale = 0.0;
    const int i_lo = std::max(0, k - n + 1);
    const int i_hi = std::min(k, n - 1);
    for (int i = i_lo; i <= i_hi; ++i) {
      const Complex term = c[i] * std::conj(c[k - i]);
      double y = term.real() - re_c;
      double t = re + y;
      re_c = (t - re) - y;
      re = t;
      y = term.imag() - im_c;
      t = im + y;
      im_c = (t - im) - y;
      im = t;
      scale += std::abs(c[i]) * std::abs(c[k - i]);
    }
    if (std::abs(im) > 1e-14 * std::max(scale, 1e-300)) {
      throw std::logic_error("realify: residual imaginary part exceeds tolerance");
    }
    out[k] = re;
  }
  return RealPoly(std::move(out));
}

DeflationResult deflate(const ComplexPoly& f, Complex root) {
  if (f.degree() < 1) throw std::domain_error("deflate: degree >= 1 required");
  const auto c = f.coeffs();
  const int n = f.degree();
  std::vector<Complex> q(static_cast<size_t>(n));
  Complex acc = c[static_cast<size_t>(n)];
  for (int k = n - 1; k >= 0; --k) {
    q[static_cast<size_t>(k)] = acc;
    acc = acc * root + c[static_cast<size_t>(k)];
  }
  return {ComplexPoly(std::move(q)), acc};
}

std::pair<int, ComplexPoly> strip_zero_roots(const ComplexPoly& f) {
  if (f.is_zero()) throw std::domain_error("strip_zero_roots: zero polynomial");
  auto c = f.coeffs();
  size_t m = 0;
  while (m < c.size() && c[m] == Complex{0.0}) ++m;
  std::vector<Complex> g(c.begin() + static_cast<long>(m), c.end());
  return {static_cast<int>(m), ComplexPoly(std::move(g))};
}

ComplexPoly derivative(const ComplexPoly& f) {
  if (f.degree() < 1) return ComplexPoly{};
  auto c = f.coeffs();
  std::vector<Complex> d(c.size() - 1);
  for (size_t n = 1; n < c.size(); ++n) d[n - 1] = c[n] * static_cast<double>(n);
  return ComplexPoly(std::move(d));
}

double residual_scale(const ComplexPoly& f, Complex z) {
  double sum = 0.0;
  for (Complex c : f.coeffs()) sum += std::abs(c);
  return sum * std::pow(std::max(1.0, std::abs(z)), f.degree());
}

}  // namespace ginter
