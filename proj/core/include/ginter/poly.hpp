// gauss-interleave: polynomial root finding via interleaved zero sets.
#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ginter {

using Complex = std::complex<double>;

/// Real-coefficient polynomial, stored ascending: coeffs[n] multiplies x^n.
/// Normalized form has a nonzero last entry unless the polynomial is
/// identically zero (empty coefficient vector).
class RealPoly {
 public:
  RealPoly() = default;
  explicit RealPoly(std::vector<double> coeffs);

  static RealPoly zero() { return RealPoly{}; }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the normalized polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const double> coeffs() const { return coeffs_; }
  double coeff(int n) const {
    return (n >= 0 && n < static_cast<int>(coeffs_.size())) ? coeffs_[n] : 0.0;
  }
  double leading() const;

  double eval(double x) const;
  Complex eval(Complex z) const;
  RealPoly derivative() const;

  /// Largest |coefficient|; 0 for the zero polynomial.
  double max_abs_coeff() const;

 private:
  std::vector<double> coeffs_;
};

/// Complex-coefficient polynomial, ascending order, same normalization rule
/// as RealPoly. Non-finite coefficients are rejected at construction.
class ComplexPoly {
 public:
  ComplexPoly() = default;
  explicit ComplexPoly(std::vector<Complex> coeffs);
  explicit ComplexPoly(const RealPoly& p);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  Complex coeff(int n) const {
    return (n >= 0 && n < static_cast<int>(coeffs_.size())) ? coeffs_[n]
                                                            : Complex{0.0};
  }
  Complex leading() const;

  /// True when every coefficient has |Im| <= tol * max|coeff|.
  bool is_real(double tol = 1e-14) const;
  /// Drops imaginary parts; intended for polynomials that pass is_real().
  RealPoly real_part() const;

  bool is_monic(double tol = 1e-12) const;

 private:
  std::vector<Complex> coeffs_;
};

/// Horner evaluation of p at z.
Complex eval(const ComplexPoly& p, Complex z);

/// Divides through by the leading coefficient. Throws std::domain_error on
/// the zero polynomial.
ComplexPoly monicize(const ComplexPoly& p);
RealPoly monicize(const RealPoly& p);

/// Coefficientwise complex conjugate.
ComplexPoly conjugate_poly(const ComplexPoly& f);

/// The real-coefficient product f * conj_poly(f), degree 2*deg(f). Cross
/// terms are accumulated with compensated summation; a residual imaginary
/// part above 1e-14 of the coefficient scale is an internal-consistency
/// failure and throws std::logic_error.
RealPoly realify(const ComplexPoly& f);

struct DeflationResult {
  ComplexPoly quotient;
  Complex remainder;  // f(root); diagnostic, not fatal
};

/// Synthetic division of f by (z - root).
DeflationResult deflate(const ComplexPoly& f, Complex root);

/// Writes f = z^m * g with g(0) != 0 (exact zero test) and returns (m, g).
std::pair<int, ComplexPoly> strip_zero_roots(const ComplexPoly& f);

/// Formal derivative.
ComplexPoly derivative(const ComplexPoly& f);

/// Backward-error scale for residual tests: sum |c_n| * max(1,|z|)^N.
double residual_scale(const ComplexPoly& f, Complex z);

}  // namespace ginter
