#include "ginter/real_roots.hpp"

#include <algorithm>
#include <cmath>

namespace ginter {

namespace {

constexpr double kIsolationWidth = 1e-6;
constexpr double kRootAccuracy = 1e-13;
constexpr double kLeadTrim = 1e-12;   // relative cutoff for leading remainder coefficients
constexpr double kChainZero = 1e-13;  // remainder max-norm below this ends the chain

double horner(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double max_abs(const std::vector<double>& c) {
  double m = 0.0;
  for (double v : c) m = std::max(m, std::abs(v));
  return m;
}

// rem(a, b) by long division; b must have a nonzero leading coefficient.
std::vector<double> poly_rem(std::vector<double> a, const std::vector<double>& b) {
  const size_t db = b.size() - 1;
  const double lead = b.back();
  while (a.size() > db) {
    const double q = a.back() / lead;
    const size_t shift = a.size() - 1 - db;
    for (size_t i = 0; i < db; ++i) a[shift + i] -= q * b[i];
    a.pop_back();
  }
  return a;
}

}  // namespace

namespace detail {

SturmChain::SturmChain(const RealPoly& p) {
  std::vector<double> s0(p.coeffs().begin(), p.coeffs().end());
  const double norm0 = max_abs(s0);
  for (double& v : s0) v /= norm0;
  seq_.push_back(s0);
  if (s0.size() <= 1) return;

  std::vector<double> s1(s0.size() - 1);
  for (size_t n = 1; n < s0.size(); ++n) s1[n - 1] = s0[n] * static_cast<double>(n);
  const double norm1 = max_abs(s1);
  for (double& v : s1) v /= norm1;
  seq_.push_back(s1);

  while (seq_.back().size() > 1) {
    std::vector<double> r = poly_rem(seq_[seq_.size() - 2], seq_.back());
    for (double& v : r) v = -v;
    const double norm = max_abs(r);
    if (norm <= kChainZero) break;  // gcd reached (numerically)
    while (r.size() > 1 && std::abs(r.back()) <= kLeadTrim * norm) r.pop_back();
    for (double& v : r) v /= norm;
    seq_.push_back(std::move(r));
  }
}

int SturmChain::variations(double x) const {
  int count = 0;
  int prev = 0;  // last nonzero sign
  for (const auto& poly : seq_) {
    const double v = horner(poly, x);
    const int s = (v > 0.0) - (v < 0.0);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace detail

namespace {

struct Isolator {
  const RealPoly& p;
  const RealPoly dp;
  const detail::SturmChain chain;
  std::vector<double> out;

  explicit Isolator(const RealPoly& poly) : p(poly), dp(poly.derivative()), chain(poly) {}

  // Safeguarded Newton within a sign-change bracket. Accuracy is absolute
  // for moderate roots, ulp-limited for huge ones.
  double bisect_newton(double lo, double hi) const {
    double flo = p.eval(lo);
    double x = 0.5 * (lo + hi);
    const double acc = std::max(kRootAccuracy, 4e-16 * std::max(std::abs(lo), std::abs(hi)));
    for (int it = 0; it < 200 && hi - lo > acc; ++it) {
      const double fx = p.eval(x);
      if (fx == 0.0) return x;
      if ((fx > 0) == (flo > 0)) {
        lo = x;
        flo = fx;
      } else {
        hi = x;
      }
      const double d = dp.eval(x);
      double xn = (d != 0.0) ? x - fx / d : 0.5 * (lo + hi);
      if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
      x = xn;
    }
    return x;
  }

  // Newton on p/p', which has simple zeros at roots of any multiplicity.
  double modified_newton(double x, double lo, double hi) const {
    const RealPoly ddp = dp.derivative();
    for (int it = 0; it < 60; ++it) {
      const double fx = p.eval(x);
      if (fx == 0.0) break;
      const double d1 = dp.eval(x);
      const double denom = d1 * d1 - fx * ddp.eval(x);
      if (denom == 0.0) break;
      const double step = fx * d1 / denom;
      const double xn = std::clamp(x - step, lo, hi);
      if (std::abs(xn - x) < 0.25 * kRootAccuracy) {
        x = xn;
        break;
      }
      x = xn;
    }
    return x;
  }

  // Exactly one distinct root (any multiplicity) in (lo, hi].
  double isolate_single(double lo, double hi, int vlo) {
    const double flo = p.eval(lo);
    const double fhi = p.eval(hi);
    if (flo != 0.0 && fhi != 0.0 && (flo > 0) != (fhi > 0)) return bisect_newton(lo, hi);
    // Even multiplicity: shrink by Sturm counts, then polish.
    const double shrink_acc = std::max(1e-10, 4e-16 * std::max(std::abs(lo), std::abs(hi)));
    while (hi - lo > shrink_acc) {
      const double mid = 0.5 * (lo + hi);
      const int vmid = chain.variations(mid);
      if (vlo - vmid >= 1) {
        hi = mid;
      } else {
        lo = mid;
        vlo = vmid;
      }
    }
    return modified_newton(0.5 * (lo + hi), lo, hi);
  }

  void subdivide(double lo, double hi, int vlo, int vhi) {
    const int n = vlo - vhi;
    if (n <= 0) return;
    if (n == 1) {
      out.push_back(isolate_single(lo, hi, vlo));
      return;
    }
    if (hi - lo <= kIsolationWidth) {
      // Cluster: one representative per sign-change cluster.
      const double flo = p.eval(lo);
      const double fhi = p.eval(hi);
      if (flo != 0.0 && fhi != 0.0 && (flo > 0) != (fhi > 0)) {
        out.push_back(bisect_newton(lo, hi));
      } else {
        out.push_back(modified_newton(0.5 * (lo + hi), lo, hi));
      }
      return;
    }
    double mid = 0.5 * (lo + hi);
    if (p.eval(mid) == 0.0) mid += (hi - lo) * 1e-12;
    if (!(mid > lo && mid < hi)) {  // fp-exhausted interval: treat as cluster
      out.push_back(lo);
      return;
    }
    const int vmid = chain.variations(mid);
    subdivide(lo, mid, vlo, vmid);
    subdivide(mid, hi, vmid, vhi);
  }
};

}  // namespace

std::vector<double> real_roots_in(const RealPoly& p, double lo, double hi) {
  if (p.is_zero()) throw std::domain_error("real_roots_in: zero polynomial");
  if (!(lo < hi)) throw std::domain_error("real_roots_in: empty interval");
  if (p.degree() == 0) return {};

  // Nudge off exact endpoint roots; the contract is the open interval.
  if (p.eval(lo) == 0.0) lo = std::nextafter(lo, hi);
  if (p.eval(hi) == 0.0) hi = std::nextafter(hi, lo);

  Isolator iso(p);
  iso.subdivide(lo, hi, iso.chain.variations(lo), iso.chain.variations(hi));
  std::sort(iso.out.begin(), iso.out.end());
  std::erase_if(iso.out, [&](double x) { return !(x > lo && x < hi); });
  return iso.out;
}

int count_real_roots_in(const RealPoly& p, double lo, double hi) {
  if (p.is_zero()) throw std::domain_error("count_real_roots_in: zero polynomial");
  if (!(lo < hi)) throw std::domain_error("count_real_roots_in: empty interval");
  if (p.degree() == 0) return 0;
  detail::SturmChain chain(p);
  return chain.count(lo, hi);
}

}  // namespace ginter
