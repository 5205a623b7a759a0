#include "ginter/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace ginter {

std::vector<Complex> aberth_roots(const ComplexPoly& f, int max_sweeps) {
  if (f.degree() < 1) throw std::domain_error("aberth_roots: nonconstant polynomial required");

  auto [m, g0] = strip_zero_roots(f);
  std::vector<Complex> roots(static_cast<size_t>(m), Complex{0.0});
  if (g0.degree() == 0) return roots;

  const ComplexPoly g = monicize(g0);
  const ComplexPoly dg = derivative(g);
  const int n = g.degree();

  double radius = 0.0;
  for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(g.coeff(k)));
  radius += 1.0;

  std::vector<Complex> z(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n + 0.4;
    z[static_cast<size_t>(k)] = std::polar(radius, angle);
  }

  // Iterate to update stagnation; the residual bound below is the contract.
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool all_stagnant = true;
    for (int k = 0; k < n; ++k) {
      Complex& zk = z[static_cast<size_t>(k)];
      const Complex fz = eval(g, zk);
      if (fz == Complex{0.0}) continue;
      Complex dz = eval(dg, zk);
      if (dz == Complex{0.0}) dz = Complex(1e-300, 0.0);
      const Complex w = fz / dz;
      Complex repulse = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        Complex diff = zk - z[static_cast<size_t>(j)];
        if (diff == Complex{0.0}) diff = Complex(1e-14 * radius, 1e-14 * radius);
        repulse += 1.0 / diff;
      }
      const Complex denom = 1.0 - w * repulse;
      if (denom == Complex{0.0}) {
        zk += Complex(1e-8 * radius, 1e-8 * radius);
        all_stagnant = false;
        continue;
      }
      const Complex step = w / denom;
      zk -= step;
      if (std::abs(step) > 1e-15 * (1.0 + std::abs(zk))) all_stagnant = false;
    }
    if (all_stagnant) break;
  }

  double worst_rel = 0.0;
  for (Complex zk : z) {
    worst_rel = std::max(worst_rel, std::abs(eval(g, zk)) / residual_scale(g, zk));
  }
  if (worst_rel > 1e-10) {
    std::ostringstream os;
    os << "aberth_roots: no convergence after " << max_sweeps
       << " sweeps (worst relative residual " << worst_rel << ")";
    throw OracleFailure(os.str());
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

RootMatch match_root_sets(std::span<const Complex> a, std::span<const Complex> b, double tol) {
  if (a.size() != b.size()) throw std::domain_error("match_root_sets: size mismatch");
  RootMatch match;
  const int n = static_cast<int>(a.size());
  if (n == 0) {
    match.matched = true;
    return match;
  }

  // Greedy: repeatedly take the closest unmatched pair.
  std::vector<int> pair_of_a(static_cast<size_t>(n), -1);
  std::vector<bool> used_b(static_cast<size_t>(n), false);
  for (int round = 0; round < n; ++round) {
    double best = std::numeric_limits<double>::infinity();
    int bi = -1, bj = -1;
    for (int i = 0; i < n; ++i) {
      if (pair_of_a[static_cast<size_t>(i)] >= 0) continue;
      for (int j = 0; j < n; ++j) {
        if (used_b[static_cast<size_t>(j)]) continue;
        const double d = std::abs(a[static_cast<size_t>(i)] - b[static_cast<size_t>(j)]);
        if (d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    }
    pair_of_a[static_cast<size_t>(bi)] = bj;
    used_b[static_cast<size_t>(bj)] = true;
  }

  // Local swap refinement on the bottleneck objective.
  auto dist = [&](int i, int j) {
    return std::abs(a[static_cast<size_t>(i)] - b[static_cast<size_t>(j)]);
  };
  for (int pass = 0; pass < 100; ++pass) {
    bool improved = false;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const int pi = pair_of_a[static_cast<size_t>(i)];
        const int pj = pair_of_a[static_cast<size_t>(j)];
        const double cur = std::max(dist(i, pi), dist(j, pj));
        const double alt = std::max(dist(i, pj), dist(j, pi));
        if (alt < cur) {
          std::swap(pair_of_a[static_cast<size_t>(i)], pair_of_a[static_cast<size_t>(j)]);
          improved = true;
        }
      }
    }
    if (!improved) break;
  }

  for (int i = 0; i < n; ++i) {
    const int j = pair_of_a[static_cast<size_t>(i)];
    match.pairing.emplace_back(i, j);
    match.max_distance = std::max(match.max_distance, dist(i, j));
  }
  match.matched = match.max_distance <= tol;
  return match;
}

std::vector<double> residual_spectrum(const ComplexPoly& f, std::span<const Complex> roots) {
  std::vector<double> out;
  out.reserve(roots.size());
  for (Complex z : roots) out.push_back(std::abs(eval(f, z)));
  return out;
}

}  // namespace ginter
