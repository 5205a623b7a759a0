#include <doctest.h>

#include <algorithm>

#include "ginter/real_roots.hpp"
#include "testutil.hpp"

using namespace ginter;
using namespace testutil;

TEST_CASE("real_roots_in: quadratics") {
  const auto r1 = real_roots_in(rpoly({-1.0, 0.0, 2.0}), -1.0, 1.0);  // 2c^2 - 1
  REQUIRE(r1.size() == 2);
  CHECK(r1[0] == doctest::Approx(-std::sqrt(0.5)).epsilon(1e-12));
  CHECK(r1[1] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));

  CHECK(real_roots_in(rpoly({1.0, 0.0, 1.0}), -1.0, 1.0).empty());
}

TEST_CASE("real_roots_in: cubic built from known factors") {
  // (c - 0.3)(c + 0.7)(c - 0.9), coefficients via independent expansion
  const ComplexPoly f = expand_from_roots({0.3, -0.7, 0.9});
  std::vector<double> coeffs;
  for (int k = 0; k <= 3; ++k) coeffs.push_back(f.coeff(k).real());
  const auto roots = real_roots_in(RealPoly(coeffs), -1.0, 1.0);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == doctest::Approx(-0.7).epsilon(1e-12));
  CHECK(roots[1] == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(roots[2] == doctest::Approx(0.9).epsilon(1e-12));
}

TEST_CASE("real_roots_in: domain errors") {
  CHECK_THROWS_AS(real_roots_in(RealPoly{}, -1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(real_roots_in(rpoly({1.0, 1.0}), 1.0, -1.0), std::domain_error);
  CHECK(real_roots_in(rpoly({5.0}), -1.0, 1.0).empty());
}

TEST_CASE("real_roots_in: only roots strictly inside the interval") {
  // roots at -2, 0.5, 3; only 0.5 lies in (-1, 1)
  const ComplexPoly f = expand_from_roots({-2.0, 0.5, 3.0});
  std::vector<double> coeffs;
  for (int k = 0; k <= 3; ++k) coeffs.push_back(f.coeff(k).real());
  const auto roots = real_roots_in(RealPoly(coeffs), -1.0, 1.0);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("real_roots_in: double root reported once") {
  // (c - 0.5)^2 = c^2 - c + 0.25
  const auto roots = real_roots_in(rpoly({0.25, -1.0, 1.0}), -1.0, 1.0);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0] == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("real_roots_in: random polynomials with planted roots") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(uniform01(rng) * 7);
    std::vector<Complex> planted;
    std::vector<double> inside;
    for (int k = 0; k < n; ++k) {
      double r = 0.0;
      bool ok = false;
      while (!ok) {
        r = 2.4 * uniform_pm1(rng);
        ok = true;
        for (Complex prev : planted) {
          if (std::abs(r - prev.real()) < 0.05) ok = false;
        }
        if (std::abs(std::abs(r) - 1.0) < 0.02) ok = false;  // keep clear of endpoints
      }
      planted.push_back(r);
      if (-1.0 < r && r < 1.0) inside.push_back(r);
    }
    const ComplexPoly f = expand_from_roots(planted);
    std::vector<double> coeffs;
    for (int k = 0; k <= n; ++k) coeffs.push_back(f.coeff(k).real());
    const auto roots = real_roots_in(RealPoly(coeffs), -1.0, 1.0);
    std::sort(inside.begin(), inside.end());
    REQUIRE(roots.size() == inside.size());
    for (size_t i = 0; i < roots.size(); ++i) {
      CHECK(roots[i] == doctest::Approx(inside[i]).epsilon(1e-10));
    }
  }
}

TEST_CASE("count_real_roots_in matches planted counts") {
  const ComplexPoly f = expand_from_roots({-0.9, -0.1, 0.2, 1.7});
  std::vector<double> coeffs;
  for (int k = 0; k <= 4; ++k) coeffs.push_back(f.coeff(k).real());
  const RealPoly p(coeffs);
  CHECK(count_real_roots_in(p, -1.0, 1.0) == 3);
  CHECK(count_real_roots_in(p, 0.0, 2.0) == 2);
  CHECK(count_real_roots_in(p, -3.0, 3.0) == 4);
}
