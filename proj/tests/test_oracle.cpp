#include <doctest.h>

#include <cmath>

#include "ginter/oracle.hpp"
#include "testutil.hpp"

using namespace ginter;
using namespace testutil;

TEST_CASE("aberth_roots") {
  SUBCASE("z^2 + 1") {
    const auto roots = aberth_roots(cpoly({1.0, 0.0, 1.0}));
    REQUIRE(roots.size() == 2);
    CHECK(multiset_distance(roots, {Complex(0.0, 1.0), Complex(0.0, -1.0)}) < 1e-10);
  }
  SUBCASE("product of (z - k), k = 1..5") {
    const ComplexPoly f = expand_from_roots({1.0, 2.0, 3.0, 4.0, 5.0});
    const auto roots = aberth_roots(f);
    REQUIRE(roots.size() == 5);
    CHECK(multiset_distance(roots, {Complex{1.0}, Complex{2.0}, Complex{3.0}, Complex{4.0},
                                    Complex{5.0}}) < 1e-8);
  }
  SUBCASE("z^3 - 1 gives the cube roots of unity") {
    const auto roots = aberth_roots(cpoly({-1.0, 0.0, 0.0, 1.0}));
    const double s = std::sqrt(3.0) / 2.0;
    CHECK(multiset_distance(roots, {Complex{1.0}, Complex(-0.5, s), Complex(-0.5, -s)}) < 1e-10);
  }
  SUBCASE("zero roots are stripped and returned") {
    const auto roots = aberth_roots(cpoly({0.0, 0.0, 1.0, 0.0, 1.0}));  // z^2 (z^2 + 1)
    REQUIRE(roots.size() == 4);
    CHECK(roots[0] == Complex{0.0});
    CHECK(roots[1] == Complex{0.0});
  }
  CHECK_THROWS_AS(aberth_roots(cpoly({3.0})), std::domain_error);
}

TEST_CASE("aberth residuals meet the oracle tolerance") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(uniform01(rng) * 9);
    const ComplexPoly f = random_monic_complex(rng, n);
    const auto roots = aberth_roots(f);
    REQUIRE(static_cast<int>(roots.size()) == n);
    for (Complex z : roots) {
      CHECK(std::abs(eval(f, z)) <= 1e-10 * residual_scale(f, z));
    }
  }
}

TEST_CASE("match_root_sets") {
  const Complex i{0.0, 1.0};
  SUBCASE("permutation matches at distance zero") {
    const std::vector<Complex> a{i, -i};
    const std::vector<Complex> b{-i, i};
    const RootMatch m = match_root_sets(a, b, 1e-9);
    CHECK(m.matched);
    CHECK(m.max_distance == 0.0);
    CHECK(m.pairing.size() == 2);
  }
  SUBCASE("small perturbation within tolerance") {
    const std::vector<Complex> a{Complex{1.0}};
    const std::vector<Complex> b{Complex{1.0 + 1e-7}};
    CHECK(match_root_sets(a, b, 1e-6).matched);
  }
  SUBCASE("distance 1 does not match at 1e-6") {
    const std::vector<Complex> a{Complex{1.0}};
    const std::vector<Complex> b{Complex{2.0}};
    const RootMatch m = match_root_sets(a, b, 1e-6);
    CHECK_FALSE(m.matched);
    CHECK(m.max_distance == doctest::Approx(1.0));
  }
  SUBCASE("size mismatch is a domain error") {
    const std::vector<Complex> a{Complex{1.0}};
    const std::vector<Complex> b{};
    CHECK_THROWS_AS(match_root_sets(a, b, 1e-6), std::domain_error);
  }
  SUBCASE("swap refinement beats pure greedy on a crossing pattern") {
    // Greedy grabs (0, 0.9) first and strands 1.0 against 0.0.
    const std::vector<Complex> a{Complex{0.0}, Complex{1.0}};
    const std::vector<Complex> b{Complex{0.9}, Complex{0.1}};
    const RootMatch m = match_root_sets(a, b, 1.0);
    CHECK(m.max_distance == doctest::Approx(0.1));
  }
}

TEST_CASE("residual_spectrum") {
  const ComplexPoly f = cpoly({1.0, 0.0, 1.0});
  const Complex i{0.0, 1.0};
  const auto spec1 = residual_spectrum(f, std::vector<Complex>{i, -i});
  CHECK(spec1[0] == doctest::Approx(0.0));
  CHECK(spec1[1] == doctest::Approx(0.0));
  const auto spec2 = residual_spectrum(f, std::vector<Complex>{Complex{1.0}});
  CHECK(spec2[0] == doctest::Approx(2.0));
}

TEST_CASE("oracle self-consistency: reconstruction from found roots") {
  std::mt19937_64 rng(13579);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 3 + static_cast<int>(uniform01(rng) * 6);
    // Plant well-separated roots (pairwise distance >= 0.1).
    std::vector<Complex> planted;
    while (static_cast<int>(planted.size()) < n) {
      const Complex z = 2.0 * unit_disk(rng);
      bool ok = true;
      for (Complex w : planted) {
        if (std::abs(z - w) < 0.12) ok = false;
      }
      if (ok) planted.push_back(z);
    }
    const ComplexPoly f = expand_from_roots(planted);
    const auto found = aberth_roots(f);
    const ComplexPoly rebuilt = expand_from_roots(found);
    double scale = 0.0;
    for (int k = 0; k <= n; ++k) scale = std::max(scale, std::abs(f.coeff(k)));
    for (int k = 0; k <= n; ++k) {
      CHECK(std::abs(rebuilt.coeff(k) - f.coeff(k)) <= 1e-6 * scale);
    }
  }
}
