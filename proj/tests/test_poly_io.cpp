#include <doctest.h>

#include <sstream>

#include "ginter/poly_io.hpp"
#include "testutil.hpp"

using namespace ginter;
using namespace testutil;

TEST_CASE("read_poly: real and complex lines, comments, blanks") {
  std::istringstream in(
      "# quadratic\n"
      "1\n"
      "\n"
      "0 -2.5  # middle coefficient\n"
      "1\n");
  const ComplexPoly p = read_poly(in);
  REQUIRE(p.degree() == 2);
  CHECK(p.coeff(0) == Complex{1.0});
  CHECK(p.coeff(1) == Complex(0.0, -2.5));
  CHECK(p.coeff(2) == Complex{1.0});
}

TEST_CASE("read_poly: diagnostics carry line numbers") {
  std::istringstream bad("1\nx2\n");
  try {
    read_poly(bad);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }

  std::istringstream extra("1 2 3\n");
  CHECK_THROWS_AS(read_poly(extra), ParseError);

  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(read_poly(empty), ParseError);

  std::istringstream inf("1\ninf\n");
  CHECK_THROWS_AS(read_poly(inf), ParseError);
}

TEST_CASE("write/read round-trip is bit-exact") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(uniform01(rng) * 10);
    std::vector<Complex> c(static_cast<size_t>(n) + 1);
    const bool real = trial % 2 == 0;
    for (auto& x : c) {
      // Awkward magnitudes on purpose.
      const double scale = std::pow(10.0, 12.0 * uniform_pm1(rng));
      x = real ? Complex(uniform_pm1(rng) * scale)
               : Complex(uniform_pm1(rng) * scale, uniform_pm1(rng) * scale);
    }
    c.back() = 1.0;
    const ComplexPoly p = cpoly(std::move(c));

    std::istringstream in(poly_to_string(p));
    const ComplexPoly q = read_poly(in);
    REQUIRE(q.degree() == p.degree());
    for (int k = 0; k <= p.degree(); ++k) {
      CHECK(q.coeff(k).real() == p.coeff(k).real());
      CHECK(q.coeff(k).imag() == p.coeff(k).imag());
    }
  }
}

TEST_CASE("format_double shortest round-trip") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-0.0) == "-0");
  CHECK(format_double(1.0) == "1");
  const double x = 0.30000000000000004;
  CHECK(format_double(x) != "0.3");
}
