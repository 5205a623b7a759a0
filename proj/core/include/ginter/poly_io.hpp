#pragma once

#include <iosfwd>
#include <string>

#include "ginter/poly.hpp"

namespace ginter {

/// Malformed polynomial text; carries the 1-based line number.
struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

/// Shortest decimal representation that round-trips the exact double.
std::string format_double(double x);

/// Polynomial text format: one coefficient per line, ascending degree, each
/// line `re` or `re im` (whitespace separated). `#` starts a comment, blank
/// lines are skipped. Throws ParseError with a line number on bad input.
ComplexPoly read_poly(std::istream& in);
ComplexPoly read_poly_file(const std::string& path);

/// Inverse of read_poly; real-coefficient polynomials are written one value
/// per line, otherwise `re im`. Round-trips bit-exactly.
void write_poly(std::ostream& out, const ComplexPoly& p);
std::string poly_to_string(const ComplexPoly& p);

}  // namespace ginter
