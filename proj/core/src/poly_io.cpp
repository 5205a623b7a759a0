#include "ginter/poly_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace ginter {

std::string format_double(double x) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, r.ptr);
}

namespace {

bool parse_double(const std::string& tok, double& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto r = std::from_chars(first, last, out);
  return r.ec == std::errc{} && r.ptr == last;
}

}  // namespace

ComplexPoly read_poly(std::istream& in) {
  std::vector<Complex> coeffs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok_re, tok_im, extra;
    if (!(ls >> tok_re)) continue;  // blank or comment-only line
    double re = 0.0, im = 0.0;
    if (!parse_double(tok_re, re)) throw ParseError(lineno, "expected a number, got '" + tok_re + "'");
    if (ls >> tok_im) {
      if (!parse_double(tok_im, im)) throw ParseError(lineno, "expected a number, got '" + tok_im + "'");
      if (ls >> extra) throw ParseError(lineno, "trailing token '" + extra + "'");
    }
    if (!std::isfinite(re) || !std::isfinite(im)) throw ParseError(lineno, "coefficient is not finite");
    coeffs.emplace_back(re, im);
  }
  if (coeffs.empty()) throw ParseError(lineno, "no coefficients found");
  return ComplexPoly(std::move(coeffs));
}

ComplexPoly read_poly_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open polynomial file: " + path);
  return read_poly(in);
}

void write_poly(std::ostream& out, const ComplexPoly& p) {
  bool all_real = true;
  for (Complex c : p.coeffs()) {
    if (c.imag() != 0.0) {
      all_real = false;
      break;
    }
  }
  for (Complex c : p.coeffs()) {
    out << format_double(c.real());
    if (!all_real) out << ' ' << format_double(c.imag());
    out << '\n';
  }
}

std::string poly_to_string(const ComplexPoly& p) {
  std::ostringstream os;
  write_poly(os, p);
  return os.str();
}

}  // namespace ginter
