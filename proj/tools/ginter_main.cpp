// ginter: locate polynomial roots by descending interleaved zero structures
// of Re f and Im f on circles or horizontal lines until two zero-curves
// collide; the collision point is a root.
#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ginter/circle_slice.hpp"
#include "ginter/curve_trace.hpp"
#include "ginter/descent.hpp"
#include "ginter/line_slice.hpp"
#include "ginter/log.hpp"
#include "ginter/oracle.hpp"
#include "ginter/poly.hpp"
#include "ginter/poly_io.hpp"
#include "ginter/serialize.hpp"

namespace {

using namespace ginter;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitSearch = 2;
constexpr int kExitOracle = 3;
constexpr int kExitMismatch = 4;

struct RunConfig {
  std::string method = "circle";  // circle | line | both
  DescentConfig descent;
  std::string format = "plain";  // json | csv | plain
  uint64_t seed = 42;
  std::string out_path;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(cfg.out_path);
  if (!out) throw std::runtime_error("cannot write to " + cfg.out_path);
  out << text;
}

ComplexPoly load_poly(const std::string& path) { return read_poly_file(path); }

// Circle pipeline wants a monic real polynomial; complex input goes through
// the conjugate product first.
RealPoly circle_input(const ComplexPoly& f) {
  ComplexPoly fm = f.is_monic() ? f : monicize(f);
  if (fm.is_real()) return fm.real_part();
  log_info("nonreal coefficients: circle family runs on the conjugate product f*conj(f)");
  return realify(fm);
}

Method parse_single_method(const std::string& m) {
  if (m == "line") return Method::line;
  return Method::circle;
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

ComplexPoly random_monic(std::mt19937_64& rng, int degree, bool real_coeffs) {
  std::vector<Complex> c(static_cast<size_t>(degree) + 1);
  for (int k = 0; k < degree; ++k) {
    if (real_coeffs) {
      c[static_cast<size_t>(k)] = 2.0 * uniform01(rng) - 1.0;
    } else {
      double re = 0.0, im = 0.0;
      do {
        re = 2.0 * uniform01(rng) - 1.0;
        im = 2.0 * uniform01(rng) - 1.0;
      } while (re * re + im * im > 1.0);
      c[static_cast<size_t>(k)] = Complex(re, im);
    }
  }
  c.back() = 1.0;
  return ComplexPoly(std::move(c));
}

int cmd_roots(const std::string& path, const RunConfig& cfg) {
  ComplexPoly f = load_poly(path);
  if (f.degree() < 1) {
    std::cerr << "error: nonconstant polynomial required\n";
    return kExitInput;
  }
  const Method method = parse_single_method(cfg.method);
  std::vector<RootReport> reports = find_all_roots(f, method, cfg.descent);

  if (cfg.format == "json") {
    emit(cfg, roots_to_json(reports));
  } else if (cfg.format == "csv") {
    emit(cfg, roots_to_csv(reports));
  } else {
    std::ostringstream os;
    for (const RootReport& rep : reports) {
      os << format_double(rep.root.real()) << (rep.root.imag() < 0 ? " - " : " + ")
         << format_double(std::abs(rep.root.imag())) << "i"
         << "   residual=" << format_double(rep.residual) << "   method="
         << method_name(rep.method) << '\n';
    }
    emit(cfg, os.str());
  }
  return kExitOk;
}

int cmd_slices(const std::string& path, double value, const RunConfig& cfg) {
  ComplexPoly f = load_poly(path);
  if (f.degree() < 1) {
    std::cerr << "error: nonconstant polynomial required\n";
    return kExitInput;
  }
  std::string text;
  if (cfg.method == "line") {
    ComplexPoly fm = f.is_monic() ? f : monicize(f);
    LineSection sec = line_zeros(fm, value);
    text = to_json(sec);
  } else {
    if (value <= 0.0) {
      std::cerr << "error: circle slices need a positive radius\n";
      return kExitInput;
    }
    RealPoly g = circle_input(f);
    if (g.coeff(0) == 0.0) {
      std::cerr << "error: f(0) = 0; strip zero roots first\n";
      return kExitInput;
    }
    CircleSection sec = circle_zeros(g, value);
    text = to_json(sec);
  }
  emit(cfg, text);
  return kExitOk;
}

int cmd_scan(const std::string& path, double from, double to, int steps, const RunConfig& cfg) {
  if (steps < 2) {
    std::cerr << "error: at least 2 steps required\n";
    return kExitInput;
  }
  if (!(from < to)) {
    std::cerr << "error: empty scan range\n";
    return kExitInput;
  }
  ComplexPoly f = load_poly(path);
  if (f.degree() < 1) {
    std::cerr << "error: nonconstant polynomial required\n";
    return kExitInput;
  }

  struct Row {
    double s;
    bool interleaving;
    double min_gap;
  };
  std::vector<Row> rows;
  if (cfg.method == "line") {
    ComplexPoly fm = f.is_monic() ? f : monicize(f);
    for (int k = 0; k < steps; ++k) {
      const double y = from + (to - from) * k / (steps - 1);
      LineSection sec = line_zeros(fm, y);
      rows.push_back({y, sec.interleaving, sec.min_gap});
    }
  } else {
    RealPoly g = circle_input(f);
    for (int k = 0; k < steps; ++k) {
      const double r = from + (to - from) * k / (steps - 1);
      if (r <= 0.0) {
        std::cerr << "error: circle scan range must be positive\n";
        return kExitInput;
      }
      CircleSection sec = circle_zeros(g, r);
      rows.push_back({r, sec.interleaving, sec.min_gap});
    }
  }

  std::ostringstream os;
  if (cfg.format == "json") {
    os << "{\n  \"schema_version\": " << kSchemaVersion << ",\n  \"rows\": [\n";
    for (size_t i = 0; i < rows.size(); ++i) {
      os << "    {\"param\": " << format_double(rows[i].s)
         << ", \"interleaving\": " << (rows[i].interleaving ? "true" : "false")
         << ", \"min_gap\": ";
      if (std::isfinite(rows[i].min_gap)) {
        os << format_double(rows[i].min_gap);
      } else {
        os << "null";
      }
      os << "}" << (i + 1 < rows.size() ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
  } else if (cfg.format == "csv") {
    os << "param,interleaving,min_gap\n";
    for (const Row& row : rows) {
      os << format_double(row.s) << ',' << (row.interleaving ? "true" : "false") << ',';
      if (std::isfinite(row.min_gap)) os << format_double(row.min_gap);
      os << '\n';
    }
  } else {
    for (const Row& row : rows) {
      os << format_double(row.s) << "  " << (row.interleaving ? "interleaving    " : "not-interleaving")
         << "  min_gap=";
      if (std::isfinite(row.min_gap)) {
        os << format_double(row.min_gap);
      } else {
        os << "-";
      }
      os << '\n';
    }
  }
  emit(cfg, os.str());
  return kExitOk;
}

int cmd_trace(const std::string& path, const std::vector<double>& bbox, int resolution,
              const RunConfig& cfg) {
  if (cfg.out_path.empty()) {
    std::cerr << "error: trace requires --out\n";
    return kExitInput;
  }
  ComplexPoly f = load_poly(path);
  if (f.degree() < 1) {
    std::cerr << "error: nonconstant polynomial required\n";
    return kExitInput;
  }
  CurveSet cs = trace(f, {bbox[0], bbox[1], bbox[2], bbox[3]}, resolution);

  RealPoly g = circle_input(f);
  const double r_star = dominance_radius(g);
  bool has_boundary = false;
  double boundary = 0.0;
  if (g.coeff(0) != 0.0) {
    try {
      CircleFamily fam(g, cfg.descent);
      Bracket br = bracket_boundary(fam, cfg.descent);
      br = bisect_bracket(fam, br, cfg.descent.s_tol, cfg.descent);
      boundary = br.good;
      has_boundary = true;
    } catch (const SearchFailure&) {
      has_boundary = false;
    }
  }

  const std::filesystem::path base(cfg.out_path);
  const auto csv_path = std::filesystem::path(base).replace_extension(".csv");
  const auto json_path = std::filesystem::path(base).replace_extension(".json");
  {
    std::ofstream out(csv_path);
    if (!out) throw std::runtime_error("cannot write to " + csv_path.string());
    out << curves_to_csv(cs);
  }
  {
    std::ofstream out(json_path);
    if (!out) throw std::runtime_error("cannot write to " + json_path.string());
    out << to_json(cs, r_star, has_boundary, boundary);
  }
  std::cerr << "wrote " << csv_path.string() << " and " << json_path.string() << '\n';
  return kExitOk;
}

struct VerifyOptions {
  std::string poly_path;
  int random_count = 0;
  int min_degree = 2;
  int max_degree = 10;
  double tol = 1e-6;
};

int cmd_verify(const VerifyOptions& opt, const RunConfig& cfg) {
  std::vector<ComplexPoly> polys;
  std::vector<std::string> labels;
  if (!opt.poly_path.empty()) {
    polys.push_back(load_poly(opt.poly_path));
    labels.push_back(opt.poly_path);
  }
  if (opt.random_count > 0) {
    std::mt19937_64 rng(cfg.seed);
    for (int k = 0; k < opt.random_count; ++k) {
      const int span = opt.max_degree - opt.min_degree + 1;
      const int degree = opt.min_degree + static_cast<int>(uniform01(rng) * span);
      polys.push_back(random_monic(rng, std::min(degree, opt.max_degree), false));
      labels.push_back("random[" + std::to_string(k) + "]");
    }
  }
  if (polys.empty()) {
    std::cerr << "error: verify needs a polynomial file or --random COUNT\n";
    return kExitInput;
  }

  std::vector<Method> methods;
  if (cfg.method == "both") {
    methods = {Method::circle, Method::line};
  } else {
    methods = {parse_single_method(cfg.method)};
  }

  bool all_matched = true;
  std::ostringstream os;
  const bool json = cfg.format == "json";
  if (json) os << "{\n  \"schema_version\": " << kSchemaVersion << ",\n  \"entries\": [\n";
  for (size_t i = 0; i < polys.size(); ++i) {
    const ComplexPoly& f = polys[i];
    if (f.degree() < 1) {
      std::cerr << "error: nonconstant polynomial required (" << labels[i] << ")\n";
      return kExitInput;
    }
    std::vector<Complex> oracle = aberth_roots(f);
    if (json) {
      os << "    {\"poly\": \"" << labels[i] << "\", \"degree\": " << f.degree() << ", \"methods\": {";
    } else {
      os << labels[i] << " (degree " << f.degree() << ")\n";
    }
    for (size_t mi = 0; mi < methods.size(); ++mi) {
      const Method method = methods[mi];
      std::vector<RootReport> reports = find_all_roots(f, method, cfg.descent);
      std::vector<Complex> mine;
      mine.reserve(reports.size());
      for (const RootReport& rep : reports) mine.push_back(rep.root);
      RootMatch match = match_root_sets(mine, oracle, opt.tol);
      all_matched = all_matched && match.matched;
      if (json) {
        os << "\"" << method_name(method) << "\": {\"matched\": "
           << (match.matched ? "true" : "false")
           << ", \"max_distance\": " << format_double(match.max_distance) << "}"
           << (mi + 1 < methods.size() ? ", " : "");
      } else {
        os << "  " << method_name(method) << ": " << (match.matched ? "matched" : "NOT MATCHED")
           << "  max_distance=" << format_double(match.max_distance) << '\n';
      }
    }
    if (json) os << "}}" << (i + 1 < polys.size() ? "," : "") << "\n";
  }
  if (json) {
    os << "  ],\n  \"all_matched\": " << (all_matched ? "true" : "false") << "\n}\n";
  } else {
    os << (all_matched ? "all matched" : "MISMATCH") << '\n';
  }
  emit(cfg, os.str());
  return all_matched ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polynomial roots from interleaved Re/Im zero structures"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  RunConfig cfg;
  app.add_option("--method", cfg.method, "slice family: circle | line | both")
      ->check(CLI::IsMember({"circle", "line", "both"}))
      ->capture_default_str();
  app.add_option("--gap-tol", cfg.descent.gap_tol, "collision gap threshold")
      ->check(CLI::PositiveNumber);
  app.add_option("--s-tol", cfg.descent.s_tol, "boundary bisection tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--res-tol", cfg.descent.res_tol, "root residual acceptance")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format: json | csv | plain")
      ->check(CLI::IsMember({"json", "csv", "plain"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized commands")->capture_default_str();
  app.add_option("--out", cfg.out_path, "write output to this path");

  std::string poly_path;
  auto* roots = app.add_subcommand("roots", "find all roots of a polynomial");
  roots->add_option("polyfile", poly_path, "polynomial file")->required();

  double slice_value = 1.0;
  auto* slices = app.add_subcommand("slices", "dump one circle/line slice structure");
  slices->add_option("polyfile", poly_path, "polynomial file")->required();
  slices->add_option("value", slice_value, "radius r or height y")->required();

  double scan_from = 0.0, scan_to = 0.0;
  int scan_steps = 16;
  auto* scan = app.add_subcommand("scan", "tabulate interleaving across a parameter range");
  scan->add_option("polyfile", poly_path, "polynomial file")->required();
  scan->add_option("--from", scan_from, "range start")->required();
  scan->add_option("--to", scan_to, "range end")->required();
  scan->add_option("--steps", scan_steps, "number of samples")->capture_default_str();

  std::vector<double> bbox{-1.5, 1.5, -1.5, 1.5};
  int resolution = 400;
  auto* trace_cmd = app.add_subcommand("trace", "export Re f = 0 and Im f = 0 as polylines");
  trace_cmd->add_option("polyfile", poly_path, "polynomial file")->required();
  trace_cmd->add_option("--bbox", bbox, "x_min x_max y_min y_max")->expected(4);
  trace_cmd->add_option("--resolution", resolution, "grid cells per axis")->capture_default_str();

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "compare descent roots against the oracle");
  verify->add_option("polyfile", vopt.poly_path, "polynomial file");
  verify->add_option("--random", vopt.random_count, "number of random polynomials");
  verify->add_option("--min-degree", vopt.min_degree, "random degree lower bound");
  verify->add_option("--max-degree", vopt.max_degree, "random degree upper bound");
  verify->add_option("--tol", vopt.tol, "root match tolerance")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (roots->parsed()) return cmd_roots(poly_path, cfg);
    if (slices->parsed()) return cmd_slices(poly_path, slice_value, cfg);
    if (scan->parsed()) return cmd_scan(poly_path, scan_from, scan_to, scan_steps, cfg);
    if (trace_cmd->parsed()) return cmd_trace(poly_path, bbox, resolution, cfg);
    if (verify->parsed()) return cmd_verify(vopt, cfg);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const SearchFailure& e) {
    std::cerr << "search failure: " << e.what() << '\n';
    return kExitSearch;
  } catch (const OracleFailure& e) {
    std::cerr << "oracle failure: " << e.what() << '\n';
    return kExitOracle;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
